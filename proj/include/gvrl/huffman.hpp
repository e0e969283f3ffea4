#pragma once

#include <cstdint>
#include <vector>

namespace gvrl::huffman {

/// Finite probability vector. Weights must be positive; the constructor
/// rescales them to sum to 1.
class DiscreteDistribution {
public:
    explicit DiscreteDistribution(std::vector<double> weights);

    const std::vector<double>& probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }

private:
    std::vector<double> probs_;
};

/// Distribution of k mod m for a geometric source: probs[r] proportional
/// to (1-p)^r, normalized over r = 0..m-1.
DiscreteDistribution remainder_distribution(double p, std::uint64_t m);

/// Huffman codeword lengths, index-aligned with the distribution. Ties in
/// the merge queue break deterministically by (weight, insertion order).
/// A single-symbol distribution gets length 0.
std::vector<unsigned> code_lengths(const DiscreteDistribution& dist);

/// Expected Huffman codeword length, sum of probs[i] * lengths[i].
double expected_length(const DiscreteDistribution& dist);

}  // namespace gvrl::huffman
