#include "gvrl/huffman.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <utility>

#include "gvrl/codec.hpp"

namespace gvrl::huffman {

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights)
    : probs_(std::move(weights)) {
    if (probs_.empty())
        throw std::invalid_argument("distribution needs at least one symbol");
    long double total = 0.0L;
    for (double w : probs_) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("distribution weights must be positive and finite");
        total += w;
    }
    for (double& w : probs_) w = static_cast<double>(w / total);
}

DiscreteDistribution remainder_distribution(double p, std::uint64_t m) {
    GeometricSource source(p);  // validates p
    if (m == 0) throw std::invalid_argument("group size m must be at least 1");
    std::vector<double> weights(m);
    double w = 1.0;
    const double u = 1.0 - p;
    for (std::uint64_t r = 0; r < m; ++r) {
        weights[r] = w;
        w *= u;
    }
    return DiscreteDistribution(std::move(weights));
}

std::vector<unsigned> code_lengths(const DiscreteDistribution& dist) {
    const std::size_t n = dist.size();
    if (n == 1) return {0u};

    // Node ids: leaves are 0..n-1 in input order, merged nodes follow in
    // creation order, so equal-weight ties resolve by insertion age.
    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    std::vector<std::size_t> parent(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) queue.emplace(dist.probs()[i], i);

    std::size_t next_id = n;
    while (queue.size() > 1) {
        const auto [wa, a] = queue.top();
        queue.pop();
        const auto [wb, b] = queue.top();
        queue.pop();
        parent[a] = next_id;
        parent[b] = next_id;
        queue.emplace(wa + wb, next_id);
        ++next_id;
    }

    const std::size_t root = next_id - 1;
    std::vector<unsigned> lengths(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned depth = 0;
        for (std::size_t node = i; node != root; node = parent[node]) ++depth;
        lengths[i] = depth;
    }
    return lengths;
}

double expected_length(const DiscreteDistribution& dist) {
    const std::vector<unsigned> lengths = code_lengths(dist);
    long double sum = 0.0L;
    for (std::size_t i = 0; i < dist.size(); ++i)
        sum += static_cast<long double>(dist.probs()[i]) * lengths[i];
    return static_cast<double>(sum);
}

}  // namespace gvrl::huffman
