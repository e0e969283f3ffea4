#pragma once

#include <cstdint>

#include "gvrl/bitstring.hpp"

namespace gvrl {

/// Geometric distribution on k = 0, 1, 2, ... with success probability p:
/// P(k) = p * (1-p)^k. Models run lengths of zeros between ones in a
/// Bernoulli(p) bit stream.
class GeometricSource {
public:
    explicit GeometricSource(double p);

    double p() const noexcept { return p_; }
    double pmf(std::uint64_t k) const;

private:
    double p_;
};

/// Code table parameters. A symbol k splits as k = s*m + r; the quotient s
/// is sent in unary (s ones, then a zero) and the remainder r in a
/// truncated-binary code over m values: the first 2^l - h remainders take
/// l bits, the remaining 2h take l + 1 bits.
struct CodeParams {
    std::uint64_t m = 1;  // group size, >= 1
    unsigned l = 0;       // floor(log2 m)
    std::uint64_t h = 0;  // m - 2^l, number of length-(l+1) codeword pairs
    double q = 0.0;       // P(symbol < m) = 1 - (1-p)^m; NaN when built from a bare divisor

    /// Derives l and h for a given group size, with q unknown (NaN).
    static CodeParams from_divisor(std::uint64_t m);
};

struct SymbolSplit {
    std::uint64_t s = 0;
    std::uint64_t r = 0;
};

struct DecodeResult {
    std::uint64_t value = 0;
    std::size_t bits_consumed = 0;
};

/// Smallest p accepted by compute_params. Below this the optimal group size
/// no longer fits the 64-bit arithmetic used throughout.
inline constexpr double kMinParamP = 1e-15;

/// Optimal group size for a geometric source: the least integer m with
/// (1-p)^m + (1-p)^(m+1) <= 1 < (1-p)^(m-1) + (1-p)^m,
/// computed as ceil(log(2-p) / -log(1-p)). Ratios within 1e-12 of an
/// integer are snapped to it before the ceiling so boundary p values
/// (e.g. the golden-ratio point where m = 1 becomes optimal) round the
/// intended way instead of drifting on the last float bit.
CodeParams compute_params(const GeometricSource& source);
CodeParams compute_params(double p);

SymbolSplit split(std::uint64_t k, const CodeParams& params);

BitString encode_quotient(std::uint64_t s);
BitString encode_remainder(std::uint64_t r, const CodeParams& params);

BitString encode(std::uint64_t k, const CodeParams& params);

/// Appends the codeword for k to `out` without allocating a fresh string.
void encode_append(std::uint64_t k, const CodeParams& params, BitString& out);

/// Decodes one codeword starting at `offset`. Throws TruncatedStream when
/// the stream ends mid-codeword and std::overflow_error when s*m + r does
/// not fit in 64 bits.
DecodeResult decode(const BitString& stream, const CodeParams& params, std::size_t offset = 0);

/// Streaming flavor: consumes one codeword from the reader.
std::uint64_t decode_next(BitReader& reader, const CodeParams& params);

}  // namespace gvrl
