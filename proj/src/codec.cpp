#include "gvrl/codec.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gvrl {

namespace {

std::string format_p(double p) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << p;
    return os.str();
}

}  // namespace

GeometricSource::GeometricSource(double p) : p_(p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("geometric parameter p must lie strictly in (0, 1), got " +
                                    format_p(p));
}

double GeometricSource::pmf(std::uint64_t k) const {
    // (1-p)^k via exp(k * log1p(-p)) stays accurate for tiny p where
    // pow(1 - p, k) would lose the low bits of 1 - p.
    return p_ * std::exp(static_cast<double>(k) * std::log1p(-p_));
}

CodeParams CodeParams::from_divisor(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("group size m must be at least 1");
    CodeParams params;
    params.m = m;
    params.l = static_cast<unsigned>(std::bit_width(m) - 1);
    params.h = m - (std::uint64_t{1} << params.l);
    params.q = std::numeric_limits<double>::quiet_NaN();
    return params;
}

CodeParams compute_params(const GeometricSource& source) {
    const double p = source.p();
    if (p < kMinParamP) {
        const double approx_m = 0.6931471805599453 / p;
        const int width = std::ilogb(approx_m) + 1;
        throw std::invalid_argument(
            "p = " + format_p(p) + " is below the supported minimum 1e-15: the optimal group "
            "size would be about " + format_p(approx_m) + " and need roughly " +
            std::to_string(width) + "-bit arithmetic, beyond the 64-bit range used here");
    }

    const long double lp = static_cast<long double>(p);
    const long double log_u = std::log1p(-lp);  // log(1-p), negative
    const long double ratio = std::log(2.0L - lp) / -log_u;

    const long double nearest = std::round(ratio);
    long double m_real;
    if (std::fabs(ratio - nearest) < 1e-12L)
        m_real = nearest;
    else
        m_real = std::ceil(ratio);
    if (m_real < 1.0L) m_real = 1.0L;

    CodeParams params = CodeParams::from_divisor(static_cast<std::uint64_t>(m_real));
    params.q = static_cast<double>(-std::expm1(static_cast<long double>(params.m) * log_u));
    return params;
}

CodeParams compute_params(double p) { return compute_params(GeometricSource(p)); }

SymbolSplit split(std::uint64_t k, const CodeParams& params) {
    return SymbolSplit{k / params.m, k % params.m};
}

BitString encode_quotient(std::uint64_t s) {
    BitString out;
    out.append_ones(s);
    out.push_back(false);
    return out;
}

namespace {

void append_remainder(std::uint64_t r, const CodeParams& params, BitString& out) {
    if (r >= params.m)
        throw std::out_of_range("remainder " + std::to_string(r) + " outside [0, " +
                                std::to_string(params.m) + ")");
    // First 2^l - h values get the short form; the rest shift up by the
    // same amount so the long forms are the lexicographically largest.
    const std::uint64_t short_count = (std::uint64_t{1} << params.l) - params.h;
    if (r < short_count)
        out.append_uint(r, params.l);
    else
        out.append_uint(r + short_count, params.l + 1);
}

}  // namespace

BitString encode_remainder(std::uint64_t r, const CodeParams& params) {
    BitString out;
    append_remainder(r, params, out);
    return out;
}

void encode_append(std::uint64_t k, const CodeParams& params, BitString& out) {
    const SymbolSplit sr = split(k, params);
    out.append_ones(sr.s);
    out.push_back(false);
    append_remainder(sr.r, params, out);
}

BitString encode(std::uint64_t k, const CodeParams& params) {
    BitString out;
    encode_append(k, params, out);
    return out;
}

std::uint64_t decode_next(BitReader& reader, const CodeParams& params) {
    const std::uint64_t s = reader.read_unary_ones();
    const std::uint64_t short_count = (std::uint64_t{1} << params.l) - params.h;
    std::uint64_t r = reader.read_uint(params.l);
    if (r >= short_count) r = ((r << 1) | (reader.read_bit() ? 1u : 0u)) - short_count;
    if (s > (std::numeric_limits<std::uint64_t>::max() - r) / params.m)
        throw std::overflow_error("decoded symbol " + std::to_string(s) + "*" +
                                  std::to_string(params.m) + " + " + std::to_string(r) +
                                  " exceeds the 64-bit range");
    return s * params.m + r;
}

DecodeResult decode(const BitString& stream, const CodeParams& params, std::size_t offset) {
    BitReader reader(stream, offset);
    const std::uint64_t value = decode_next(reader, params);
    return DecodeResult{value, reader.position() - offset};
}

}  // namespace gvrl
