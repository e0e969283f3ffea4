#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "gvrl/codec.hpp"

namespace gvrl::container {

// On-disk layout, all integers big-endian:
//   bytes 0-3   magic "GVRL"
//   byte  4     version; low 7 bits = 1, high bit set when the last symbol
//               is an unterminated trailing run (RLE streams only)
//   bytes 5-8   m (group size), uint32
//   bytes 9-16  symbol count, uint64
//   then        codewords packed MSB-first, zero-padded to a byte boundary
//   finally     when the trailing-run bit is set: total input bit count,
//               uint64, so RLE decode can reproduce the input exactly
inline constexpr std::array<std::uint8_t, 4> kMagic = {'G', 'V', 'R', 'L'};
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::uint8_t kTrailingRunFlag = 0x80;

struct Header {
    std::uint32_t m = 1;
    std::uint64_t count = 0;
    bool trailing_run = false;
};

void write_header(std::ostream& out, const Header& header);
Header read_header(std::istream& in);

/// Encodes one nonnegative integer per text line. Blank lines are skipped;
/// anything else that does not parse as a 64-bit unsigned integer is an
/// error naming the offending line. Requires m to fit the 32-bit header
/// field.
void encode_stream(std::istream& text_in, std::ostream& bin_out, const CodeParams& params);

/// Inverse of encode_stream: emits `count` integers, one per line.
/// Padding bits and any bytes past the last codeword are ignored.
void decode_stream(std::istream& bin_in, std::ostream& text_out);

/// Zero-run decomposition of a raw bit stream (MSB-first). Each element of
/// `runs` counts the zeros before a 1 bit; when `has_trailing` is set the
/// last element is instead the zeros after the final 1 (no terminator).
struct RunSplit {
    std::vector<std::uint64_t> runs;
    bool has_trailing = false;
    std::uint64_t total_bits = 0;
};

RunSplit extract_runs(std::span<const std::uint8_t> bytes);

/// Rebuilds the exact byte stream. The split must describe a whole number
/// of bytes.
std::vector<std::uint8_t> rebuild_bits(const RunSplit& split);

struct RleStats {
    std::uint64_t total_bits = 0;
    std::uint64_t ones = 0;
    double p_used = 0.0;
    bool p_estimated = false;
    std::uint64_t m = 1;
    std::uint64_t runs = 0;
    std::uint64_t payload_bits = 0;
};

/// Run-length encodes raw bytes. With no explicit p, uses the maximum
/// likelihood estimate (#ones / #bits), which needs at least one 1 and one
/// 0 in the input.
RleStats rle_encode(std::span<const std::uint8_t> input, std::ostream& bin_out,
                    std::optional<double> p);

std::vector<std::uint8_t> rle_decode(std::istream& bin_in);

/// Reads a stream to exhaustion (works for pipes, so seek-based sizing is
/// not used).
std::vector<std::uint8_t> slurp(std::istream& in);

}  // namespace gvrl::container
