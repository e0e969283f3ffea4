#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gvrl {

/// Thrown when a decoder runs out of input mid-codeword. `bits_missing()`
/// is the minimum number of further bits the failed read step required
/// (a lower bound while scanning a unary run, exact for fixed-width reads).
class TruncatedStream : public std::runtime_error {
public:
    explicit TruncatedStream(std::size_t bits_missing)
        : std::runtime_error("bit stream truncated mid-codeword; at least " +
                             std::to_string(bits_missing) + " more bit(s) needed"),
          bits_missing_(bits_missing) {}

    std::size_t bits_missing() const noexcept { return bits_missing_; }

private:
    std::size_t bits_missing_;
};

/// Growable bit sequence. Bits are stored most-significant-bit first within
/// each backing byte, which is also the wire order used by the container
/// format. Unused pad bits in the final byte are kept zero, so two strings
/// with equal contents compare equal byte-wise.
class BitString {
public:
    BitString() = default;

    /// Parses a string of '0'/'1' characters.
    static BitString from_string(std::string_view text);

    /// Adopts `nbits` bits from a byte buffer (MSB-first). Pad bits in the
    /// last byte are ignored.
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

    void push_back(bool bit);
    void append(const BitString& other);
    void append_ones(std::size_t count);
    void append_zeros(std::size_t count);

    /// Appends the low `width` bits of `value`, most significant first.
    /// `value` must fit in `width` bits.
    void append_uint(std::uint64_t value, unsigned width);

    bool bit(std::size_t index) const;

    std::size_t size() const noexcept { return nbits_; }
    bool empty() const noexcept { return nbits_ == 0; }
    void clear() noexcept;

    std::string to_string() const;

    /// Backing bytes, zero-padded to a byte boundary.
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    const std::uint8_t* data() const noexcept { return bytes_.data(); }

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

/// Cursor over a BitString. Reads throw TruncatedStream when the input
/// ends mid-read; the cursor position is unchanged on failure.
class BitReader {
public:
    explicit BitReader(const BitString& bits, std::size_t offset = 0);

    bool read_bit();
    std::uint64_t read_uint(unsigned width);

    /// Counts consecutive 1 bits and consumes the terminating 0.
    /// Scans byte-at-a-time, so long runs cost O(run/8).
    std::uint64_t read_unary_ones();

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return bits_->size() - pos_; }

private:
    const BitString* bits_;
    std::size_t pos_;
};

}  // namespace gvrl
