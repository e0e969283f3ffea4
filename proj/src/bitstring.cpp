#include "gvrl/bitstring.hpp"

#include <bit>

namespace gvrl {

BitString BitString::from_string(std::string_view text) {
    BitString out;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only '0' and '1', got '" +
                                        std::string(1, c) + "'");
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (nbits > bytes.size() * 8)
        throw std::invalid_argument("bit count " + std::to_string(nbits) +
                                    " exceeds buffer of " + std::to_string(bytes.size()) +
                                    " bytes");
    BitString out;
    const std::size_t nbytes = (nbits + 7) / 8;
    out.bytes_.assign(bytes.begin(), bytes.begin() + nbytes);
    out.nbits_ = nbits;
    // Re-establish the zero-pad invariant; callers may hand us dirty tails.
    if (nbits % 8 != 0)
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (nbits % 8));
    return out;
}

void BitString::push_back(bool bit) {
    if (nbits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (nbits_ % 8));
    ++nbits_;
}

void BitString::append(const BitString& other) {
    if (nbits_ % 8 == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        nbits_ += other.nbits_;
        return;
    }
    for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
}

void BitString::append_ones(std::size_t count) {
    while (count != 0 && nbits_ % 8 != 0) {
        push_back(true);
        --count;
    }
    bytes_.insert(bytes_.end(), count / 8, std::uint8_t{0xFF});
    nbits_ += count - count % 8;
    for (std::size_t i = 0; i < count % 8; ++i) push_back(true);
}

void BitString::append_zeros(std::size_t count) {
    while (count != 0 && nbits_ % 8 != 0) {
        push_back(false);
        --count;
    }
    bytes_.insert(bytes_.end(), count / 8, std::uint8_t{0x00});
    nbits_ += count - count % 8;
    for (std::size_t i = 0; i < count % 8; ++i) push_back(false);
}

void BitString::append_uint(std::uint64_t value, unsigned width) {
    if (width > 64)
        throw std::invalid_argument("bit width " + std::to_string(width) + " exceeds 64");
    if (width < 64 && (value >> width) != 0)
        throw std::invalid_argument("value " + std::to_string(value) +
                                    " does not fit in " + std::to_string(width) + " bits");
    for (unsigned i = width; i-- > 0;) push_back((value >> i) & 1u);
}

bool BitString::bit(std::size_t index) const {
    if (index >= nbits_)
        throw std::out_of_range("bit index " + std::to_string(index) + " >= size " +
                                std::to_string(nbits_));
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

void BitString::clear() noexcept {
    bytes_.clear();
    nbits_ = 0;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(nbits_);
    for (std::size_t i = 0; i < nbits_; ++i) out.push_back(bit(i) ? '1' : '0');
    return out;
}

BitReader::BitReader(const BitString& bits, std::size_t offset) : bits_(&bits), pos_(offset) {
    if (offset > bits.size())
        throw std::out_of_range("reader offset " + std::to_string(offset) + " past end " +
                                std::to_string(bits.size()));
}

bool BitReader::read_bit() {
    if (pos_ >= bits_->size()) throw TruncatedStream(1);
    const bool b = (bits_->data()[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    ++pos_;
    return b;
}

std::uint64_t BitReader::read_uint(unsigned width) {
    if (width > 64)
        throw std::invalid_argument("bit width " + std::to_string(width) + " exceeds 64");
    if (remaining() < width) throw TruncatedStream(width - remaining());
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i) {
        value = (value << 1) | ((bits_->data()[pos_ / 8] >> (7 - pos_ % 8)) & 1u);
        ++pos_;
    }
    return value;
}

std::uint64_t BitReader::read_unary_ones() {
    const std::uint8_t* data = bits_->data();
    const std::size_t end = bits_->size();
    std::size_t pos = pos_;
    std::uint64_t count = 0;
    while (pos < end) {
        if (pos % 8 == 0 && end - pos >= 8) {
            const std::uint8_t byte = data[pos / 8];
            if (byte == 0xFF) {
                count += 8;
                pos += 8;
                continue;
            }
            const unsigned ones = std::countl_one(byte);
            pos_ = pos + ones + 1;  // skip the run and its terminating zero
            return count + ones;
        }
        const bool b = (data[pos / 8] >> (7 - pos % 8)) & 1u;
        ++pos;
        if (!b) {
            pos_ = pos;
            return count;
        }
        ++count;
    }
    throw TruncatedStream(1);
}

}  // namespace gvrl
