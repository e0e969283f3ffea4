#include "gvrl/container.hpp"

#include <bit>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>

namespace gvrl::container {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
    const std::uint8_t bytes[4] = {static_cast<std::uint8_t>(v >> 24),
                                   static_cast<std::uint8_t>(v >> 16),
                                   static_cast<std::uint8_t>(v >> 8),
                                   static_cast<std::uint8_t>(v)};
    out.write(reinterpret_cast<const char*>(bytes), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
    put_u32(out, static_cast<std::uint32_t>(v));
}

void read_exact(std::istream& in, std::uint8_t* dst, std::size_t n, const char* what) {
    in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw std::runtime_error(std::string("container ends before ") + what);
}

std::uint32_t get_u32(std::istream& in, const char* what) {
    std::uint8_t b[4];
    read_exact(in, b, 4, what);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

std::uint64_t get_u64(std::istream& in, const char* what) {
    const std::uint64_t hi = get_u32(in, what);
    return (hi << 32) | get_u32(in, what);
}

std::uint64_t parse_symbol(const std::string& token, std::size_t line_no) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": value \"" + token +
                                    "\" does not fit in 64 bits");
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected a nonnegative integer, got \"" + token + "\"");
    return value;
}

std::uint64_t decode_trailing_u64(std::span<const std::uint8_t> b) {
    std::uint64_t v = 0;
    for (std::uint8_t byte : b) v = (v << 8) | byte;
    return v;
}

}  // namespace

void write_header(std::ostream& out, const Header& header) {
    out.write(reinterpret_cast<const char*>(kMagic.data()), kMagic.size());
    const std::uint8_t version =
        header.trailing_run ? static_cast<std::uint8_t>(kVersion | kTrailingRunFlag) : kVersion;
    out.put(static_cast<char>(version));
    put_u32(out, header.m);
    put_u64(out, header.count);
}

Header read_header(std::istream& in) {
    std::uint8_t magic[4];
    read_exact(in, magic, 4, "the magic bytes");
    if (!std::equal(std::begin(magic), std::end(magic), kMagic.begin()))
        throw std::runtime_error("not a GVRL container (bad magic bytes)");
    std::uint8_t version;
    read_exact(in, &version, 1, "the version byte");
    if ((version & 0x7F) != kVersion)
        throw std::runtime_error("unsupported container version " +
                                 std::to_string(version & 0x7F));
    Header header;
    header.trailing_run = (version & kTrailingRunFlag) != 0;
    header.m = get_u32(in, "the group size field");
    if (header.m == 0) throw std::runtime_error("container group size m must be at least 1");
    header.count = get_u64(in, "the symbol count field");
    return header;
}

void encode_stream(std::istream& text_in, std::ostream& bin_out, const CodeParams& params) {
    if (params.m > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("group size " + std::to_string(params.m) +
                                    " does not fit the 32-bit container header field");

    BitString payload;
    std::uint64_t count = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(text_in, line)) {
        ++line_no;
        // Tolerate CRLF input and surrounding blanks; skip empty lines.
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        encode_append(parse_symbol(line.substr(begin, end - begin + 1), line_no), params,
                      payload);
        ++count;
    }

    write_header(bin_out, Header{static_cast<std::uint32_t>(params.m), count, false});
    bin_out.write(reinterpret_cast<const char*>(payload.data()),
                  static_cast<std::streamsize>(payload.bytes().size()));
}

void decode_stream(std::istream& bin_in, std::ostream& text_out) {
    const Header header = read_header(bin_in);
    const CodeParams params = CodeParams::from_divisor(header.m);
    const std::vector<std::uint8_t> body = slurp(bin_in);
    const BitString payload = BitString::from_bytes(body, body.size() * 8);
    BitReader reader(payload);
    for (std::uint64_t i = 0; i < header.count; ++i) {
        std::uint64_t value;
        try {
            value = decode_next(reader, params);
        } catch (const TruncatedStream&) {
            throw std::runtime_error("container truncated: symbol " + std::to_string(i + 1) +
                                     " of " + std::to_string(header.count) + " is incomplete");
        }
        text_out << value << '\n';
    }
}

RunSplit extract_runs(std::span<const std::uint8_t> bytes) {
    RunSplit split;
    split.total_bits = bytes.size() * 8;
    std::uint64_t current = 0;
    for (std::uint8_t byte : bytes) {
        for (int i = 7; i >= 0; --i) {
            if ((byte >> i) & 1u) {
                split.runs.push_back(current);
                current = 0;
            } else {
                ++current;
            }
        }
    }
    if (current > 0 || (split.total_bits > 0 && split.runs.empty())) {
        // Zeros after the last 1 (or an all-zero stream) form a final run
        // with no terminator.
        split.runs.push_back(current);
        split.has_trailing = true;
    }
    return split;
}

std::vector<std::uint8_t> rebuild_bits(const RunSplit& split) {
    if (split.has_trailing && split.runs.empty())
        throw std::invalid_argument("trailing-run flag set but the split holds no runs");
    BitString bits;
    const std::size_t terminated = split.runs.size() - (split.has_trailing ? 1 : 0);
    for (std::size_t i = 0; i < terminated; ++i) {
        bits.append_zeros(split.runs[i]);
        bits.push_back(true);
    }
    if (split.has_trailing) bits.append_zeros(split.runs.back());
    if (bits.size() != split.total_bits)
        throw std::invalid_argument("run lengths sum to " + std::to_string(bits.size()) +
                                    " bits but the split claims " +
                                    std::to_string(split.total_bits));
    if (bits.size() % 8 != 0)
        throw std::invalid_argument("run split does not describe a whole number of bytes");
    return bits.bytes();
}

RleStats rle_encode(std::span<const std::uint8_t> input, std::ostream& bin_out,
                    std::optional<double> p) {
    const RunSplit split = extract_runs(input);
    const std::uint64_t ones =
        split.runs.size() - (split.has_trailing ? 1 : 0);  // each terminated run ends in a 1

    RleStats stats;
    stats.total_bits = split.total_bits;
    stats.ones = ones;
    stats.runs = split.runs.size();
    stats.p_estimated = !p.has_value();

    double p_used;
    if (p.has_value()) {
        p_used = *p;
    } else {
        if (split.total_bits == 0)
            throw std::invalid_argument("cannot estimate p from empty input; pass --p");
        p_used = static_cast<double>(ones) / static_cast<double>(split.total_bits);
        if (ones == 0)
            throw std::invalid_argument(
                "input has no 1 bits, so the estimated p is 0; pass --p explicitly");
        if (ones == split.total_bits)
            throw std::invalid_argument(
                "input is all 1 bits, so the estimated p is 1; pass --p explicitly");
    }
    stats.p_used = p_used;

    const CodeParams params = compute_params(p_used);
    if (params.m > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("group size " + std::to_string(params.m) +
                                    " does not fit the 32-bit container header field");
    stats.m = params.m;

    BitString payload;
    for (std::uint64_t run : split.runs) encode_append(run, params, payload);
    stats.payload_bits = payload.size();

    write_header(bin_out, Header{static_cast<std::uint32_t>(params.m), split.runs.size(),
                                 split.has_trailing});
    bin_out.write(reinterpret_cast<const char*>(payload.data()),
                  static_cast<std::streamsize>(payload.bytes().size()));
    if (split.has_trailing) put_u64(bin_out, split.total_bits);
    return stats;
}

std::vector<std::uint8_t> rle_decode(std::istream& bin_in) {
    const Header header = read_header(bin_in);
    const CodeParams params = CodeParams::from_divisor(header.m);
    std::vector<std::uint8_t> body = slurp(bin_in);

    std::span<const std::uint8_t> payload(body);
    std::uint64_t total_bits = 0;
    if (header.trailing_run) {
        if (body.size() < 8)
            throw std::runtime_error("container ends before the bit-count trailer");
        total_bits = decode_trailing_u64(payload.subspan(body.size() - 8));
        payload = payload.first(body.size() - 8);
    }

    const BitString bits = BitString::from_bytes(payload, payload.size() * 8);
    BitReader reader(bits);
    RunSplit split;
    split.has_trailing = header.trailing_run;
    split.runs.reserve(header.count);
    for (std::uint64_t i = 0; i < header.count; ++i) {
        try {
            split.runs.push_back(decode_next(reader, params));
        } catch (const TruncatedStream&) {
            throw std::runtime_error("container truncated: run " + std::to_string(i + 1) +
                                     " of " + std::to_string(header.count) + " is incomplete");
        }
    }

    if (header.trailing_run) {
        split.total_bits = total_bits;
    } else {
        std::uint64_t bits_sum = 0;
        for (std::uint64_t run : split.runs) bits_sum += run + 1;
        split.total_bits = bits_sum;
    }

    try {
        return rebuild_bits(split);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("corrupt run-length container: ") + e.what());
    }
}

std::vector<std::uint8_t> slurp(std::istream& in) {
    std::vector<std::uint8_t> data;
    char buf[65536];
    do {
        in.read(buf, sizeof buf);
        data.insert(data.end(), buf, buf + in.gcount());
    } while (in.gcount() == static_cast<std::streamsize>(sizeof buf));
    return data;
}

}  // namespace gvrl::container
