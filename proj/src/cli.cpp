#include "gvrl/cli.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "gvrl/analysis.hpp"
#include "gvrl/codec.hpp"
#include "gvrl/container.hpp"

namespace gvrl::cli {

namespace {

// Shortest decimal form that round-trips; locale-independent, so CSV output
// is stable across environments.
std::string fmt(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

constexpr double kGoldenBound = 0.38196601125010515;  // (3 - sqrt 5) / 2

}  // namespace

int cmd_params(double p, std::ostream& out, std::ostream& err) {
    try {
        const CodeParams cp = compute_params(p);
        out << "p " << fmt(p) << '\n';
        out << "m " << cp.m << '\n';
        out << "l " << cp.l << '\n';
        out << "h " << cp.h << '\n';
        out << "q " << fmt(cp.q) << '\n';
        const double tail = std::exp(static_cast<double>(cp.m - 1) * std::log1p(-p));
        out << "bound q >= " << fmt(kGoldenBound) << ": " << (cp.q >= kGoldenBound ? "ok" : "VIOLATED")
            << " (q = " << fmt(cp.q) << ")\n";
        out << "bound (1-p)^(m-1) > 0.5: " << (tail > 0.5 ? "ok" : "VIOLATED")
            << " (value = " << fmt(tail) << ")\n";
        return 0;
    } catch (const std::exception& e) {
        err << "params: " << e.what() << '\n';
        return 1;
    }
}

int cmd_encode(std::istream& in, std::ostream& out, std::ostream& err,
               std::optional<double> p, std::optional<std::uint64_t> m) {
    try {
        if (p.has_value() == m.has_value())
            throw std::invalid_argument("exactly one of --p and --m must be given");
        const CodeParams params =
            p.has_value() ? compute_params(*p) : CodeParams::from_divisor(*m);
        container::encode_stream(in, out, params);
        return 0;
    } catch (const std::exception& e) {
        err << "encode: " << e.what() << '\n';
        return 1;
    }
}

int cmd_decode(std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        container::decode_stream(in, out);
        return 0;
    } catch (const std::exception& e) {
        err << "decode: " << e.what() << '\n';
        return 1;
    }
}

int cmd_rle_encode(std::istream& in, std::ostream& out, std::ostream& err,
                   const std::string& p_spec) {
    try {
        std::optional<double> p;
        if (p_spec != "auto") {
            double value = 0.0;
            const char* first = p_spec.data();
            const char* last = p_spec.data() + p_spec.size();
            const auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last)
                throw std::invalid_argument("--p expects \"auto\" or a number, got \"" +
                                            p_spec + "\"");
            p = value;
        }

        const std::vector<std::uint8_t> input = container::slurp(in);
        const container::RleStats stats = container::rle_encode(input, out, p);

        err << "rle: " << stats.total_bits << " bits in, " << stats.ones << " ones\n";
        err << "rle: p = " << fmt(stats.p_used)
            << (stats.p_estimated ? " (estimated as ones/bits)" : "") << ", m = " << stats.m
            << '\n';
        if (stats.runs > 0) {
            const double bits_per_run =
                static_cast<double>(stats.payload_bits) / static_cast<double>(stats.runs);
            const double h = analysis::entropy(stats.p_used);
            err << "rle: " << stats.runs << " runs -> " << stats.payload_bits
                << " payload bits (" << fmt(bits_per_run) << " bits/run)\n";
            err << "rle: entropy " << fmt(h) << " bits/run, overhead "
                << fmt(bits_per_run - h) << " bits/run\n";
        } else {
            err << "rle: 0 runs\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "rle encode: " << e.what() << '\n';
        return 1;
    }
}

int cmd_rle_decode(std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        const std::vector<std::uint8_t> bytes = container::rle_decode(in);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        return 0;
    } catch (const std::exception& e) {
        err << "rle decode: " << e.what() << '\n';
        return 1;
    }
}

int cmd_analyze_explen(double p, std::ostream& out, std::ostream& err) {
    try {
        const analysis::AnalysisRow row = analysis::analyze(p);
        out << "p " << fmt(row.p) << '\n';
        out << "m " << row.m << '\n';
        out << "exact " << fmt(row.exact_len) << '\n';
        out << "asymptotic " << fmt(row.asymptotic_len) << '\n';
        out << "entropy " << fmt(row.entropy) << '\n';
        out << "redundancy " << fmt(row.redundancy) << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "analyze explen: " << e.what() << '\n';
        return 1;
    }
}

int cmd_analyze_table(double p_min, double p_max, int points, bool log_spacing,
                      std::ostream& out, std::ostream& err) {
    try {
        if (!(p_min > 0.0) || !(p_max < 1.0) || !(p_min <= p_max))
            throw std::invalid_argument("need 0 < p-min <= p-max < 1");
        if (points < 1) throw std::invalid_argument("need at least one grid point");

        out << "p,m,l,h,exact,asymptotic,entropy,redundancy\n";
        for (int i = 0; i < points; ++i) {
            double p;
            if (points == 1) {
                p = p_min;
            } else if (log_spacing) {
                const double t = static_cast<double>(i) / (points - 1);
                p = std::exp(std::log(p_min) + t * (std::log(p_max) - std::log(p_min)));
            } else {
                const double t = static_cast<double>(i) / (points - 1);
                p = p_min + t * (p_max - p_min);
            }
            const analysis::AnalysisRow row = analysis::analyze(p);
            out << fmt(row.p) << ',' << row.m << ',' << row.l << ',' << row.h << ','
                << fmt(row.exact_len) << ',' << fmt(row.asymptotic_len) << ','
                << fmt(row.entropy) << ',' << fmt(row.redundancy) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "analyze table: " << e.what() << '\n';
        return 1;
    }
}

int cmd_analyze_fz(int samples, std::ostream& out, std::ostream& err) {
    try {
        if (samples < 1) throw std::invalid_argument("need at least one sample");
        out << "z,f\n";
        for (int i = 0; i < samples; ++i) {
            const double z = static_cast<double>(i) / samples;
            out << fmt(z) << ',' << fmt(analysis::fluctuation(z)) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "analyze fz: " << e.what() << '\n';
        return 1;
    }
}

int cmd_analyze_constants(std::ostream& out, std::ostream& err) {
    try {
        const analysis::FluctuationConstants c = analysis::compute_constants();
        out << "omega " << fmt(c.omega) << '\n';
        out << "x0 " << fmt(c.x0) << '\n';
        out << "x1 " << fmt(c.x1) << '\n';
        out << "z0 " << fmt(c.z0) << '\n';
        out << "z1 " << fmt(c.z1) << '\n';
        out << "f_min " << fmt(c.f_min) << '\n';
        out << "f_max " << fmt(c.f_max) << '\n';
        out << "redundancy_const " << fmt(c.redundancy_const) << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "analyze constants: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace gvrl::cli
