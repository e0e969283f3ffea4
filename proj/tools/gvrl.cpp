#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gvrl/cli.hpp"

namespace {

// Commands read stdin / write stdout unless --input / --output name files.
// Binary sides (containers, raw RLE data) open their files in binary mode;
// on this platform stdin/stdout already pass bytes through untouched.
struct StreamPair {
    std::ifstream in_file;
    std::ofstream out_file;
    std::istream* in = &std::cin;
    std::ostream* out = &std::cout;

    bool open(const std::string& in_path, const std::string& out_path, bool binary_in,
              bool binary_out) {
        if (!in_path.empty()) {
            in_file.open(in_path, binary_in ? std::ios::in | std::ios::binary : std::ios::in);
            if (!in_file) {
                std::cerr << "gvrl: cannot open input file " << in_path << '\n';
                return false;
            }
            in = &in_file;
        }
        if (!out_path.empty()) {
            out_file.open(out_path,
                          binary_out ? std::ios::out | std::ios::binary : std::ios::out);
            if (!out_file) {
                std::cerr << "gvrl: cannot open output file " << out_path << '\n';
                return false;
            }
            out = &out_file;
        }
        return true;
    }
};

void add_io_options(CLI::App* cmd, std::string& in_path, std::string& out_path) {
    cmd->add_option("--input", in_path, "input file (default: stdin)");
    cmd->add_option("--output", out_path, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal run-length codes for geometric sources"};
    app.require_subcommand(1);
    int exit_code = 0;

    // params
    double params_p = 0.0;
    auto* params = app.add_subcommand("params", "print the code parameters for a given p");
    params->add_option("--p", params_p, "geometric success probability in (0,1)")->required();
    params->callback([&] { exit_code = gvrl::cli::cmd_params(params_p, std::cout, std::cerr); });

    // encode / decode
    std::string enc_in, enc_out;
    double enc_p = 0.0;
    std::uint64_t enc_m = 0;
    auto* encode = app.add_subcommand("encode", "encode one integer per line into a container");
    auto* enc_popt = encode->add_option("--p", enc_p, "choose the optimal m for this p");
    auto* enc_mopt = encode->add_option("--m", enc_m, "use this group size directly");
    enc_popt->excludes(enc_mopt);
    enc_mopt->excludes(enc_popt);
    add_io_options(encode, enc_in, enc_out);
    encode->callback([&] {
        if (!*enc_popt && !*enc_mopt)
            throw CLI::RequiredError("encode requires one of --p / --m");
        StreamPair io;
        if (!io.open(enc_in, enc_out, false, true)) {
            exit_code = 1;
            return;
        }
        std::optional<double> p;
        std::optional<std::uint64_t> m;
        if (*enc_popt) p = enc_p;
        if (*enc_mopt) m = enc_m;
        exit_code = gvrl::cli::cmd_encode(*io.in, *io.out, std::cerr, p, m);
    });

    std::string dec_in, dec_out;
    auto* decode = app.add_subcommand("decode", "decode a container back to text");
    add_io_options(decode, dec_in, dec_out);
    decode->callback([&] {
        StreamPair io;
        if (!io.open(dec_in, dec_out, true, false)) {
            exit_code = 1;
            return;
        }
        exit_code = gvrl::cli::cmd_decode(*io.in, *io.out, std::cerr);
    });

    // rle encode / rle decode
    auto* rle = app.add_subcommand("rle", "run-length code raw bit streams");
    rle->require_subcommand(1);

    std::string rle_enc_in, rle_enc_out, rle_p = "auto";
    auto* rle_enc = rle->add_subcommand("encode", "compress raw bytes as coded zero-run lengths");
    rle_enc->add_option("--p", rle_p, "bit density in (0,1), or \"auto\" to estimate");
    add_io_options(rle_enc, rle_enc_in, rle_enc_out);
    rle_enc->callback([&] {
        StreamPair io;
        if (!io.open(rle_enc_in, rle_enc_out, true, true)) {
            exit_code = 1;
            return;
        }
        exit_code = gvrl::cli::cmd_rle_encode(*io.in, *io.out, std::cerr, rle_p);
    });

    std::string rle_dec_in, rle_dec_out;
    auto* rle_dec = rle->add_subcommand("decode", "reconstruct the original bytes");
    add_io_options(rle_dec, rle_dec_in, rle_dec_out);
    rle_dec->callback([&] {
        StreamPair io;
        if (!io.open(rle_dec_in, rle_dec_out, true, true)) {
            exit_code = 1;
            return;
        }
        exit_code = gvrl::cli::cmd_rle_decode(*io.in, *io.out, std::cerr);
    });

    // analyze
    auto* analyze = app.add_subcommand("analyze", "expected-length and redundancy reports");
    analyze->require_subcommand(1);

    double an_p = 0.0;
    auto* explen = analyze->add_subcommand("explen", "expected length at one p");
    explen->add_option("--p", an_p, "geometric success probability in (0,1)")->required();
    explen->callback(
        [&] { exit_code = gvrl::cli::cmd_analyze_explen(an_p, std::cout, std::cerr); });

    double tbl_min = 0.0, tbl_max = 0.0;
    int tbl_points = 0;
    bool tbl_log = false;
    auto* table = analyze->add_subcommand("table", "CSV sweep over a p range");
    table->add_option("--p-min", tbl_min, "lowest p")->required();
    table->add_option("--p-max", tbl_max, "highest p")->required();
    table->add_option("--points", tbl_points, "number of grid points")->required();
    table->add_flag("--log", tbl_log, "space the grid logarithmically");
    table->callback([&] {
        exit_code =
            gvrl::cli::cmd_analyze_table(tbl_min, tbl_max, tbl_points, tbl_log, std::cout,
                                         std::cerr);
    });

    int fz_samples = 0;
    auto* fz = analyze->add_subcommand("fz", "CSV of the periodic fluctuation over [0,1)");
    fz->add_option("--samples", fz_samples, "number of samples")->required();
    fz->callback([&] { exit_code = gvrl::cli::cmd_analyze_fz(fz_samples, std::cout, std::cerr); });

    auto* constants = analyze->add_subcommand("constants", "fluctuation and redundancy constants");
    constants->callback([&] { exit_code = gvrl::cli::cmd_analyze_constants(std::cout, std::cerr); });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
