#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

namespace gvrl::cli {

// Each command reports errors on `err` and returns a process exit code
// (0 on success), so main() stays a thin argument-parsing shell.

int cmd_params(double p, std::ostream& out, std::ostream& err);

/// Exactly one of p or m must be set.
int cmd_encode(std::istream& in, std::ostream& out, std::ostream& err,
               std::optional<double> p, std::optional<std::uint64_t> m);

int cmd_decode(std::istream& in, std::ostream& out, std::ostream& err);

/// p_spec is "auto" (estimate from the input) or a number in (0, 1).
int cmd_rle_encode(std::istream& in, std::ostream& out, std::ostream& err,
                   const std::string& p_spec);

int cmd_rle_decode(std::istream& in, std::ostream& out, std::ostream& err);

int cmd_analyze_explen(double p, std::ostream& out, std::ostream& err);

int cmd_analyze_table(double p_min, double p_max, int points, bool log_spacing,
                      std::ostream& out, std::ostream& err);

int cmd_analyze_fz(int samples, std::ostream& out, std::ostream& err);

int cmd_analyze_constants(std::ostream& out, std::ostream& err);

}  // namespace gvrl::cli
