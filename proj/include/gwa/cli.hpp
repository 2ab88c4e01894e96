#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gwa/json_io.hpp"

namespace gwa::cli {

enum ExitCode { ok = 0, usage = 1, bad_input = 2, precondition = 3 };

/// Bad invocation detected after argument parsing (e.g. unreadable file).
class usage_error : public error {
 public:
  using error::error;
};

/// Result of one command: the JSON report and its plain-text rendering.
struct Report {
  Json json;
  std::string text;
};

Report type_report(const std::string& v);
Report equiv_report(const std::string& v1, const std::string& v2, bool with_witness);
Report iso_report(const std::string& v1, const std::string& v2);
Report module_report(const std::string& v, const std::string& point);
Report verma_report(const std::string& v, const std::string& nu);
Report blocks_report(const std::string& v, const std::vector<std::string>& labels,
                     const std::string& translation);
Report proj_report(const std::string& v, const std::string& nu);
Report ann_report(const std::string& v, std::int64_t n);
Report ext_report(const std::string& v, const std::string& s1, const std::string& s2);
Report quiver_report(const std::string& path, bool check, std::optional<std::size_t> vertex,
                     const std::vector<std::size_t>& pair);
Report verify_report(const std::string& v1, const std::string& v2, const std::string& path);
Report selftest_report(std::uint64_t seed, int rounds);

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gwa::cli
