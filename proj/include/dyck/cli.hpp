#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/bignat.hpp"
#include "dyck/catalan.hpp"
#include "dyck/oracle.hpp"
#include "dyck/triangle.hpp"

namespace dyck::cli {

enum class OutputFormat { kPretty, kJson, kCsv };

// Accepts "pretty", "json", "csv". Throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// All commands throw CapExceeded before writing anything when a size is above
// its cap.
void cmd_triangle(std::size_t i_max, OutputFormat format, std::ostream& out,
                  std::size_t cap = kDefaultTableCap);
void cmd_decompose(std::size_t n, OutputFormat format, std::ostream& out,
                   std::size_t cap = kDefaultClosedFormCap);
void cmd_convolution(std::size_t n_max, std::size_t j_max, OutputFormat format, std::ostream& out,
                     std::size_t cap = kDefaultMatrixCap);
void cmd_enumerate(std::size_t n, OutputFormat format, std::ostream& out,
                   std::size_t cap = kDefaultOracleCap);

// Test hook: adds 1 to the closed-form term t_{n,k} before the sum-of-squares
// check.
struct TermFault {
  std::size_t n = 0;
  std::size_t k = 0;
};

struct VerifyOptions {
  std::size_t max_n = 64;
  std::size_t oracle_max_n = 10;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::optional<TermFault> fault;
};

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct Mismatch {
  std::string check;
  std::string where;  // e.g. "n=7" or "i=10 j=4"
  BigNat expected;
  BigNat got;
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::size_t oracle_max_n = 0;
  std::vector<CheckTally> checks;
  std::optional<Mismatch> first_mismatch;

  bool ok() const;
};

// Runs, in order: closed-form sum of squares for n <= max_n, the triangle
// recurrence against binom(i, k) - binom(i, k - 1) for i <= 2 * oracle_max_n,
// the brute-force midpoint histogram against the squared column, and the
// column-sum identity for every abscissa of each n-triangle, n <= oracle_max_n.
VerifyReport run_verify(const VerifyOptions& options);

void render_verify(const VerifyReport& report, OutputFormat format, std::ostream& out);

// Renders the report and returns kExitOk or kExitVerifyFailed.
int cmd_verify(const VerifyOptions& options, OutputFormat format, std::ostream& out);

// Full command line entry point for `dyck-squares`; returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyck::cli
