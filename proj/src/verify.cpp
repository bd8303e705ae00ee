#include <algorithm>
#include <ostream>
#include <string>

#include <json.hpp>

#include "dyck/cli.hpp"
#include "dyck/errors.hpp"

namespace dyck::cli {
namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void begin(std::string name) { report_.checks.push_back({std::move(name), 0, 0}); }

  void compare(const BigNat& expected, const BigNat& got, const std::string& where) {
    CheckTally& tally = report_.checks.back();
    if (expected == got) {
      ++tally.passed;
      return;
    }
    ++tally.failed;
    if (!report_.first_mismatch) report_.first_mismatch = Mismatch{tally.name, where, expected, got};
  }

 private:
  VerifyReport& report_;
};

std::string at(std::size_t n) { return "n=" + std::to_string(n); }

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.oracle_max_n > options.oracle_cap) {
    throw CapExceeded("verify oracle_max_n", options.oracle_max_n, options.oracle_cap);
  }
  if (options.max_n > kDefaultClosedFormCap) {
    throw CapExceeded("verify max_n", options.max_n, kDefaultClosedFormCap);
  }

  VerifyReport report;
  report.max_n = options.max_n;
  report.oracle_max_n = options.oracle_max_n;
  Recorder rec(report);

  rec.begin("sum_of_squares");
  for (std::size_t n = 0; n <= options.max_n; ++n) {
    BigNat sum;
    for (std::size_t k = 0; k <= n / 2; ++k) {
      BigNat t = column_term(n, k);
      if (options.fault && options.fault->n == n && options.fault->k == k) t += BigNat(1);
      sum += square(t);
    }
    rec.compare(catalan(n), sum, at(n));
  }

  const std::size_t i_top = 2 * options.oracle_max_n;
  const TriangleTable table = build(i_top);

  rec.begin("recurrence_vs_binomial");
  for (std::size_t i = 0; i <= i_top; ++i) {
    for (std::size_t j = i % 2; j <= i; j += 2) {
      const auto k = static_cast<std::int64_t>((i - j) / 2);
      const auto ii = static_cast<std::int64_t>(i);
      rec.compare(binomial(ii, k) - binomial(ii, k - 1), dynamics(table, {i, j}),
                  "i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
  }

  rec.begin("midpoint_histogram");
  for (std::size_t n = 0; n <= options.oracle_max_n; ++n) {
    const auto hist = midpoint_histogram(n, options.oracle_cap);
    const auto col = column(table, n);
    for (std::size_t k = 0; k < col.size(); ++k) {
      const auto it = hist.find(n - 2 * k);
      const BigNat counted = it == hist.end() ? BigNat(0) : BigNat(it->second);
      rec.compare(square(col[k]), counted, at(n) + " k=" + std::to_string(k));
    }
  }

  rec.begin("column_sum");
  for (std::size_t n = 0; n <= options.oracle_max_n; ++n) {
    const BigNat c = catalan(n);
    for (std::size_t i = 0; i <= 2 * n; ++i) {
      BigNat sum;
      for (std::size_t j = 0; j <= std::min(i, 2 * n - i); ++j) sum += paths_through(table, n, {i, j});
      rec.compare(c, sum, at(n) + " i=" + std::to_string(i));
    }
  }

  return report;
}

void render_verify(const VerifyReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["max_n"] = report.max_n;
    doc["oracle_max_n"] = report.oracle_max_n;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
      doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    }
    if (report.first_mismatch) {
      const auto& m = *report.first_mismatch;
      doc["first_mismatch"] = {{"check", m.check},
                               {"where", m.where},
                               {"expected", m.expected.to_string()},
                               {"got", m.got.to_string()}};
    } else {
      doc["first_mismatch"] = nullptr;
    }
    doc["ok"] = report.ok();
    out << doc.dump() << '\n';
    return;
  }
  if (format == OutputFormat::kCsv) {
    out << "check,passed,failed\n";
    for (const auto& c : report.checks) out << c.name << ',' << c.passed << ',' << c.failed << '\n';
    return;
  }

  out << "verify max_n=" << report.max_n << " oracle_max_n=" << report.oracle_max_n << '\n';
  std::size_t w = 0;
  for (const auto& c : report.checks) w = std::max(w, c.name.size());
  for (const auto& c : report.checks) {
    out << c.name << std::string(w - c.name.size() + 2, ' ') << "pass=" << c.passed
        << " fail=" << c.failed << '\n';
  }
  if (report.first_mismatch) {
    const auto& m = *report.first_mismatch;
    out << "first mismatch: " << m.check << ' ' << m.where << " expected=" << m.expected
        << " got=" << m.got << '\n';
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const VerifyOptions& options, OutputFormat format, std::ostream& out) {
  const VerifyReport report = run_verify(options);
  render_verify(report, format, out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace dyck::cli
