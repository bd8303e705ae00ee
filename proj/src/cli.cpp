#include "dyck/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dyck/errors.hpp"

namespace dyck::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void write_line(std::ostream& out, std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << '\n';
}

std::string csv_field(const std::string& s) { return s.empty() ? "\"\"" : s; }

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "pretty") return OutputFormat::kPretty;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

void cmd_triangle(std::size_t i_max, OutputFormat format, std::ostream& out, std::size_t cap) {
  const TriangleTable table = build(i_max, cap);

  switch (format) {
    case OutputFormat::kJson: {
      Json records = Json::array();
      for (std::size_t i = 0; i <= i_max; ++i) {
        for (std::size_t j = i % 2; j <= i; j += 2) {
          records.push_back({{"i", i}, {"j", j}, {"value", dynamics(table, {i, j}).to_string()}});
        }
      }
      out << records.dump() << '\n';
      return;
    }
    case OutputFormat::kCsv:
      out << "i,j,value\n";
      for (std::size_t i = 0; i <= i_max; ++i) {
        for (std::size_t j = i % 2; j <= i; j += 2) {
          out << i << ',' << j << ',' << dynamics(table, {i, j}) << '\n';
        }
      }
      return;
    case OutputFormat::kPretty:
      break;
  }

  // Unbalance j runs up the page, position i left to right; unreachable cells
  // stay blank.
  std::size_t width = std::to_string(i_max).size();
  for (std::size_t i = 0; i <= i_max; ++i) {
    for (const auto& v : table.row(i)) width = std::max(width, v.to_string().size());
  }
  const std::size_t label = std::max<std::size_t>(std::to_string(i_max).size(), 1);
  for (std::size_t jj = i_max + 1; jj-- > 0;) {
    std::string line = pad_left(std::to_string(jj), label) + " |";
    for (std::size_t i = 0; i <= i_max; ++i) {
      const NodeCoord node{i, jj};
      line += ' ';
      line += node.reachable() ? pad_left(dynamics(table, node).to_string(), width)
                               : std::string(width, ' ');
    }
    write_line(out, std::move(line));
  }
  write_line(out, std::string(label, ' ') + " +" + std::string((width + 1) * (i_max + 1), '-'));
  std::string axis = std::string(label, ' ') + "  ";
  for (std::size_t i = 0; i <= i_max; ++i) axis += ' ' + pad_left(std::to_string(i), width);
  write_line(out, std::move(axis));
}

void cmd_decompose(std::size_t n, OutputFormat format, std::ostream& out, std::size_t cap) {
  const Decomposition d = decompose(n, cap);
  const auto squares = d.squares();

  switch (format) {
    case OutputFormat::kJson: {
      Json doc;
      doc["n"] = n;
      doc["catalan"] = d.catalan.to_string();
      doc["terms"] = Json::array();
      doc["squares"] = Json::array();
      for (const auto& t : d.terms) doc["terms"].push_back(t.to_string());
      for (const auto& s : squares) doc["squares"].push_back(s.to_string());
      out << doc.dump() << '\n';
      return;
    }
    case OutputFormat::kCsv:
      out << "n,k,term,square\n";
      for (std::size_t k = 0; k < d.terms.size(); ++k) {
        out << n << ',' << k << ',' << d.terms[k] << ',' << squares[k] << '\n';
      }
      out << n << ",sum,," << d.catalan << '\n';
      return;
    case OutputFormat::kPretty:
      break;
  }

  const std::string term_head = "t(" + std::to_string(n) + ",k)";
  const std::string sq_head = term_head + "^2";
  std::size_t kw = std::max<std::size_t>(1, std::to_string(n / 2).size());
  std::size_t tw = term_head.size();
  std::size_t sw = sq_head.size();
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    tw = std::max(tw, d.terms[k].to_string().size());
    sw = std::max(sw, squares[k].to_string().size());
  }
  out << "n = " << n << '\n';
  out << "terms = " << d.terms.size() << '\n';
  write_line(out, pad_left("k", kw) + "  " + pad_left(term_head, tw) + "  " + pad_left(sq_head, sw));
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    write_line(out, pad_left(std::to_string(k), kw) + "  " + pad_left(d.terms[k].to_string(), tw) +
                        "  " + pad_left(squares[k].to_string(), sw));
  }
  std::ostringstream sum;
  sum << "C_" << n << " =";
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    sum << (k == 0 ? " " : " + ") << d.terms[k] << "^2";
  }
  sum << " = " << d.catalan;
  out << sum.str() << '\n';
}

void cmd_convolution(std::size_t n_max, std::size_t j_max, OutputFormat format, std::ostream& out,
                     std::size_t cap) {
  const ConvolutionMatrix m = convolution_matrix(n_max, j_max, cap);

  switch (format) {
    case OutputFormat::kJson: {
      Json records = Json::array();
      for (std::size_t j = 0; j <= j_max; ++j) {
        for (std::size_t n = 0; n <= n_max; ++n) {
          records.push_back({{"n", n}, {"j", j}, {"value", m.at(n, j).to_string()}});
        }
      }
      out << records.dump() << '\n';
      return;
    }
    case OutputFormat::kCsv:
      out << "n,j,value\n";
      for (std::size_t j = 0; j <= j_max; ++j) {
        for (std::size_t n = 0; n <= n_max; ++n) out << n << ',' << j << ',' << m.at(n, j) << '\n';
      }
      return;
    case OutputFormat::kPretty:
      break;
  }

  // n runs left to right, j downward.
  std::size_t width = std::to_string(n_max).size();
  for (std::size_t j = 0; j <= j_max; ++j) {
    for (std::size_t n = 0; n <= n_max; ++n) width = std::max(width, m.at(n, j).to_string().size());
  }
  const std::size_t label = std::max<std::size_t>(3, std::to_string(j_max).size());
  std::string head = pad_left("j\\n", label) + " |";
  for (std::size_t n = 0; n <= n_max; ++n) head += ' ' + pad_left(std::to_string(n), width);
  write_line(out, std::move(head));
  write_line(out, std::string(label, '-') + "-+" + std::string((width + 1) * (n_max + 1), '-'));
  for (std::size_t j = 0; j <= j_max; ++j) {
    std::string line = pad_left(std::to_string(j), label) + " |";
    for (std::size_t n = 0; n <= n_max; ++n) line += ' ' + pad_left(m.at(n, j).to_string(), width);
    write_line(out, std::move(line));
  }
}

void cmd_enumerate(std::size_t n, OutputFormat format, std::ostream& out, std::size_t cap) {
  const DyckWordRange words = enumerate(n, cap);
  switch (format) {
    case OutputFormat::kJson: {
      out << '[';
      bool first = true;
      for (const auto& w : words) {
        out << (first ? "" : ",") << Json(w).dump();
        first = false;
      }
      out << "]\n";
      return;
    }
    case OutputFormat::kCsv:
      out << "word\n";
      for (const auto& w : words) out << csv_field(w) << '\n';
      return;
    case OutputFormat::kPretty:
      for (const auto& w : words) out << w << '\n';
      return;
  }
}

}  // namespace dyck::cli
