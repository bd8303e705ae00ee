#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "dyck/cli.hpp"
#include "dyck/errors.hpp"

namespace dyck::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck triangle, Catalan sum-of-squares decomposition and brute-force checks",
               "dyck-squares"};
  app.require_subcommand(1);

  std::string format_name = "pretty";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
  };

  std::size_t i_max = 0;
  std::size_t table_cap = kDefaultTableCap;
  auto* triangle = app.add_subcommand("triangle", "Print the Dyck triangle d(i, j) up to i_max");
  triangle->add_option("i_max", i_max, "Largest position i")->required();
  triangle->add_option("--cap", table_cap, "Largest i_max accepted (memory grows ~ i_max^3 bits)");
  add_format(triangle);

  std::size_t n = 0;
  std::size_t closed_cap = kDefaultClosedFormCap;
  auto* decomp = app.add_subcommand("decompose", "Split C_n into floor(n/2)+1 squares");
  decomp->add_option("n", n, "Catalan index")->required();
  decomp->add_option("--cap", closed_cap, "Largest n accepted");
  add_format(decomp);

  std::size_t n_max = 0;
  std::size_t j_max = 0;
  std::size_t matrix_cap = kDefaultMatrixCap;
  auto* conv = app.add_subcommand("convolution", "Print the Catalan convolution matrix c(n, j)");
  conv->add_option("n_max", n_max, "Largest n")->required();
  conv->add_option("j_max", j_max, "Largest j")->required();
  conv->add_option("--cap", matrix_cap, "Largest n_max / j_max accepted");
  add_format(conv);

  std::size_t enum_n = 0;
  std::size_t oracle_cap = kDefaultOracleCap;
  auto* enumer = app.add_subcommand("enumerate", "List all Dyck words of semilength n");
  enumer->add_option("n", enum_n, "Semilength")->required();
  enumer->add_option("--cap", oracle_cap, "Largest n accepted (output has C_n lines)");
  add_format(enumer);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the triangle and brute force");
  verify->add_option("--max-n", verify_opts.max_n, "Closed-form sum-of-squares check for n <= max-n");
  verify->add_option("--oracle-max-n", verify_opts.oracle_max_n,
                     "Brute-force and triangle checks for n <= oracle-max-n");
  verify->add_option("--cap", verify_opts.oracle_cap,
                     "Largest oracle-max-n accepted (enumeration visits C_n words)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat format = parse_format(format_name);
  try {
    if (*triangle) cmd_triangle(i_max, format, out, table_cap);
    if (*decomp) cmd_decompose(n, format, out, closed_cap);
    if (*conv) cmd_convolution(n_max, j_max, format, out, matrix_cap);
    if (*enumer) cmd_enumerate(enum_n, format, out, oracle_cap);
    if (*verify) return cmd_verify(verify_opts, format, out);
  } catch (const CapExceeded& e) {
    err << "dyck-squares: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dyck::cli
