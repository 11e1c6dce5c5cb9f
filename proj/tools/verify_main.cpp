#include <cubic/errors.hpp>
#include <cubic/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of intersection-theoretic identities for cubic hypersurfaces"};
  int n_min = 1;
  int n_max = 1;
  std::vector<std::string> suites{"all"};
  std::string format = "text";
  std::string out;
  bool serial = false;
  app.add_option("--n-min", n_min, "smallest dimension n")->required();
  app.add_option("--n-max", n_max, "largest dimension n")->required();
  app.add_option("--suite", suites, "grassmann, fano, hodge, diagonal or all")->delimiter(',');
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out, "write the report to this file instead of stdout");
  app.add_flag("--serial", serial, "run checks on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cubic::verify::RunConfig config;
  try {
    const auto fmt = format == "json" ? cubic::verify::Format::json : cubic::verify::Format::text;
    config = cubic::verify::make_config(n_min, n_max, suites, fmt,
                                        out.empty() ? std::nullopt : std::optional<std::string>(out));
  } catch (const cubic::UsageError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  const auto results =
      cubic::verify::run(config, serial ? cubic::Execution::serial : cubic::Execution::parallel);
  const std::string report = cubic::verify::emit(results, config.format);

  if (config.out) {
    std::ofstream file(*config.out);
    file << report;
    file.close();
    if (!file) {
      std::cerr << "verify: cannot write " << *config.out << "\n";
      return 3;
    }
  } else {
    std::cout << report;
  }
  return cubic::verify::exit_code(results);
}
