// Command-line front end. Subcommands:
//
//   cyclotomic N    coefficients of Phi_N, constant term first
//   verify N        run verification checks for one n
//   sweep           run checks over every squarefree n up to a bound
//   homology        one reduced homology group of a complex read from JSON
//   snf             invariant factors of a matrix read from triplet text
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// input error. Output is byte-identical for fixed arguments and seed;
// timings are reported as zero unless --timings is given.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cyclotopo/io.hpp"
#include "cyclotopo/verify.hpp"

namespace {

using namespace cyclotopo;

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
  std::vector<Check> out;
  for (const std::string& s : names) {
    auto c = check_from_name(s);
    if (!c) throw std::runtime_error("unknown check '" + s + "'");
    out.push_back(*c);
  }
  return out;
}

// "-" means standard input
nlohmann::json load_json(const std::string& path) {
  if (path == "-") return nlohmann::json::parse(std::cin);
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return nlohmann::json::parse(f);
}

IntMatrix load_matrix(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_matrix(f);
}

// stdout unless --out names a file
struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    os = &file;
  }
};

void emit_reports(std::ostream& os, const std::vector<VerificationReport>& reports,
                  const std::string& format, bool timings) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationReport& r : reports) arr.push_back(r.to_json(timings));
    os << arr.dump(2) << '\n';
  } else if (format == "csv") {
    os << csv_header() << '\n';
    for (const VerificationReport& r : reports) os << to_csv_row(r, timings) << '\n';
  } else {
    for (const VerificationReport& r : reports) {
      int64_t failed = 0, skipped = 0;
      for (const CheckCase& c : r.cases) {
        if (c.status == CheckStatus::fail) ++failed;
        if (c.status == CheckStatus::skipped) ++skipped;
      }
      os << "n=" << r.n << ' ' << check_name(r.check) << ": "
         << (r.passed() ? "pass" : "FAIL") << " (" << r.cases.size() << " cases, " << failed
         << " failed, " << skipped << " skipped)";
      if (timings) os << " [" << r.elapsed_ms << "ms]";
      os << '\n';
      for (const CheckCase& c : r.cases)
        if (c.status != CheckStatus::pass)
          os << "  " << status_name(c.status) << ' ' << c.id << ' ' << c.witness.dump() << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclotomic polynomial coefficients as torsion of labeled complexes"};
  app.require_subcommand(1);

  const std::vector<std::string> known_checks(kCheckNames.begin(), kCheckNames.end());

  int64_t n = 0;
  int64_t max_n = 0;
  std::vector<std::string> check_names;
  std::string format = "text";
  std::string out_path;
  std::string in_path;
  int threads = 1;
  uint64_t seed = 0;
  int d_filter = 0;
  int dim = 0;
  bool timings = false;

  CLI::App* cyclo = app.add_subcommand("cyclotomic", "print the coefficients of Phi_n");
  cyclo->add_option("n", n, "polynomial index, n >= 1")->required();
  cyclo->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cyclo->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run verification checks for one n");
  verify->add_option("n", n, "squarefree index, n >= 2")->required();
  verify->add_option("--checks", check_names, "comma-separated check names (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(known_checks));
  verify->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out_path, "write to a file instead of stdout");
  verify->add_option("--threads", threads, "concurrent checks")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for randomized sub-cases");
  verify->add_flag("--timings", timings, "report measured elapsed_ms");

  CLI::App* sw = app.add_subcommand("sweep", "run checks over all squarefree n up to a bound");
  sw->add_option("--max-n", max_n, "upper bound (inclusive)")->required();
  sw->add_option("--checks", check_names, "comma-separated check names (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(known_checks));
  sw->add_option("--d", d_filter, "only n with exactly d prime factors")
      ->check(CLI::PositiveNumber);
  sw->add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sw->add_option("--out", out_path, "write to a file instead of stdout");
  sw->add_option("--threads", threads, "concurrent checks")->check(CLI::PositiveNumber);
  sw->add_option("--seed", seed, "seed for randomized sub-cases");
  sw->add_flag("--timings", timings, "report measured elapsed_ms");

  CLI::App* hom = app.add_subcommand("homology", "reduced homology group of a complex");
  hom->add_option("--in", in_path, "complex JSON file, or - for stdin")->required();
  hom->add_option("--dim", dim, "degree, -1 through the complex dimension")->required();
  hom->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* snf = app.add_subcommand("snf", "invariant factors of an integer matrix");
  snf->add_option("--in", in_path, "matrix triplet file, or - for stdin")->required();
  snf->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Output out;
    out.open(out_path);

    if (app.got_subcommand(cyclo)) {
      IntPoly f = cyclotomic(n);
      if (format == "json")
        *out.os << poly_to_json(f).dump() << '\n';
      else
        *out.os << f.str() << '\n';
      return 0;
    }

    if (app.got_subcommand(verify)) {
      if (n < 2 || !is_squarefree(n))
        throw std::runtime_error("verify: n must be squarefree and at least 2");
      CheckOptions opt;
      opt.seed = seed;
      auto reports = run_checks(n, parse_checks(check_names), opt, threads);
      emit_reports(*out.os, reports, format, timings);
      return std::all_of(reports.begin(), reports.end(),
                         [](const VerificationReport& r) { return r.passed(); })
                 ? 0
                 : 1;
    }

    if (app.got_subcommand(sw)) {
      SweepOptions opt;
      if (sw->count("--d")) opt.d_filter = d_filter;
      opt.threads = threads;
      opt.seed = seed;
      auto reports = sweep(max_n, parse_checks(check_names), opt);
      emit_reports(*out.os, reports, format, timings);
      return std::all_of(reports.begin(), reports.end(),
                         [](const VerificationReport& r) { return r.passed(); })
                 ? 0
                 : 1;
    }

    if (app.got_subcommand(hom)) {
      SimplicialComplex X = complex_from_json(load_json(in_path));
      *out.os << reduced_homology(X, dim).str() << '\n';
      return 0;
    }

    if (app.got_subcommand(snf)) {
      SNFResult s = smith_normal_form(load_matrix(in_path));
      std::string line;
      for (int i = 0; i < s.rank; ++i) {
        if (!line.empty()) line += ' ';
        line += s.diagonal[i].str();
      }
      *out.os << line << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
