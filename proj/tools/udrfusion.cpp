// udrfusion: command-line front end.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 usage or parameter error (one diagnostic line on stderr).

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udrfusion/report.hpp"

namespace {

using namespace udrfusion;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "json";
  std::string out_file;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParameterError(flag + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw ParameterError(flag + " needs at least one integer");
  return out;
}

void emit(const Output& output, const std::string& bytes) {
  if (output.out_file.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream file(output.out_file, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + output.out_file + "' for writing");
  file << bytes;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

DihedralParams dihedral_params(int n, std::optional<std::int64_t> p) {
  if (n < 3) throw ParameterError("--n must be >= 3");
  return p ? DihedralParams::with_prime(n, *p) : DihedralParams::smallest(n);
}

void add_format(CLI::App* cmd, Output& output, std::vector<std::string> formats) {
  cmd->add_option("--format", output.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", output.out_file, "Write output to FILE instead of stdout");
}

std::string determinability_text(const std::vector<DeterminabilityRow>& rows) {
  std::ostringstream out;
  out << "determinability (even n):\n";
  for (const auto& row : rows) {
    out << "  n=" << row.n << " predicate=" << (row.predicate ? "true" : "false");
    for (std::size_t i = 0; i < row.primes.size(); ++i) {
      out << " p=" << row.primes[i] << ':' << (row.determinable[i] ? "true" : "false");
    }
    if (row.witness) out << " witness=(" << row.witness->first << ',' << row.witness->second << ')';
    out << '\n';
  }
  return out.str();
}

Json determinability_json(const std::vector<DeterminabilityRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json entry{{"n", row.n}, {"predicate", row.predicate}};
    Json per_p = Json::array();
    for (std::size_t i = 0; i < row.primes.size(); ++i) {
      per_p.push_back(Json{{"p", row.primes[i]}, {"determinable", static_cast<bool>(row.determinable[i])}});
    }
    entry["primes"] = per_p;
    entry["witness"] = row.witness ? Json::array({row.witness->first, row.witness->second}) : Json(nullptr);
    out.push_back(entry);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion orbits, cohomology dimensions and deformation rings for dihedral and abelian extensions"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  // analyze dihedral
  auto* analyze = app.add_subcommand("analyze", "Analyze a single instance");
  analyze->require_subcommand(1);
  auto* analyze_d = analyze->add_subcommand("dihedral", "G = D_2n acting through theta_i0");
  int ad_n = 0;
  std::optional<std::int64_t> ad_p;
  int ad_i0 = 0;
  Output ad_out;
  analyze_d->add_option("--n", ad_n, "n for D_2n (>= 3)")->required();
  analyze_d->add_option("--p", ad_p, "Odd prime p = 1 (mod n); default: smallest such");
  analyze_d->add_option("--i0", ad_i0, "Index of theta_i0, 1 <= i0 < n/2")->required();
  add_format(analyze_d, ad_out, {"json", "csv"});

  // analyze abelian
  auto* analyze_a = analyze->add_subcommand("abelian", "G = Z/m1 x ... x Z/mr acting diagonally");
  std::string aa_orders;
  std::optional<std::int64_t> aa_p;
  std::string aa_theta1;
  std::string aa_theta2;
  Output aa_out;
  analyze_a->add_option("--orders", aa_orders, "Cyclic orders m1,m2,...")->required();
  analyze_a->add_option("--p", aa_p, "Odd prime with exponent(G) | p-1; default: smallest such");
  analyze_a->add_option("--theta1", aa_theta1, "Exponents e1,e2,...: theta1(g_i) = zeta_i^e_i")->required();
  analyze_a->add_option("--theta2", aa_theta2, "Exponents for theta2")->required();
  add_format(analyze_a, aa_out, {"json", "csv"});

  // scan dihedral
  auto* scan = app.add_subcommand("scan", "Tabulate a parameter range");
  scan->require_subcommand(1);
  auto* scan_d = scan->add_subcommand("dihedral", "Rows for every (n, p, i0) in range");
  int sc_min = 0;
  int sc_max = 0;
  int sc_primes = 1;
  Output sc_out;
  sc_out.format = "csv";
  scan_d->add_option("--n-min", sc_min, "Smallest n (>= 3)")->required();
  scan_d->add_option("--n-max", sc_max, "Largest n")->required();
  scan_d->add_option("--primes-per-n", sc_primes, "Number of smallest primes per n")->capture_default_str();
  add_format(scan_d, sc_out, {"json", "csv"});

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification grid");
  std::string vf_check;
  std::optional<int> vf_n_max;
  Output vf_out;
  vf_out.format = "text";
  std::vector<std::string> check_choices = kCheckNames;
  check_choices.push_back("all");
  verify->add_option("--check", vf_check, "Check name")->required()->check(CLI::IsMember(check_choices));
  verify->add_option("--n-max", vf_n_max, "Grid bound for n");
  add_format(verify, vf_out, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "udrfusion: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze_d->parsed()) {
      const auto report = analyze_dihedral(dihedral_params(ad_n, ad_p), ad_i0);
      emit(ad_out, ad_out.format == "csv" ? to_csv(report) : dump(to_json(report)));
      return kExitOk;
    }
    if (analyze_a->parsed()) {
      auto orders = parse_int_list(aa_orders, "--orders");
      const auto params = aa_p ? AbelianParams(orders, *aa_p) : AbelianParams::smallest(orders);
      const auto report = analyze_abelian(params, parse_int_list(aa_theta1, "--theta1"),
                                          parse_int_list(aa_theta2, "--theta2"));
      emit(aa_out, aa_out.format == "csv" ? to_csv(report) : dump(to_json(report)));
      return kExitOk;
    }
    if (scan_d->parsed()) {
      const auto rows = scan_dihedral(sc_min, sc_max, sc_primes);
      emit(sc_out, sc_out.format == "csv" ? scan_to_csv(rows) : dump(scan_to_json(rows)));
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto reports = run_verification(vf_check, vf_n_max);
      bool all_passed = true;
      for (const auto& r : reports) all_passed = all_passed && r.passed;
      const bool with_table = vf_check == "thm11" || vf_check == "all";
      const int table_n_max = vf_check == "thm11" && vf_n_max ? *vf_n_max : default_n_max("thm11");
      if (vf_out.format == "json") {
        Json checks = Json::array();
        for (const auto& r : reports) checks.push_back(to_json(r, true));
        Json doc{{"version", kToolVersion},
                 {"params", {{"check", vf_check}, {"n_max", vf_n_max ? Json(*vf_n_max) : Json(nullptr)}}},
                 {"checks", checks},
                 {"passed", all_passed}};
        if (with_table) doc["determinability"] = determinability_json(determinability_table(table_n_max));
        emit(vf_out, dump(doc));
      } else {
        std::ostringstream text;
        std::size_t failed = 0;
        for (const auto& r : reports) {
          text << to_text(r) << '\n';
          if (!r.passed) ++failed;
        }
        if (with_table) text << determinability_text(determinability_table(table_n_max));
        text << reports.size() - failed << '/' << reports.size() << " passed\n";
        emit(vf_out, text.str());
      }
      return all_passed ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "udrfusion: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
