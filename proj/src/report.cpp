#include "udrfusion/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace udrfusion {

namespace {

std::vector<std::pair<std::string, std::int64_t>> instance_fields(const DihedralParams& params,
                                                                  int i0) {
  return {{"n", params.n()}, {"p", params.p()}, {"omega", params.omega().value()}, {"i0", i0}};
}

VerificationReport pass(std::string name, std::vector<std::pair<std::string, std::int64_t>> fields) {
  return {std::move(name), std::move(fields), true, std::nullopt};
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Json subgroup_json(const Subgroup& g) {
  Json gens = Json::array();
  for (const auto& e : g.generators) gens.push_back(e.word());
  return Json{{"generators", gens}, {"order", g.order()}};
}

Json fusion_numbers_json(const FusionNumbers& numbers) {
  Json out = Json::object();
  for (const auto& [m, count] : numbers.counts) out[std::to_string(m)] = count;
  return out;
}

Json orbit_summary_json(const FusionOrbitSet& orbits) {
  Json reps = Json::array();
  for (const auto& o : orbits.orbits) {
    reps.push_back(Json::array({o.representative.x.value(), o.representative.y.value()}));
  }
  return Json{{"orbit_count", orbits.orbits.size()}, {"representatives", reps}};
}

std::int64_t weighted_total(const FusionNumbers& numbers) {
  std::int64_t total = 0;
  for (const auto& [m, count] : numbers.counts) total += m * count;
  return total;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

// -- check producers ---------------------------------------------------------

VerificationReport check_prop48(const DihedralParams& params, int i0) {
  auto report = pass("prop48", instance_fields(params, i0));
  const auto closed = fusion_orbits_closed_form(params, i0);
  const auto brute = fusion_orbits_bruteforce(params, i0);
  const std::int64_t k = orbit_period(params, i0);
  if (!same_partition(closed, brute)) {
    report.passed = false;
    report.witness = Witness{"closed-form orbits differ from brute force", {}};
    return report;
  }
  for (const auto& o : closed.orbits) {
    const bool size_ok = o.size == 1 || o.size == k || o.size == 2 * k;
    if (!size_ok || o.size * o.stabilizer_order != params.group_order()) {
      report.passed = false;
      report.witness = Witness{"orbit size or orbit-stabilizer product off",
                               {{"x", o.representative.x.value()},
                                {"y", o.representative.y.value()},
                                {"size", o.size},
                                {"stabilizer_order", o.stabilizer_order}}};
      return report;
    }
  }
  return report;
}

VerificationReport check_cor49(const DihedralParams& params, int i0) {
  auto report = pass("cor49", instance_fields(params, i0));
  const auto census = fusion_numbers(fusion_orbits_closed_form(params, i0));
  const auto expected = fusion_numbers_closed_form(params, i0);
  const std::int64_t total = weighted_total(census);
  if (census != expected || total != params.p() * params.p()) {
    report.passed = false;
    report.witness = Witness{"orbit census differs from the closed form",
                             {{"k", orbit_period(params, i0)}, {"weighted_total", total}}};
  }
  return report;
}

VerificationReport check_lemma46(const DihedralParams& params, int i0) {
  auto report = pass("lemma46", instance_fields(params, i0));
  for (int j = 1; params.is_irr2_index(j); ++j) {
    const auto d = dims(params, i0, j);
    const bool t_hits = t_map(params, j) == RepLabel::irr2(i0);
    const bool ok = (d.d1 == 0 || d.d1 == 1) && d.d2 == d.d1 + 1 && (d.d1 == 1) == t_hits;
    if (!ok) {
      report.passed = false;
      report.witness = Witness{"dimension table mismatch", {{"j", j}, {"d1", d.d1}, {"d2", d.d2}}};
      return report;
    }
  }
  return report;
}

VerificationReport check_oracle_h1(const DihedralParams& params, int i0) {
  auto report = pass("oracle-h1", instance_fields(params, i0));
  for (int j = 1; params.is_irr2_index(j); ++j) {
    const int oracle = d1_oracle_cocycles(params, i0, j);
    const int formula = dims(params, i0, j).d1;
    if (oracle != formula) {
      report.passed = false;
      report.witness = Witness{"cocycle count differs from fixed-point formula",
                               {{"j", j}, {"oracle", oracle}, {"formula", formula}}};
      return report;
    }
  }
  return report;
}

// -- dihedral analysis -------------------------------------------------------

AnalysisReport analyze_dihedral(const DihedralParams& params, int i0) {
  if (!params.is_irr2_index(i0)) {
    throw ParameterError("i0 = " + std::to_string(i0) + " outside [1, " +
                         std::to_string(params.n()) + "/2)");
  }
  auto orbits = fusion_orbits_closed_form(params, i0);
  auto numbers = fusion_numbers(orbits);
  AnalysisReport report{params,  i0, center_acts_trivially(params, i0), omega_set(params),
                        std::move(orbits), std::move(numbers), {}, {}};
  const auto maximal = cohomologically_maximal_set(params, i0);
  for (int j = 1; params.is_irr2_index(j); ++j) {
    RepRow row;
    row.j = j;
    row.gcd = std::gcd(j, params.n());
    row.t = t_map(params, j);
    row.in_omega = std::binary_search(report.omega.begin(), report.omega.end(), j);
    row.maximal = std::binary_search(maximal.begin(), maximal.end(), j);
    row.dims = dims(params, i0, j);
    row.udr = udr_class(params, i0, j);
    row.kernel = kernel_invariant(params, j).kernel;
    report.reps.push_back(std::move(row));
  }

  const std::int64_t p = params.p();
  if (p * p <= kBruteForceGuard) report.checks.push_back(check_prop48(params, i0));
  report.checks.push_back(check_cor49(params, i0));
  report.checks.push_back(check_lemma46(params, i0));
  if (2 * params.n() * p * p <= kCocycleOracleGuard) {
    report.checks.push_back(check_oracle_h1(params, i0));
  }
  report.checks.push_back(verify_cor_34(params, i0));
  if (in_omega(params, i0)) report.checks.push_back(verify_thm_42(params, i0));
  report.checks.push_back(verify_thm_43(params));
  if (params.n() % 2 == 0 && in_omega(params, i0)) {
    report.checks.push_back(verify_lemma_410(params.n(), i0));
  }
  report.checks.push_back(verify_thm_11(params));
  return report;
}

Json to_json(const AnalysisReport& report) {
  const auto& params = report.params;
  Json reps = Json::array();
  for (const auto& row : report.reps) {
    reps.push_back(Json{{"j", row.j},
                        {"gcd", row.gcd},
                        {"T", row.t.to_string()},
                        {"in_omega", row.in_omega},
                        {"maximal", row.maximal},
                        {"d1", row.dims.d1},
                        {"d2", row.dims.d2},
                        {"udr", notation(row.udr)},
                        {"kernel", subgroup_json(row.kernel)}});
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c, false));

  Json fusion = Json{{"k", orbit_period(params, report.i0)},
                     {"numbers", fusion_numbers_json(report.fusion_numbers)},
                     {"weighted_total", weighted_total(report.fusion_numbers)}};
  fusion.update(orbit_summary_json(report.orbits));

  return Json{{"version", kToolVersion},
              {"params",
               {{"group", "dihedral"},
                {"n", params.n()},
                {"p", params.p()},
                {"omega", params.omega().value()},
                {"i0", report.i0},
                {"omega_set", report.omega},
                {"center_acts_trivially", report.center_trivial}}},
              {"fusion", fusion},
              {"reps", reps},
              {"checks", checks}};
}

std::string to_csv(const AnalysisReport& report) {
  std::ostringstream out;
  out << "n,p,omega,i0,j,gcd,T,in_omega,maximal,d1,d2,udr\n";
  for (const auto& row : report.reps) {
    out << report.params.n() << ',' << report.params.p() << ',' << report.params.omega().value()
        << ',' << report.i0 << ',' << row.j << ',' << row.gcd << ',' << row.t.to_string() << ','
        << flag(row.in_omega) << ',' << flag(row.maximal) << ',' << row.dims.d1 << ','
        << row.dims.d2 << ',' << identifier(row.udr) << '\n';
  }
  return out.str();
}

// -- abelian analysis --------------------------------------------------------

AbelianAnalysisReport analyze_abelian(const AbelianParams& params,
                                      const std::vector<int>& theta1_exponents,
                                      const std::vector<int>& theta2_exponents) {
  CharacterPair pair{character_from_exponents(params, theta1_exponents),
                     character_from_exponents(params, theta2_exponents)};
  auto orbits = abelian_orbits_bruteforce(params, pair);
  auto numbers = fusion_numbers(orbits);
  AbelianAnalysisReport report{params, theta1_exponents, theta2_exponents, pair,
                               abelian_fixed_count(params, pair), std::move(orbits),
                               std::move(numbers), {}, {}};
  const auto dims = abelian_dims(pair);
  const auto udr = abelian_udr(pair);
  const std::vector<std::pair<std::string, std::int64_t>> fields = {{"p", params.p()},
                                                                    {"group_order", params.group_order()}};

  auto projector = pass("dims-projector", fields);
  for (const auto& exps : params.elements()) {
    report.reps.push_back({exps, dims, udr});
    const auto v = character_from_exponents(params, exps);
    const auto d = abelian_dims_projector(params, pair, v);
    if (projector.passed && d != dims) {
      projector.passed = false;
      projector.witness = Witness{"projector dimensions differ", {{"d1", d.d1}, {"d2", d.d2}}};
    }
  }

  auto fixed = pass("fixed-count", fields);
  const auto brute = abelian_fixed_count_bruteforce(params, pair);
  if (brute != report.fixed_count || report.fusion_numbers.counts[1] != report.fixed_count) {
    fixed.passed = false;
    fixed.witness = Witness{"fixed-point count mismatch", {{"formula", report.fixed_count}, {"brute", brute}}};
  }

  // Ring class <-> F_1 <-> d1: Z_p iff F_1 = 1 iff d1 = 0, and so on.
  auto prop = pass("prop411", fields);
  const std::int64_t p = params.p();
  const std::int64_t expected_fixed = dims.d1 == 0 ? 1 : dims.d1 == 1 ? p : p * p;
  const UdrClass expected_udr =
      dims.d1 == 0 ? UdrClass::Zp : dims.d1 == 1 ? UdrClass::ZpCp : UdrClass::ZpCpSquared;
  if (report.fixed_count != expected_fixed || udr != expected_udr) {
    prop.passed = false;
    prop.witness = Witness{"ring class, F_1 and d1 disagree", {{"F1", report.fixed_count}, {"d1", dims.d1}}};
  }
  report.checks = {fixed, projector, prop};
  return report;
}

Json to_json(const AbelianAnalysisReport& report) {
  Json reps = Json::array();
  for (const auto& row : report.reps) {
    reps.push_back(Json{{"j", join_ints(row.character, ':')},
                        {"d1", row.dims.d1},
                        {"d2", row.dims.d2},
                        {"udr", notation(row.udr)}});
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c, false));
  auto images = [](const Character& c) {
    Json out = Json::array();
    for (const auto& x : c.images) out.push_back(x.value());
    return out;
  };
  Json fusion = Json{{"numbers", fusion_numbers_json(report.fusion_numbers)},
                     {"fixed_count", report.fixed_count},
                     {"weighted_total", weighted_total(report.fusion_numbers)}};
  fusion.update(orbit_summary_json(report.orbits));
  return Json{{"version", kToolVersion},
              {"params",
               {{"group", "abelian"},
                {"orders", report.params.cyclic_orders()},
                {"p", report.params.p()},
                {"theta1", report.theta1_exponents},
                {"theta2", report.theta2_exponents},
                {"theta1_images", images(report.pair.theta1)},
                {"theta2_images", images(report.pair.theta2)}}},
              {"fusion", fusion},
              {"reps", reps},
              {"checks", checks}};
}

std::string to_csv(const AbelianAnalysisReport& report) {
  std::ostringstream out;
  out << "orders,p,theta1,theta2,j,d1,d2,udr\n";
  for (const auto& row : report.reps) {
    out << join_ints(report.params.cyclic_orders(), ':') << ',' << report.params.p() << ','
        << join_ints(report.theta1_exponents, ':') << ',' << join_ints(report.theta2_exponents, ':')
        << ',' << join_ints(row.character, ':') << ',' << row.dims.d1 << ',' << row.dims.d2 << ','
        << identifier(row.udr) << '\n';
  }
  return out.str();
}

// -- scans -------------------------------------------------------------------

std::vector<ScanRow> scan_dihedral(int n_min, int n_max, int primes_per_n) {
  if (n_min < 3 || n_max < n_min) {
    throw ParameterError("scan range needs 3 <= n-min <= n-max");
  }
  if (primes_per_n < 1) throw ParameterError("--primes-per-n must be >= 1");
  std::vector<ScanRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    for (std::int64_t p : smallest_primes_congruent_one(n, static_cast<std::size_t>(primes_per_n))) {
      const auto params = DihedralParams::with_prime(n, p);
      const bool determinable = fusion_determinability(params).determinable;
      for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
        rows.push_back({n, p, i0, orbit_period(params, i0), in_omega(params, i0), determinable,
                        udr_signature(params, i0).digest()});
      }
    }
  }
  return rows;
}

Json scan_to_json(const std::vector<ScanRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"n", r.n},
                       {"p", r.p},
                       {"i0", r.i0},
                       {"k", r.k},
                       {"in_omega", r.in_omega},
                       {"determinable", r.determinable},
                       {"signature", r.signature}});
  }
  return Json{{"version", kToolVersion}, {"rows", out}};
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "n,p,i0,k,in_omega,determinable,signature\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.p << ',' << r.i0 << ',' << r.k << ',' << flag(r.in_omega) << ','
        << flag(r.determinable) << ',' << r.signature << '\n';
  }
  return out.str();
}

// -- verification grids ------------------------------------------------------

int default_n_max(const std::string& check) {
  if (check == "lemma410") return 40;
  if (check == "thm11") return 30;
  return 12;
}

std::vector<VerificationReport> run_verification(const std::string& check,
                                                 std::optional<int> n_max) {
  if (check == "all") {
    std::vector<VerificationReport> out;
    for (const auto& name : kCheckNames) {
      auto part = run_verification(name, n_max);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (std::find(kCheckNames.begin(), kCheckNames.end(), check) == kCheckNames.end()) {
    throw ParameterError("unknown check '" + check + "'");
  }
  const int bound = n_max.value_or(default_n_max(check));
  if (bound < 3) throw ParameterError("--n-max must be >= 3");
  std::vector<VerificationReport> out;

  if (check == "lemma410") {
    for (int n = 4; n <= bound; n += 2) {
      for (int i0 = 2; 2 * i0 < n; i0 += 2) out.push_back(verify_lemma_410(n, i0));
    }
    return out;
  }
  if (check == "thm11") {
    for (int n = 3; n <= bound; ++n) {
      for (std::int64_t p : smallest_primes_congruent_one(n, 2)) {
        out.push_back(verify_thm_11(DihedralParams::with_prime(n, p)));
      }
    }
    return out;
  }
  for (int n = 3; n <= bound; ++n) {
    const auto params = DihedralParams::smallest(n);
    if (check == "thm43") {
      out.push_back(verify_thm_43(params));
      continue;
    }
    if (check == "oracle-h1" &&
        2 * n * params.p() * params.p() > kCocycleOracleGuard) {
      continue;
    }
    if ((check == "prop48") && params.p() * params.p() > kBruteForceGuard) continue;
    for (int i0 = 1; params.is_irr2_index(i0); ++i0) {
      if (check == "thm42") {
        if (in_omega(params, i0)) out.push_back(verify_thm_42(params, i0));
      } else if (check == "cor34") {
        out.push_back(verify_cor_34(params, i0));
      } else if (check == "prop48") {
        out.push_back(check_prop48(params, i0));
      } else if (check == "cor49") {
        out.push_back(check_cor49(params, i0));
      } else if (check == "lemma46") {
        out.push_back(check_lemma46(params, i0));
      } else if (check == "oracle-h1") {
        out.push_back(check_oracle_h1(params, i0));
      }
    }
  }
  return out;
}

std::vector<DeterminabilityRow> determinability_table(int n_max) {
  std::vector<DeterminabilityRow> rows;
  for (int n = 4; n <= n_max; n += 2) {
    DeterminabilityRow row;
    row.n = n;
    row.predicate = determinability_predicate(n);
    for (std::int64_t p : smallest_primes_congruent_one(n, 2)) {
      const auto det = fusion_determinability(DihedralParams::with_prime(n, p));
      row.primes.push_back(p);
      row.determinable.push_back(det.determinable);
      if (row.primes.size() == 1) row.witness = det.witness;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const VerificationReport& report, bool with_parameters) {
  Json witness = nullptr;
  if (report.witness) {
    witness = Json{{"what", report.witness->what}};
    for (const auto& [key, value] : report.witness->fields) witness[key] = value;
  }
  Json out = Json{{"name", report.check_name}, {"passed", report.passed}};
  if (with_parameters) {
    Json params = Json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;
    out["parameters"] = params;
  }
  out["witness"] = witness;
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASS " : "FAIL ") << report.check_name;
  for (const auto& [key, value] : report.parameters) out << ' ' << key << '=' << value;
  if (report.witness) {
    out << (report.passed ? "  [" : "\n  witness: ") << report.witness->what;
    for (const auto& [key, value] : report.witness->fields) out << ' ' << key << '=' << value;
    if (report.passed) out << ']';
  }
  return out.str();
}

}  // namespace udrfusion
