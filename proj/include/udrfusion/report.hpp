#pragma once

// Reports behind the command-line tool: single-instance analyses, parameter
// scans, verification grids, and their JSON / CSV encodings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "udrfusion/abelian.hpp"
#include "udrfusion/cohomology.hpp"
#include "udrfusion/deformation.hpp"
#include "udrfusion/dihedral.hpp"
#include "udrfusion/fusion.hpp"

namespace udrfusion {

inline constexpr const char* kToolVersion = "udrfusion 0.1.0";

using Json = nlohmann::ordered_json;

// -- check producers not owned by the deformation module ---------------------

/// Closed-form orbits equal brute-force orbits, stabilizers included.
VerificationReport check_prop48(const DihedralParams& params, int i0);
/// Orbit census equals {1: 1, k: p-1, 2k: (p-1)(p+1-k)/(2k)} and sums to p^2.
VerificationReport check_cor49(const DihedralParams& params, int i0);
/// For every j: d1 in {0,1}, d2 = d1 + 1, d1 = 1 iff T(theta_j) = theta_i0.
VerificationReport check_lemma46(const DihedralParams& params, int i0);
/// The presentation-based H^1 computation matches d1 for every j.
VerificationReport check_oracle_h1(const DihedralParams& params, int i0);

// -- dihedral analysis -------------------------------------------------------

struct RepRow {
  int j = 0;
  int gcd = 0;
  RepLabel t;
  bool in_omega = false;
  bool maximal = false;
  CohomologyDims dims;
  UdrClass udr = UdrClass::Zp;
  Subgroup kernel;
};

struct AnalysisReport {
  DihedralParams params;
  int i0;
  bool center_trivial = false;
  std::vector<int> omega;
  FusionOrbitSet orbits;
  FusionNumbers fusion_numbers;
  std::vector<RepRow> reps;
  std::vector<VerificationReport> checks;
};

AnalysisReport analyze_dihedral(const DihedralParams& params, int i0);
Json to_json(const AnalysisReport& report);
/// Per-representation table, one row per j.
std::string to_csv(const AnalysisReport& report);

// -- abelian analysis --------------------------------------------------------

struct AbelianRepRow {
  std::vector<int> character;  // exponent vector of V
  CohomologyDims dims;
  UdrClass udr = UdrClass::Zp;
};

struct AbelianAnalysisReport {
  AbelianParams params;
  std::vector<int> theta1_exponents;
  std::vector<int> theta2_exponents;
  CharacterPair pair;
  std::int64_t fixed_count = 0;
  FusionOrbitSet orbits;
  FusionNumbers fusion_numbers;
  std::vector<AbelianRepRow> reps;
  std::vector<VerificationReport> checks;
};

AbelianAnalysisReport analyze_abelian(const AbelianParams& params,
                                      const std::vector<int>& theta1_exponents,
                                      const std::vector<int>& theta2_exponents);
Json to_json(const AbelianAnalysisReport& report);
std::string to_csv(const AbelianAnalysisReport& report);

// -- scans -------------------------------------------------------------------

struct ScanRow {
  int n = 0;
  std::int64_t p = 0;
  int i0 = 0;
  int k = 0;
  bool in_omega = false;
  bool determinable = false;
  std::string signature;
};

/// Rows for n in [n_min, n_max], the `primes_per_n` smallest valid primes,
/// and every i0; sorted by (n, p, i0).
std::vector<ScanRow> scan_dihedral(int n_min, int n_max, int primes_per_n);
Json scan_to_json(const std::vector<ScanRow>& rows);
std::string scan_to_csv(const std::vector<ScanRow>& rows);

// -- verification grids ------------------------------------------------------

inline const std::vector<std::string> kCheckNames = {
    "thm42", "thm43", "thm11", "lemma410", "cor34", "prop48", "cor49", "lemma46", "oracle-h1"};

/// Default grid bound for a check: 12 for cohomology/orbit checks, 30 for
/// thm11, 40 for lemma410.
int default_n_max(const std::string& check);

/// Runs one named check (or "all") over its parameter grid. Throws
/// ParameterError for an unknown name.
std::vector<VerificationReport> run_verification(const std::string& check,
                                                 std::optional<int> n_max);

/// Determinability table for even n in [4, n_max] over the two smallest primes.
struct DeterminabilityRow {
  int n = 0;
  std::vector<std::int64_t> primes;
  std::vector<bool> determinable;  // one per prime
  bool predicate = false;
  std::optional<std::pair<int, int>> witness;  // from the smallest prime
};
std::vector<DeterminabilityRow> determinability_table(int n_max);

Json to_json(const VerificationReport& report, bool with_parameters);
/// "PASS thm42 n=5 p=11 omega=3 i0=1", failures followed by their witness.
std::string to_text(const VerificationReport& report);

}  // namespace udrfusion
