#include "udrfusion/deformation.hpp"

#include <algorithm>
#include <numeric>

#include "udrfusion/cohomology.hpp"
#include "udrfusion/fusion.hpp"

namespace udrfusion {

namespace {

using KernelSet = std::vector<std::vector<GroupElement>>;

KernelSet kernel_key(const DihedralParams& params, const std::vector<int>& indices) {
  KernelSet out;
  for (const auto& k : kernel_set(params, indices)) out.push_back(k.elements);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<std::string, std::int64_t>> params_fields(const DihedralParams& params) {
  return {{"n", params.n()}, {"p", params.p()}, {"omega", params.omega().value()}};
}

}  // namespace

std::string notation(UdrClass c) {
  switch (c) {
    case UdrClass::Zp:
      return "Zp";
    case UdrClass::ZpTtorsion:
      return "Zp[[t]]/(t^2,pt)";
    case UdrClass::ZpCp:
      return "Zp[Z/p]";
    case UdrClass::ZpCpSquared:
      return "Zp[Z/pxZ/p]";
  }
  return "?";
}

std::string identifier(UdrClass c) {
  switch (c) {
    case UdrClass::Zp:
      return "Zp";
    case UdrClass::ZpTtorsion:
      return "ZpTtorsion";
    case UdrClass::ZpCp:
      return "ZpCp";
    case UdrClass::ZpCpSquared:
      return "ZpCpSquared";
  }
  return "?";
}

std::string UdrSignature::digest() const {
  std::string out;
  for (const auto& [j, c] : per_rep) {
    switch (c) {
      case UdrClass::Zp: out += 'Z'; break;
      case UdrClass::ZpTtorsion: out += 'T'; break;
      case UdrClass::ZpCp: out += '1'; break;
      case UdrClass::ZpCpSquared: out += '2'; break;
    }
  }
  return out;
}

std::vector<int> UdrSignature::non_zp() const {
  std::vector<int> out;
  for (const auto& [j, c] : per_rep) {
    if (c != UdrClass::Zp) out.push_back(j);
  }
  return out;
}

UdrClass udr_class(const DihedralParams& params, int i0, int j) {
  return dims(params, i0, j).d2 == 2 ? UdrClass::ZpTtorsion : UdrClass::Zp;
}

UdrSignature udr_signature(const DihedralParams& params, int i0) {
  UdrSignature out;
  for (int j = 1; params.is_irr2_index(j); ++j) out.per_rep[j] = udr_class(params, i0, j);
  return out;
}

std::vector<Subgroup> kernel_set(const DihedralParams& params, const std::vector<int>& indices) {
  std::vector<Subgroup> out;
  for (int i : indices) out.push_back(kernel_by_scan(params, i));
  return out;
}

VerificationReport verify_thm_42(const DihedralParams& params, int i0) {
  if (!in_omega(params, i0)) {
    throw ParameterError("verify_thm_42 needs i0 in Omega; got " + std::to_string(i0));
  }
  VerificationReport report{"thm42", params_fields(params), true, std::nullopt};
  report.parameters.emplace_back("i0", i0);

  const KernelSet maximal = kernel_key(params, cohomologically_maximal_set(params, i0));
  const KernelSet non_zp = kernel_key(params, udr_signature(params, i0).non_zp());
  if (maximal != non_zp) {
    report.passed = false;
    report.witness = Witness{"kernels of maximal reps differ from kernels of non-Zp reps",
                             {{"i0", i0}}};
    return report;
  }
  for (int other : omega_set(params)) {
    const KernelSet other_set = kernel_key(params, udr_signature(params, other).non_zp());
    const bool same_kernels = other_set == non_zp;
    if (same_kernels != same_fusion(params, i0, other)) {
      report.passed = false;
      report.witness = Witness{same_kernels ? "equal kernel sets but different fusion"
                                            : "different kernel sets but same fusion",
                               {{"i0", i0}, {"i0_prime", other}}};
      return report;
    }
  }
  return report;
}

VerificationReport verify_thm_43(const DihedralParams& params) {
  VerificationReport report{"thm43", params_fields(params), true, std::nullopt};
  const auto omega = omega_set(params);
  for (int phi : omega) {
    const auto maximal = cohomologically_maximal_set(params, phi);
    for (int psi = 1; params.is_irr2_index(psi); ++psi) {
      const bool is_max = std::binary_search(maximal.begin(), maximal.end(), psi);
      if (is_max != (t_map(params, psi) == RepLabel::irr2(phi))) {
        report.passed = false;
        report.witness = Witness{"maximality disagrees with T(psi) = phi", {{"phi", phi}, {"psi", psi}}};
        return report;
      }
    }
  }
  for (int phi1 : omega) {
    for (int phi2 : omega) {
      const bool same_kernels =
          kernel_key(params, t_preimage(params, phi1)) == kernel_key(params, t_preimage(params, phi2));
      if (same_kernels != same_fusion(params, phi1, phi2)) {
        report.passed = false;
        report.witness = Witness{"preimage kernels disagree with fusion", {{"phi1", phi1}, {"phi2", phi2}}};
        return report;
      }
    }
  }
  return report;
}

VerificationReport verify_lemma_410(int n, int i0) {
  if (n < 4 || n % 2 != 0) throw ParameterError("verify_lemma_410 needs an even n >= 4");
  if (i0 < 1 || 2 * i0 >= n || i0 % 2 != 0) {
    throw ParameterError("verify_lemma_410 needs i0 = 2 d0 in [1, n/2)");
  }
  VerificationReport report{"lemma410", {{"n", n}, {"i0", i0}}, true, std::nullopt};
  const int k = n / 2;
  const int d0 = i0 / 2;
  const int a0 = std::gcd(d0, k);
  auto pair_set = [](int x, int y) { return std::minmax(x, y); };
  const bool sets_equal = pair_set(std::gcd(d0, n), std::gcd(k - d0, n)) ==
                          pair_set(std::gcd(a0, n), std::gcd(k - a0, n));
  const int g_k_a0 = std::gcd(k - a0, n);
  const bool ok = sets_equal && std::gcd(i0, n) == 2 * a0 && std::gcd(a0, n) == a0 &&
                  (g_k_a0 == a0 || g_k_a0 == 2 * a0);
  if (!ok) {
    report.passed = false;
    report.witness = Witness{"gcd identity fails",
                             {{"d0", d0}, {"a0", a0}, {"gcd_d0_n", std::gcd(d0, n)},
                              {"gcd_k_minus_d0_n", std::gcd(k - d0, n)}, {"gcd_k_minus_a0_n", g_k_a0}}};
  }
  return report;
}

VerificationReport verify_cor_34(const DihedralParams& params, int i0) {
  VerificationReport report{"cor34", params_fields(params), true, std::nullopt};
  report.parameters.emplace_back("i0", i0);
  const auto non_zp = udr_signature(params, i0).non_zp();
  const bool center_trivial = center_acts_trivially(params, i0);
  if (!non_zp.empty() && !center_trivial) {
    report.passed = false;
    report.witness = Witness{"non-Zp ring while the center acts nontrivially", {{"j", non_zp.front()}}};
  } else if (!center_trivial && params.n() % 2 != 0) {
    report.passed = false;
    report.witness = Witness{"center acts nontrivially for odd n", {{"i0", i0}}};
  }
  return report;
}

Determinability fusion_determinability(const DihedralParams& params) {
  std::vector<UdrSignature> signatures;
  for (int i = 1; params.is_irr2_index(i); ++i) signatures.push_back(udr_signature(params, i));
  const int n = params.n();
  for (int i = 1; params.is_irr2_index(i); ++i) {
    for (int other = i + 1; params.is_irr2_index(other); ++other) {
      if (signatures[i - 1] == signatures[other - 1] && std::gcd(i, n) != std::gcd(other, n)) {
        return {false, std::make_pair(i, other)};
      }
    }
  }
  return {true, std::nullopt};
}

bool determinability_predicate(int n) {
  if (n % 2 != 0) return true;
  int odd = n;
  int twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  if (odd == 1) return true;
  return twos == 1 && is_prime(odd);
}

VerificationReport verify_thm_11(const DihedralParams& params) {
  VerificationReport report{"thm11", params_fields(params), true, std::nullopt};
  const Determinability det = fusion_determinability(params);
  const bool expected = determinability_predicate(params.n());
  report.passed = det.determinable == expected && (det.determinable || det.witness.has_value());
  report.parameters.emplace_back("determinable", det.determinable ? 1 : 0);
  if (det.witness) {
    const auto [i, other] = *det.witness;
    report.witness = Witness{"equal signatures, different fusion",
                             {{"i", i}, {"i_prime", other},
                              {"gcd_i", std::gcd(i, params.n())},
                              {"gcd_i_prime", std::gcd(other, params.n())}}};
  } else if (!report.passed) {
    report.witness = Witness{"determinable but the arithmetic predicate says otherwise",
                             {{"n", params.n()}}};
  }
  return report;
}

}  // namespace udrfusion
