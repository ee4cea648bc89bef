#pragma once

// Symbolic classification of universal deformation rings R(Gamma, V) and the
// checks that relate them to fusion of N in Gamma.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udrfusion/dihedral.hpp"

namespace udrfusion {

enum class UdrClass {
  Zp,           // Z_p
  ZpTtorsion,   // Z_p[[t]]/(t^2, pt)
  ZpCp,         // Z_p[Z/p]
  ZpCpSquared,  // Z_p[Z/p x Z/p]
};

/// "Zp", "Zp[[t]]/(t^2,pt)", "Zp[Z/p]", "Zp[Z/pxZ/p]".
std::string notation(UdrClass c);
/// The enumerator name, e.g. "ZpTtorsion".
std::string identifier(UdrClass c);

struct UdrSignature {
  std::map<int, UdrClass> per_rep;

  friend bool operator==(const UdrSignature&, const UdrSignature&) = default;

  /// One letter per j in index order: 'Z' for Z_p, 'T' for Z_p[[t]]/(t^2,pt).
  [[nodiscard]] std::string digest() const;
  /// Indices j with class other than Z_p.
  [[nodiscard]] std::vector<int> non_zp() const;
};

/// Named integer fields describing a counterexample or an informative pair.
struct Witness {
  std::string what;
  std::vector<std::pair<std::string, std::int64_t>> fields;
};

struct VerificationReport {
  std::string check_name;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  bool passed = false;
  std::optional<Witness> witness;
};

UdrClass udr_class(const DihedralParams& params, int i0, int j);
UdrSignature udr_signature(const DihedralParams& params, int i0);

/// Kernels of theta_j over a set of indices, as element lists found by scan.
std::vector<Subgroup> kernel_set(const DihedralParams& params, const std::vector<int>& indices);

/// For i0 in Omega: the kernels of the cohomologically maximal reps equal the
/// kernels of the reps with non-Z_p ring, and on Omega the kernel set
/// determines, and is determined by, the fusion class.
VerificationReport verify_thm_42(const DihedralParams& params, int i0);

/// Over all phi in Omega: psi maximal iff T(psi) = phi; same fusion iff the
/// preimages under T have the same kernel(s).
VerificationReport verify_thm_43(const DihedralParams& params);

/// Gcd identities for even n and i0 = 2 d0 in Omega, with k = n/2 and
/// a0 = gcd(d0, k).
VerificationReport verify_lemma_410(int n, int i0);

/// A non-Z_p ring for some j forces the center of G to act trivially on N.
VerificationReport verify_cor_34(const DihedralParams& params, int i0);

struct Determinability {
  bool determinable = true;
  /// Actions (i, i') with equal signatures but different fusion.
  std::optional<std::pair<int, int>> witness;
};

/// Decides from the signatures of all actions alone whether the signature
/// pins down the fusion class.
Determinability fusion_determinability(const DihedralParams& params);

/// n odd, or n a power of 2, or n = 2q with q an odd prime.
bool determinability_predicate(int n);

/// fusion_determinability agrees with determinability_predicate; carries the
/// witness pair when fusion is not determinable.
VerificationReport verify_thm_11(const DihedralParams& params);

}  // namespace udrfusion
