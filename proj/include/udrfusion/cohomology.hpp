#pragma once

// Cohomology dimensions d1 = dim H^1(Gamma, Hom(V,V)) and
// d2 = dim H^2(Gamma, Hom(V,V)) for Gamma = N x| D_2n, computed as fixed
// points of G-modules built from the representations theta_i.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "udrfusion/dihedral.hpp"
#include "udrfusion/ff.hpp"

namespace udrfusion {

/// A finite-dimensional F_p D_2n-module given by the images of r and s.
class GModule {
 public:
  /// Throws ParameterError unless the matrices satisfy the presentation.
  GModule(int n, FpMatrix r, FpMatrix s);

  static GModule from_rep(const Rep2& rep, int n);
  static GModule trivial(const DihedralParams& params, std::size_t dim);
  /// chi_1: r -> 1, s -> -1.
  static GModule sign(const DihedralParams& params);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return r_.rows(); }
  [[nodiscard]] PrimeModulus modulus() const noexcept { return r_.modulus(); }
  [[nodiscard]] const FpMatrix& r() const noexcept { return r_; }
  [[nodiscard]] const FpMatrix& s() const noexcept { return s_; }

  [[nodiscard]] FpMatrix image(GroupElement g) const;
  [[nodiscard]] std::vector<FpMatrix> all_images() const;
  [[nodiscard]] FpScalar character(GroupElement g) const { return image(g).trace(); }

 private:
  int n_;
  FpMatrix r_;
  FpMatrix s_;
};

struct CohomologyDims {
  int d1 = 0;
  int d2 = 0;

  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// g -> (image(g)^-1)^T.
GModule contragredient(const GModule& m);
/// Kronecker-product action on a (x) b.
GModule tensor(const GModule& a, const GModule& b);
/// g -> det(image(g)); requires dim 2.
GModule det_module(const GModule& m);

/// dim m^G as the rank of the averaging idempotent over all 2n elements.
std::size_t fixed_point_dim(const GModule& m);

/// V* (x) V for V = theta_j.
GModule adjoint_module(const DihedralParams& params, int j);

/// Checks V*(x)V = F_p + V_sign + V_{T(theta_i)} by characters on all 2n
/// elements, and that the spans of I, diag(1,-1) and {f, g} inside M_2(F_p)
/// are stable under conjugation with the expected actions.
bool adjoint_decomposition_check(const DihedralParams& params, int i);

/// Cohomology dimensions for the action phi = theta_{i0} on N and V = theta_j:
/// d1 = dim(phi~ (x) V*(x)V)^G, d2 = d1 + dim(det(phi~) (x) V*(x)V)^G.
CohomologyDims dims(const DihedralParams& params, int i0, int j);

/// Largest 2n p^2 the H^1 oracle accepts.
inline constexpr std::int64_t kCocycleOracleGuard = 10'000;

/// dim H^1(Gamma, Hom(V,V)) from the presentation of Gamma = N x| G on
/// generators a, b, r, s: a 1-cocycle is fixed by its values on the four
/// generators, each relator imposes d(word) = 0, and the coboundaries are
/// subtracted. Shares no code path with dims().
int d1_oracle_cocycles(const DihedralParams& params, int i0, int j);

/// Indices j whose d2 is maximal among all theta_j for the action theta_{i0}.
std::vector<int> cohomologically_maximal_set(const DihedralParams& params, int i0);

}  // namespace udrfusion
