#pragma once

// The dihedral group D_2n = <r, s | r^n, s^2, s r s^-1 r>, its two-dimensional
// representations over F_p, and the index arithmetic around the map
// T(theta_i) = Ind(chi_i^2).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "udrfusion/ff.hpp"

namespace udrfusion {

/// Arithmetic context: n >= 3, an odd prime p = 1 (mod n), and a primitive
/// n-th root of unity omega in F_p.
class DihedralParams {
 public:
  /// Validates every invariant; throws ParameterError.
  DihedralParams(int n, std::int64_t p, std::int64_t omega);

  /// omega chosen as the smallest element of order n.
  static DihedralParams with_prime(int n, std::int64_t p);
  /// p = find_prime(n, 3) and the smallest omega.
  static DihedralParams smallest(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::int64_t p() const noexcept { return modulus_.value(); }
  [[nodiscard]] PrimeModulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] FpScalar omega() const noexcept { return omega_; }
  [[nodiscard]] int group_order() const noexcept { return 2 * n_; }
  /// Number of irreducible two-dimensional representations, ceil(n/2) - 1.
  [[nodiscard]] int irr2_count() const noexcept { return (n_ + 1) / 2 - 1; }
  [[nodiscard]] bool is_irr2_index(int i) const noexcept { return 1 <= i && 2 * i < n_; }

 private:
  int n_;
  PrimeModulus modulus_;
  FpScalar omega_;
};

/// s^flip r^rot with 0 <= rot < n.
struct GroupElement {
  int rot = 0;
  bool flip = false;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.flip <=> b.flip; c != 0) return c;
    return a.rot <=> b.rot;
  }

  /// "e", "r", "r^3", "s", "s r^2", ...
  [[nodiscard]] std::string word() const;
};

GroupElement multiply(int n, GroupElement g, GroupElement h);
GroupElement invert(int n, GroupElement g);
/// r^0 .. r^{n-1}, then s r^0 .. s r^{n-1}.
std::vector<GroupElement> all_elements(int n);
/// Elements commuting with both generators.
std::vector<GroupElement> center(int n);

/// A subgroup as its sorted element list plus the generators it came from.
struct Subgroup {
  std::vector<GroupElement> elements;
  std::vector<GroupElement> generators;

  [[nodiscard]] std::size_t order() const noexcept { return elements.size(); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup subgroup_closure(int n, std::vector<GroupElement> generators);

struct RepLabel {
  enum class Kind { Irr2, ReducibleInd, OneDim };
  /// Tags for Kind::OneDim.
  static constexpr int kTrivial = 0;
  static constexpr int kSign = 1;

  Kind kind = Kind::Irr2;
  int index = 0;

  static RepLabel irr2(int i) { return {Kind::Irr2, i}; }
  static RepLabel reducible_ind(int j) { return {Kind::ReducibleInd, j}; }
  static RepLabel one_dim(int tag) { return {Kind::OneDim, tag}; }

  friend bool operator==(const RepLabel&, const RepLabel&) = default;

  /// "theta_2", "Ind(chi_2)", "trivial", "sign".
  [[nodiscard]] std::string to_string() const;
};

struct Rep2 {
  RepLabel label;
  FpMatrix mat_r;
  FpMatrix mat_s;
};

/// theta_i: r -> diag(w^i, w^-i), s -> antidiag(1, 1).
Rep2 irr2_rep(const DihedralParams& params, int i);
/// Ind(chi_j) from <r>, in the same basis; labelled by its isomorphism class.
Rep2 induced_rep(const DihedralParams& params, int j);
/// [theta_1, ..., theta_{ceil(n/2)-1}].
std::vector<Rep2> irr2_reps(const DihedralParams& params);

FpMatrix rep_matrix(const Rep2& rep, GroupElement g);
/// r^n = I, s^2 = I and s r s^-1 r = I.
bool satisfies_relations(const Rep2& rep, int n);

RepLabel t_map(const DihedralParams& params, int i);
/// Sorted indices of Omega. Empty when no theta_i is trivial on the center.
std::vector<int> omega_set(const DihedralParams& params);
bool in_omega(const DihedralParams& params, int i);
/// Sorted indices i with T(theta_i) = theta_{i0}; requires i0 in Omega.
std::vector<int> t_preimage(const DihedralParams& params, int i0);

struct KernelInvariant {
  int gcd = 0;
  Subgroup kernel;
};

/// gcd(i, n) and <r^{n/gcd(i,n)}>, from index arithmetic.
KernelInvariant kernel_invariant(const DihedralParams& params, int i);
/// ker(theta_i) found by testing theta_i(g) = I on all 2n elements.
Subgroup kernel_by_scan(const DihedralParams& params, int i);

bool center_acts_trivially(const DihedralParams& params, int i0);

}  // namespace udrfusion
