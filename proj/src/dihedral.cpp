#include "udrfusion/dihedral.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace udrfusion {

namespace {

int mod_n(int a, int n) {
  a %= n;
  return a < 0 ? a + n : a;
}

void require_irr2_index(const DihedralParams& params, int i) {
  if (!params.is_irr2_index(i)) {
    throw ParameterError("representation index " + std::to_string(i) + " outside [1, " +
                         std::to_string(params.n()) + "/2)");
  }
}

}  // namespace

DihedralParams::DihedralParams(int n, std::int64_t p, std::int64_t omega)
    : n_(n), modulus_(p), omega_(omega, modulus_) {
  if (n < 3) throw ParameterError("dihedral parameter n must be >= 3");
  if ((p - 1) % n != 0) {
    throw ParameterError("p = " + std::to_string(p) + " is not 1 mod n = " + std::to_string(n));
  }
  if (omega_.is_zero() || multiplicative_order(omega_) != n) {
    throw ParameterError("omega = " + std::to_string(omega) + " is not a primitive " +
                         std::to_string(n) + "-th root of unity mod " + std::to_string(p));
  }
}

DihedralParams DihedralParams::with_prime(int n, std::int64_t p) {
  if (n < 3) throw ParameterError("dihedral parameter n must be >= 3");
  return DihedralParams(n, p, primitive_root_of_unity(p, n).value());
}

DihedralParams DihedralParams::smallest(int n) { return with_prime(n, find_prime(n, 3)); }

std::string GroupElement::word() const {
  std::string out;
  if (flip) out = "s";
  if (rot != 0) {
    if (!out.empty()) out += ' ';
    out += rot == 1 ? std::string("r") : "r^" + std::to_string(rot);
  }
  return out.empty() ? "e" : out;
}

// r^a s = s r^-a, so (s^b1 r^a1)(s^b2 r^a2) = s^(b1+b2) r^((-1)^b2 a1 + a2).
GroupElement multiply(int n, GroupElement g, GroupElement h) {
  const int a1 = h.flip ? -g.rot : g.rot;
  return {mod_n(a1 + h.rot, n), g.flip != h.flip};
}

GroupElement invert(int n, GroupElement g) {
  // (s r^a)^2 = e, so reflections are involutions.
  if (g.flip) return g;
  return {mod_n(-g.rot, n), false};
}

std::vector<GroupElement> all_elements(int n) {
  std::vector<GroupElement> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < n; ++a) out.push_back({a, b == 1});
  }
  return out;
}

std::vector<GroupElement> center(int n) {
  const GroupElement r{1, false};
  const GroupElement s{0, true};
  std::vector<GroupElement> out;
  for (const auto& g : all_elements(n)) {
    if (multiply(n, g, r) == multiply(n, r, g) && multiply(n, g, s) == multiply(n, s, g)) {
      out.push_back(g);
    }
  }
  return out;
}

Subgroup subgroup_closure(int n, std::vector<GroupElement> generators) {
  std::set<GroupElement> members{GroupElement{}};
  std::vector<GroupElement> frontier{GroupElement{}};
  while (!frontier.empty()) {
    const GroupElement g = frontier.back();
    frontier.pop_back();
    for (const auto& gen : generators) {
      const GroupElement h = multiply(n, g, gen);
      if (members.insert(h).second) frontier.push_back(h);
    }
  }
  return {std::vector<GroupElement>(members.begin(), members.end()), std::move(generators)};
}

std::string RepLabel::to_string() const {
  switch (kind) {
    case Kind::Irr2:
      return "theta_" + std::to_string(index);
    case Kind::ReducibleInd:
      return "Ind(chi_" + std::to_string(index) + ")";
    case Kind::OneDim:
      return index == kSign ? "sign" : "trivial";
  }
  return "?";
}

Rep2 induced_rep(const DihedralParams& params, int j) {
  const int n = params.n();
  const int jr = mod_n(j, n);
  if (jr == 0) throw ParameterError("Ind(chi_0) is not considered");
  const auto pm = params.modulus();
  FpMatrix r(2, 2, pm);
  r.set(0, 0, params.omega().pow(jr));
  r.set(1, 1, params.omega().pow(-jr));
  const FpMatrix s = FpMatrix::from_rows(pm, {{0, 1}, {1, 0}});
  RepLabel label;
  if (2 * jr == n) {
    label = RepLabel::reducible_ind(jr);
  } else {
    // Ind(chi_j) is isomorphic to Ind(chi_-j).
    label = RepLabel::irr2(std::min(jr, n - jr));
  }
  return {label, r, s};
}

Rep2 irr2_rep(const DihedralParams& params, int i) {
  require_irr2_index(params, i);
  return induced_rep(params, i);
}

std::vector<Rep2> irr2_reps(const DihedralParams& params) {
  std::vector<Rep2> out;
  for (int i = 1; params.is_irr2_index(i); ++i) out.push_back(irr2_rep(params, i));
  return out;
}

FpMatrix rep_matrix(const Rep2& rep, GroupElement g) {
  FpMatrix out = power(rep.mat_r, g.rot);
  return g.flip ? rep.mat_s * out : out;
}

bool satisfies_relations(const Rep2& rep, int n) {
  const auto s_inv = inverse(rep.mat_s);
  if (!s_inv) return false;
  return power(rep.mat_r, n).is_identity() && (rep.mat_s * rep.mat_s).is_identity() &&
         (rep.mat_s * rep.mat_r * *s_inv * rep.mat_r).is_identity();
}

RepLabel t_map(const DihedralParams& params, int i) {
  require_irr2_index(params, i);
  const int n = params.n();
  if (2 * (2 * i) < n) return RepLabel::irr2(2 * i);
  if (2 * (2 * i) == n) return RepLabel::reducible_ind(2 * i);
  return RepLabel::irr2(n - 2 * i);
}

std::vector<int> omega_set(const DihedralParams& params) {
  std::set<int> image;
  for (int i = 1; params.is_irr2_index(i); ++i) {
    const RepLabel t = t_map(params, i);
    if (t.kind == RepLabel::Kind::Irr2) image.insert(t.index);
  }
  if (params.n() % 2 == 1) {
    std::vector<int> all(static_cast<std::size_t>(params.irr2_count()));
    std::iota(all.begin(), all.end(), 1);
    return all;
  }
  return {image.begin(), image.end()};
}

bool in_omega(const DihedralParams& params, int i) {
  const auto omega = omega_set(params);
  return std::binary_search(omega.begin(), omega.end(), i);
}

std::vector<int> t_preimage(const DihedralParams& params, int i0) {
  if (!in_omega(params, i0)) {
    throw ParameterError("theta_" + std::to_string(i0) + " is not in Omega for n = " +
                         std::to_string(params.n()));
  }
  std::vector<int> out;
  for (int i = 1; params.is_irr2_index(i); ++i) {
    if (t_map(params, i) == RepLabel::irr2(i0)) out.push_back(i);
  }
  return out;
}

KernelInvariant kernel_invariant(const DihedralParams& params, int i) {
  require_irr2_index(params, i);
  const int n = params.n();
  const int g = std::gcd(i, n);
  const int step = n / g;
  std::vector<GroupElement> gens;
  if (step != n) gens.push_back({step, false});
  return {g, subgroup_closure(n, std::move(gens))};
}

Subgroup kernel_by_scan(const DihedralParams& params, int i) {
  const Rep2 rep = irr2_rep(params, i);
  std::vector<GroupElement> members;
  for (const auto& g : all_elements(params.n())) {
    if (rep_matrix(rep, g).is_identity()) members.push_back(g);
  }
  std::sort(members.begin(), members.end());
  return {members, {}};
}

bool center_acts_trivially(const DihedralParams& params, int i0) {
  const Rep2 rep = irr2_rep(params, i0);
  const auto z = center(params.n());
  return std::all_of(z.begin(), z.end(),
                     [&](GroupElement g) { return rep_matrix(rep, g).is_identity(); });
}

}  // namespace udrfusion
