#pragma once

// Orbits of G = D_2n acting on N = F_p^2 through theta_{i0}: brute force,
// closed form, and the size census of the orbits (the fusion numbers).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "udrfusion/dihedral.hpp"
#include "udrfusion/ff.hpp"

namespace udrfusion {

/// Largest p^2 (dihedral) or |G| p^2 (abelian) a brute-force enumeration accepts.
inline constexpr std::int64_t kBruteForceGuard = 1'000'000;

/// A point (x, y) of N in the fixed basis of the acting representation.
struct NPoint {
  FpScalar x;
  FpScalar y;

  friend bool operator==(const NPoint&, const NPoint&) = default;
  friend std::strong_ordering operator<=>(const NPoint& a, const NPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

struct FusionOrbit {
  NPoint representative;          // lexicographically smallest element
  std::vector<NPoint> elements;   // sorted
  std::int64_t size = 0;
  std::int64_t stabilizer_order = 0;
  /// Empty for orbits of non-dihedral actions.
  std::vector<GroupElement> stabilizer_gens;
};

/// Dihedral context of an orbit set; absent for abelian actions.
struct DihedralAction {
  DihedralParams params;
  int i0;
};

struct FusionOrbitSet {
  std::int64_t p = 0;
  std::int64_t group_order = 0;
  std::optional<DihedralAction> action;
  /// Sorted by representative.
  std::vector<FusionOrbit> orbits;
};

struct FusionNumbers {
  /// Orbit size m -> F_m, nonzero entries only.
  std::map<std::int64_t, std::int64_t> counts;

  friend bool operator==(const FusionNumbers&, const FusionNumbers&) = default;
};

NPoint act(const DihedralParams& params, int i0, GroupElement g, const NPoint& v);

/// Applies every group element to every point; requires p^2 <= kBruteForceGuard.
FusionOrbitSet fusion_orbits_bruteforce(const DihedralParams& params, int i0);

/// Orbits from the three-case description with k = n / gcd(i0, n):
/// the zero orbit, size-k orbits of (x, y) in F_p^* x F_p^* with
/// y/x in <w^i0>, and size-2k orbits for everything else.
FusionOrbitSet fusion_orbits_closed_form(const DihedralParams& params, int i0);

FusionNumbers fusion_numbers(const FusionOrbitSet& orbit_set);

/// {1: 1, k: p-1, 2k: (p-1)(p+1-k)/(2k)} with k = n / gcd(i0, n).
FusionNumbers fusion_numbers_closed_form(const DihedralParams& params, int i0);

/// theta_i and theta_i0 have the same fusion iff gcd(i, n) = gcd(i0, n).
bool same_fusion(const DihedralParams& params, int i, int i0);

/// k = n / gcd(i0, n).
int orbit_period(const DihedralParams& params, int i0);

/// Checks that two orbit sets partition N identically and agree on
/// stabilizer orders (and, when both carry generators, on the stabilizers).
bool same_partition(const FusionOrbitSet& a, const FusionOrbitSet& b);

}  // namespace udrfusion
