#include "udrfusion/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace udrfusion {

namespace {

void require_action_index(const DihedralParams& params, int i0) {
  if (!params.is_irr2_index(i0)) {
    throw ParameterError("action index i0 = " + std::to_string(i0) + " outside [1, " +
                         std::to_string(params.n()) + "/2)");
  }
}

std::size_t point_index(const NPoint& v, std::int64_t p) {
  return static_cast<std::size_t>(v.x.value() * p + v.y.value());
}

// Greedy generating set: keep every element not already generated.
std::vector<GroupElement> greedy_generators(int n, const std::vector<GroupElement>& members) {
  std::vector<GroupElement> gens;
  Subgroup current = subgroup_closure(n, {});
  for (const auto& g : members) {
    if (std::binary_search(current.elements.begin(), current.elements.end(), g)) continue;
    gens.push_back(g);
    current = subgroup_closure(n, gens);
  }
  return gens;
}

}  // namespace

int orbit_period(const DihedralParams& params, int i0) {
  require_action_index(params, i0);
  return params.n() / std::gcd(i0, params.n());
}

NPoint act(const DihedralParams& params, int i0, GroupElement g, const NPoint& v) {
  const FpMatrix m = rep_matrix(irr2_rep(params, i0), g);
  const FpScalar column[2] = {v.x, v.y};
  const auto image = m * std::span<const FpScalar>(column);
  return {image[0], image[1]};
}

FusionOrbitSet fusion_orbits_bruteforce(const DihedralParams& params, int i0) {
  require_action_index(params, i0);
  const std::int64_t p = params.p();
  if (p * p > kBruteForceGuard) {
    throw ParameterError("brute-force orbit enumeration needs p^2 <= " +
                         std::to_string(kBruteForceGuard));
  }
  const auto pm = params.modulus();
  const int n = params.n();
  const Rep2 rep = irr2_rep(params, i0);
  const auto elements = all_elements(n);
  std::vector<FpMatrix> images;
  for (const auto& g : elements) images.push_back(rep_matrix(rep, g));

  FusionOrbitSet out{p, params.group_order(), DihedralAction{params, i0}, {}};
  std::vector<char> seen(static_cast<std::size_t>(p * p), 0);
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      const NPoint v{FpScalar(x, pm), FpScalar(y, pm)};
      if (seen[point_index(v, p)]) continue;
      std::set<NPoint> orbit;
      std::vector<GroupElement> stabilizer;
      for (std::size_t e = 0; e < elements.size(); ++e) {
        const FpMatrix& m = images[e];
        const NPoint w{FpScalar(m.value(0, 0) * x + m.value(0, 1) * y, pm),
                       FpScalar(m.value(1, 0) * x + m.value(1, 1) * y, pm)};
        orbit.insert(w);
        if (w == v) stabilizer.push_back(elements[e]);
      }
      for (const auto& w : orbit) seen[point_index(w, p)] = 1;
      std::sort(stabilizer.begin(), stabilizer.end());
      FusionOrbit o{v, {orbit.begin(), orbit.end()}, static_cast<std::int64_t>(orbit.size()),
                    static_cast<std::int64_t>(stabilizer.size()), greedy_generators(n, stabilizer)};
      out.orbits.push_back(std::move(o));
    }
  }
  return out;
}

FusionOrbitSet fusion_orbits_closed_form(const DihedralParams& params, int i0) {
  const int k = orbit_period(params, i0);
  const int n = params.n();
  const std::int64_t p = params.p();
  const auto pm = params.modulus();
  const FpScalar zeta = params.omega().pow(i0);  // order exactly k

  // Powers zeta^a for a in [0, k), and the exponent of each element of <zeta>.
  std::vector<FpScalar> zeta_pow;
  std::vector<int> exponent_of(static_cast<std::size_t>(p), -1);
  for (int a = 0; a < k; ++a) {
    zeta_pow.push_back(zeta.pow(a));
    exponent_of[static_cast<std::size_t>(zeta_pow.back().value())] = a;
  }

  FusionOrbitSet out{p, params.group_order(), DihedralAction{params, i0}, {}};
  std::vector<char> seen(static_cast<std::size_t>(p * p), 0);
  const GroupElement r_k{k % n, false};
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      const NPoint v{FpScalar(x, pm), FpScalar(y, pm)};
      if (seen[point_index(v, p)]) continue;
      FusionOrbit o{v, {}, 0, 0, {}};
      std::vector<NPoint> members;
      if (x == 0 && y == 0) {
        members.push_back(v);
        o.stabilizer_order = 2 * n;
        o.stabilizer_gens = {GroupElement{1, false}, GroupElement{0, true}};
      } else {
        for (int a = 0; a < k; ++a) {
          members.push_back({zeta_pow[a] * v.x, zeta_pow[a].inverse() * v.y});
        }
        const bool both_nonzero = x != 0 && y != 0;
        const int j0 =
            both_nonzero ? exponent_of[static_cast<std::size_t>((v.y * v.x.inverse()).value())] : -1;
        if (j0 >= 0) {
          // y/x = w^{i0 j0}: stabilizer <r^k, s r^j0> of order 2n/k.
          o.stabilizer_order = 2 * n / k;
          if (k != n) o.stabilizer_gens.push_back(r_k);
          o.stabilizer_gens.push_back(GroupElement{j0, true});
        } else {
          for (int a = 0; a < k; ++a) {
            members.push_back({zeta_pow[a].inverse() * v.y, zeta_pow[a] * v.x});
          }
          o.stabilizer_order = n / k;
          if (k != n) o.stabilizer_gens.push_back(r_k);
        }
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (const auto& w : members) seen[point_index(w, p)] = 1;
      o.elements = std::move(members);
      o.size = static_cast<std::int64_t>(o.elements.size());
      out.orbits.push_back(std::move(o));
    }
  }
  return out;
}

FusionNumbers fusion_numbers(const FusionOrbitSet& orbit_set) {
  FusionNumbers out;
  for (const auto& o : orbit_set.orbits) ++out.counts[o.size];
  return out;
}

FusionNumbers fusion_numbers_closed_form(const DihedralParams& params, int i0) {
  const std::int64_t k = orbit_period(params, i0);
  const std::int64_t p = params.p();
  const std::int64_t generic = (p - 1) * (p + 1 - k);
  if (generic % (2 * k) != 0) {
    throw std::logic_error("(p-1)(p+1-k) not divisible by 2k");
  }
  FusionNumbers out;
  out.counts[1] = 1;
  out.counts[k] = p - 1;
  if (generic != 0) out.counts[2 * k] = generic / (2 * k);
  return out;
}

bool same_fusion(const DihedralParams& params, int i, int i0) {
  require_action_index(params, i);
  require_action_index(params, i0);
  return std::gcd(i, params.n()) == std::gcd(i0, params.n());
}

bool same_partition(const FusionOrbitSet& a, const FusionOrbitSet& b) {
  if (a.p != b.p || a.orbits.size() != b.orbits.size()) return false;
  const bool compare_stabilizers = a.action.has_value() && b.action.has_value();
  for (std::size_t i = 0; i < a.orbits.size(); ++i) {
    const auto& oa = a.orbits[i];
    const auto& ob = b.orbits[i];
    if (oa.elements != ob.elements || oa.stabilizer_order != ob.stabilizer_order) return false;
    if (compare_stabilizers) {
      const int n = a.action->params.n();
      if (subgroup_closure(n, oa.stabilizer_gens) != subgroup_closure(n, ob.stabilizer_gens)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace udrfusion
