#include "udrfusion/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace udrfusion {

AbelianParams::AbelianParams(std::vector<int> cyclic_orders, std::int64_t p)
    : orders_(std::move(cyclic_orders)), modulus_(p) {
  if (orders_.empty()) throw ParameterError("abelian group needs at least one cyclic factor");
  for (int m : orders_) {
    if (m < 2) throw ParameterError("cyclic orders must be >= 2");
  }
  if ((p - 1) % exponent() != 0) {
    throw ParameterError("exponent " + std::to_string(exponent()) + " of G does not divide p - 1 = " +
                         std::to_string(p - 1));
  }
}

AbelianParams AbelianParams::smallest(std::vector<int> cyclic_orders) {
  std::int64_t e = 1;
  for (int m : cyclic_orders) {
    if (m < 2) throw ParameterError("cyclic orders must be >= 2");
    e = std::lcm(e, static_cast<std::int64_t>(m));
  }
  const std::int64_t p = next_prime_congruent_one(e, 3);
  return AbelianParams(std::move(cyclic_orders), p);
}

std::int64_t AbelianParams::group_order() const noexcept {
  std::int64_t out = 1;
  for (int m : orders_) out *= m;
  return out;
}

std::int64_t AbelianParams::exponent() const noexcept {
  std::int64_t out = 1;
  for (int m : orders_) out = std::lcm(out, static_cast<std::int64_t>(m));
  return out;
}

std::vector<std::vector<int>> AbelianParams::elements() const {
  std::vector<std::vector<int>> out;
  std::vector<int> current(orders_.size(), 0);
  while (true) {
    out.push_back(current);
    std::size_t pos = orders_.size();
    while (pos > 0) {
      --pos;
      if (++current[pos] < orders_[pos]) break;
      current[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

FpScalar AbelianParams::root_for_generator(std::size_t g) const {
  return primitive_root_of_unity(p(), orders_.at(g));
}

bool Character::is_trivial() const {
  return std::all_of(images.begin(), images.end(), [](FpScalar x) { return x.value() == 1; });
}

Character Character::inverse() const {
  Character out;
  for (const auto& x : images) out.images.push_back(x.inverse());
  return out;
}

FpScalar Character::value(const std::vector<int>& element) const {
  FpScalar acc = images.front().pow(0);
  for (std::size_t i = 0; i < images.size(); ++i) acc *= images[i].pow(element.at(i));
  return acc;
}

Character character_from_exponents(const AbelianParams& params, const std::vector<int>& exponents) {
  if (exponents.size() != params.cyclic_orders().size()) {
    throw ParameterError("character needs one exponent per cyclic factor");
  }
  Character out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    out.images.push_back(params.root_for_generator(i).pow(exponents[i]));
  }
  return out;
}

void validate_character(const AbelianParams& params, const Character& theta) {
  const auto& orders = params.cyclic_orders();
  if (theta.images.size() != orders.size()) {
    throw ParameterError("character needs one image per cyclic factor");
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!(theta.images[i].modulus() == params.modulus()) || theta.images[i].is_zero() ||
        theta.images[i].pow(orders[i]).value() != 1) {
      throw ParameterError("character image on generator " + std::to_string(i) +
                           " has order not dividing " + std::to_string(orders[i]));
    }
  }
}

std::vector<Character> all_characters(const AbelianParams& params) {
  std::vector<Character> out;
  for (const auto& exps : params.elements()) out.push_back(character_from_exponents(params, exps));
  return out;
}

std::int64_t abelian_fixed_count(const AbelianParams& params, const CharacterPair& pair) {
  std::int64_t out = 1;
  if (pair.theta1.is_trivial()) out *= params.p();
  if (pair.theta2.is_trivial()) out *= params.p();
  return out;
}

std::int64_t abelian_fixed_count_bruteforce(const AbelianParams& params, const CharacterPair& pair) {
  const auto pm = params.modulus();
  const auto elements = params.elements();
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < params.p(); ++x) {
    for (std::int64_t y = 0; y < params.p(); ++y) {
      const FpScalar fx(x, pm);
      const FpScalar fy(y, pm);
      const bool fixed = std::all_of(elements.begin(), elements.end(), [&](const auto& g) {
        return pair.theta1.value(g) * fx == fx && pair.theta2.value(g) * fy == fy;
      });
      if (fixed) ++count;
    }
  }
  return count;
}

CohomologyDims abelian_dims(const CharacterPair& pair) {
  const int d1 = (pair.theta1.is_trivial() ? 1 : 0) + (pair.theta2.is_trivial() ? 1 : 0);
  const int d2 = d1 + (pair.theta2 == pair.theta1.inverse() ? 1 : 0);
  return {d1, d2};
}

CohomologyDims abelian_dims_projector(const AbelianParams& params, const CharacterPair& pair,
                                      const Character& v) {
  const auto pm = params.modulus();
  std::vector<FpMatrix> h1_images;
  std::vector<FpMatrix> wedge_images;
  for (const auto& g : params.elements()) {
    FpMatrix phi_dual(2, 2, pm);
    phi_dual.set(0, 0, pair.theta1.value(g).inverse());
    phi_dual.set(1, 1, pair.theta2.value(g).inverse());
    FpMatrix adjoint(1, 1, pm);
    adjoint.set(0, 0, v.value(g).inverse() * v.value(g));
    FpMatrix det(1, 1, pm);
    det.set(0, 0, determinant(phi_dual));
    h1_images.push_back(kronecker(phi_dual, adjoint));
    wedge_images.push_back(kronecker(det, adjoint));
  }
  const auto d1 = static_cast<int>(averaging_fixed_dim(h1_images));
  return {d1, d1 + static_cast<int>(averaging_fixed_dim(wedge_images))};
}

UdrClass abelian_udr(const CharacterPair& pair) {
  switch (abelian_dims(pair).d1) {
    case 0:
      return UdrClass::Zp;
    case 1:
      return UdrClass::ZpCp;
    default:
      return UdrClass::ZpCpSquared;
  }
}

FusionOrbitSet abelian_orbits_bruteforce(const AbelianParams& params, const CharacterPair& pair) {
  validate_character(params, pair.theta1);
  validate_character(params, pair.theta2);
  const std::int64_t p = params.p();
  if (params.group_order() * p * p > kBruteForceGuard) {
    throw ParameterError("brute-force orbit enumeration needs |G| p^2 <= " +
                         std::to_string(kBruteForceGuard));
  }
  const auto pm = params.modulus();
  std::vector<std::pair<FpScalar, FpScalar>> scalings;
  for (const auto& g : params.elements()) {
    scalings.emplace_back(pair.theta1.value(g), pair.theta2.value(g));
  }
  FusionOrbitSet out{p, params.group_order(), std::nullopt, {}};
  std::vector<char> seen(static_cast<std::size_t>(p * p), 0);
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      if (seen[static_cast<std::size_t>(x * p + y)]) continue;
      const NPoint v{FpScalar(x, pm), FpScalar(y, pm)};
      std::set<NPoint> orbit;
      std::int64_t stabilizer = 0;
      for (const auto& [a, b] : scalings) {
        const NPoint w{a * v.x, b * v.y};
        orbit.insert(w);
        if (w == v) ++stabilizer;
      }
      for (const auto& w : orbit) seen[static_cast<std::size_t>(w.x.value() * p + w.y.value())] = 1;
      out.orbits.push_back(
          {v, {orbit.begin(), orbit.end()}, static_cast<std::int64_t>(orbit.size()), stabilizer, {}});
    }
  }
  return out;
}

std::optional<std::pair<CharacterPair, CharacterPair>> find_underdetermination_witness(
    const AbelianParams& params) {
  struct Candidate {
    CharacterPair pair;
    std::int64_t fixed;
    CohomologyDims dims;
    UdrClass udr;
    FusionOrbitSet orbits;
  };
  std::vector<Candidate> candidates;
  const auto characters = all_characters(params);
  for (const auto& t1 : characters) {
    for (const auto& t2 : characters) {
      CharacterPair pair{t1, t2};
      candidates.push_back({pair, abelian_fixed_count(params, pair), abelian_dims(pair),
                            abelian_udr(pair), abelian_orbits_bruteforce(params, pair)});
    }
  }
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const auto& ca = candidates[a];
      const auto& cb = candidates[b];
      if (ca.fixed == cb.fixed && ca.dims == cb.dims && ca.udr == cb.udr &&
          !same_partition(ca.orbits, cb.orbits)) {
        return std::make_pair(ca.pair, cb.pair);
      }
    }
  }
  return std::nullopt;
}

}  // namespace udrfusion
