#pragma once

// Abelian quotients G = Z/m1 x ... x Z/mr acting on N = F_p^2 through a split
// pair of characters (theta1, theta2).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "udrfusion/cohomology.hpp"
#include "udrfusion/deformation.hpp"
#include "udrfusion/ff.hpp"
#include "udrfusion/fusion.hpp"

namespace udrfusion {

class AbelianParams {
 public:
  /// Requires every order >= 2 and exponent(G) | p - 1 (hence p does not divide |G|).
  AbelianParams(std::vector<int> cyclic_orders, std::int64_t p);

  /// Smallest odd prime p = 1 (mod exponent(G)).
  static AbelianParams smallest(std::vector<int> cyclic_orders);

  [[nodiscard]] const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  [[nodiscard]] std::int64_t p() const noexcept { return modulus_.value(); }
  [[nodiscard]] PrimeModulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::int64_t group_order() const noexcept;
  [[nodiscard]] std::int64_t exponent() const noexcept;

  /// Exponent vectors of all elements, lexicographic.
  [[nodiscard]] std::vector<std::vector<int>> elements() const;
  /// Smallest element of order m_g in F_p^*; generator g's characters are
  /// powers of it.
  [[nodiscard]] FpScalar root_for_generator(std::size_t g) const;

 private:
  std::vector<int> orders_;
  PrimeModulus modulus_;
};

/// A character G -> F_p^*, stored as the images of the cyclic generators.
struct Character {
  std::vector<FpScalar> images;

  friend bool operator==(const Character&, const Character&) = default;

  [[nodiscard]] bool is_trivial() const;
  [[nodiscard]] Character inverse() const;
  [[nodiscard]] FpScalar value(const std::vector<int>& element) const;
};

struct CharacterPair {
  Character theta1;
  Character theta2;
};

/// theta(g_i) = root_for_generator(i)^{exponents[i]}.
Character character_from_exponents(const AbelianParams& params, const std::vector<int>& exponents);
/// Throws ParameterError unless each image has order dividing its generator's order.
void validate_character(const AbelianParams& params, const Character& theta);
/// Every character, in lexicographic order of exponent vectors.
std::vector<Character> all_characters(const AbelianParams& params);

/// p^j, j = number of trivial characters in the pair.
std::int64_t abelian_fixed_count(const AbelianParams& params, const CharacterPair& pair);
/// Points of F_p^2 fixed by every element of G, counted directly.
std::int64_t abelian_fixed_count_bruteforce(const AbelianParams& params, const CharacterPair& pair);

/// d1 = number of trivial characters; d2 = d1 + [theta2 = theta1^-1].
CohomologyDims abelian_dims(const CharacterPair& pair);
/// The same dimensions from averaging projectors over G for the module V = chi:
/// d1 = dim(phi~ (x) V*(x)V)^G, d2 = d1 + dim(det phi~ (x) V*(x)V)^G.
CohomologyDims abelian_dims_projector(const AbelianParams& params, const CharacterPair& pair,
                                      const Character& v);

UdrClass abelian_udr(const CharacterPair& pair);

/// Orbits of g.(x, y) = (theta1(g) x, theta2(g) y); requires |G| p^2 <= kBruteForceGuard.
FusionOrbitSet abelian_orbits_bruteforce(const AbelianParams& params, const CharacterPair& pair);

/// Two pairs with equal (F_1, d1, d2, ring class) but different orbit
/// partitions, from an exhaustive search over all pairs.
std::optional<std::pair<CharacterPair, CharacterPair>> find_underdetermination_witness(
    const AbelianParams& params);

}  // namespace udrfusion
