#pragma once

// Exact arithmetic and linear algebra over a prime field F_p.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace udrfusion {

/// Raised for inputs that violate an operation's preconditions
/// (non-prime modulus, index out of range, guard exceeded, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest candidate examined by the prime searches.
inline constexpr std::int64_t kPrimeSearchCeiling = 1'000'000;

bool is_prime(std::int64_t value) noexcept;

/// An odd prime, checked once at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  [[nodiscard]] std::int64_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::int64_t p_;
};

class FpScalar {
 public:
  /// Negative or oversized values are reduced into [0, p).
  FpScalar(std::int64_t value, PrimeModulus p) noexcept;

  [[nodiscard]] std::int64_t value() const noexcept { return value_; }
  [[nodiscard]] PrimeModulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::int64_t p() const noexcept { return modulus_.value(); }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator+(FpScalar rhs) const;
  FpScalar operator-(FpScalar rhs) const;
  FpScalar operator*(FpScalar rhs) const;
  FpScalar operator-() const;
  FpScalar& operator+=(FpScalar rhs) { return *this = *this + rhs; }
  FpScalar& operator-=(FpScalar rhs) { return *this = *this - rhs; }
  FpScalar& operator*=(FpScalar rhs) { return *this = *this * rhs; }

  /// Throws std::domain_error on zero.
  [[nodiscard]] FpScalar inverse() const;
  /// Negative exponents go through the inverse.
  [[nodiscard]] FpScalar pow(std::int64_t exponent) const;

  friend bool operator==(FpScalar a, FpScalar b) noexcept {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  friend std::strong_ordering operator<=>(FpScalar a, FpScalar b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  std::int64_t value_;
  PrimeModulus modulus_;
};

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, PrimeModulus p);

  static FpMatrix identity(std::size_t n, PrimeModulus p);
  static FpMatrix from_rows(PrimeModulus p,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] PrimeModulus modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::int64_t p() const noexcept { return modulus_.value(); }

  [[nodiscard]] std::int64_t value(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  [[nodiscard]] FpScalar at(std::size_t r, std::size_t c) const {
    return FpScalar(value(r, c), modulus_);
  }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  void set(std::size_t r, std::size_t c, FpScalar v);

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix operator*(FpScalar scalar) const;
  std::vector<FpScalar> operator*(std::span<const FpScalar> column) const;

  [[nodiscard]] FpMatrix transpose() const;
  [[nodiscard]] FpScalar trace() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus modulus_;
  std::vector<std::int64_t> entries_;
};

FpMatrix power(const FpMatrix& m, std::int64_t exponent);
FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);
/// Stacks matrices with equal column counts on top of each other.
FpMatrix vstack(std::span<const FpMatrix> blocks);

std::size_t rank(const FpMatrix& m);
std::size_t nullity(const FpMatrix& m);
FpScalar determinant(const FpMatrix& m);
/// std::nullopt when m is singular.
std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Dimension of the fixed space of a group given by the images of all its
/// elements, as the rank of the averaging idempotent (1/|G|) sum_g image(g).
/// Requires |G| invertible mod p.
std::size_t averaging_fixed_dim(std::span<const FpMatrix> images);

/// Smallest prime p >= lower_bound with p = 1 (mod modulus); modulus >= 1.
std::int64_t next_prime_congruent_one(std::int64_t modulus, std::int64_t lower_bound);
/// The `count` smallest odd primes p >= 3 with p = 1 (mod modulus).
std::vector<std::int64_t> smallest_primes_congruent_one(std::int64_t modulus, std::size_t count);
/// Smallest odd prime p >= lower_bound with p = 1 (mod n); requires n >= 3.
std::int64_t find_prime(std::int64_t n, std::int64_t lower_bound);

std::int64_t multiplicative_order(FpScalar x);
/// Smallest w in [2, p-1] of multiplicative order exactly n.
FpScalar primitive_root_of_unity(std::int64_t p, std::int64_t n);
/// Every element of order exactly n, ascending.
std::vector<FpScalar> primitive_roots_of_unity(std::int64_t p, std::int64_t n);

}  // namespace udrfusion
