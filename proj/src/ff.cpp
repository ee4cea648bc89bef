#include "udrfusion/ff.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace udrfusion {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) noexcept {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) noexcept {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return reduce(old_s, p);
}

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
  if (!(a == b)) throw std::logic_error("mixed moduli in F_p arithmetic");
}

// In-place row reduction to reduced row echelon form; returns the rank.
std::size_t row_reduce(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols,
                       std::int64_t p) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a[r * cols + c] == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[r * cols + k], a[pivot_row * cols + k]);
    }
    const std::int64_t inv = inverse_mod(a[pivot_row * cols + c], p);
    for (std::size_t k = 0; k < cols; ++k) {
      a[pivot_row * cols + k] = a[pivot_row * cols + k] * inv % p;
    }
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == pivot_row) continue;
      const std::int64_t factor = a[other * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        a[other * cols + k] = reduce(a[other * cols + k] - factor * a[pivot_row * cols + k], p);
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

bool is_prime(std::int64_t value) noexcept {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::int64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw ParameterError("modulus " + std::to_string(p) + " is not an odd prime");
  }
}

FpScalar::FpScalar(std::int64_t value, PrimeModulus p) noexcept
    : value_(reduce(value, p.value())), modulus_(p) {}

FpScalar FpScalar::operator+(FpScalar rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  return FpScalar(value_ + rhs.value_, modulus_);
}

FpScalar FpScalar::operator-(FpScalar rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  return FpScalar(value_ - rhs.value_, modulus_);
}

FpScalar FpScalar::operator*(FpScalar rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  return FpScalar(value_ * rhs.value_, modulus_);
}

FpScalar FpScalar::operator-() const { return FpScalar(-value_, modulus_); }

FpScalar FpScalar::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
  return FpScalar(inverse_mod(value_, p()), modulus_);
}

FpScalar FpScalar::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FpScalar result(1, modulus_);
  FpScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeModulus p)
    : rows_(rows), cols_(cols), modulus_(p), entries_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw ParameterError("matrix dimensions must be positive");
}

FpMatrix FpMatrix::identity(std::size_t n, PrimeModulus p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(PrimeModulus p,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  FpMatrix m(rows.size(), cols, p);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw ParameterError("ragged matrix literal");
    std::size_t c = 0;
    for (std::int64_t v : row) m.set(r, c++, v);
    ++r;
  }
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  entries_[r * cols_ + c] = reduce(v, p());
}

void FpMatrix::set(std::size_t r, std::size_t c, FpScalar v) {
  require_same_modulus(modulus_, v.modulus());
  entries_[r * cols_ + c] = v.value();
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  if (cols_ != rhs.rows_) throw std::logic_error("matrix product shape mismatch");
  FpMatrix out(rows_, rhs.cols_, modulus_);
  const std::int64_t p = this->p();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = entries_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto& cell = out.entries_[i * rhs.cols_ + j];
        cell = (cell + a * rhs.entries_[k * rhs.cols_ + j]) % p;
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::logic_error("matrix sum shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = (entries_[i] + rhs.entries_[i]) % p();
  }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::logic_error("matrix difference shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = reduce(entries_[i] - rhs.entries_[i], p());
  }
  return out;
}

FpMatrix FpMatrix::operator*(FpScalar scalar) const {
  require_same_modulus(modulus_, scalar.modulus());
  FpMatrix out = *this;
  for (auto& e : out.entries_) e = e * scalar.value() % p();
  return out;
}

std::vector<FpScalar> FpMatrix::operator*(std::span<const FpScalar> column) const {
  if (column.size() != cols_) throw std::logic_error("matrix-vector shape mismatch");
  std::vector<FpScalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      require_same_modulus(modulus_, column[k].modulus());
      acc = (acc + entries_[i * cols_ + k] * column[k].value()) % p();
    }
    out.emplace_back(acc, modulus_);
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = entries_[i * cols_ + j];
  }
  return out;
}

FpScalar FpMatrix::trace() const {
  if (!is_square()) throw std::logic_error("trace of a non-square matrix");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < rows_; ++i) acc += entries_[i * cols_ + i];
  return FpScalar(acc, modulus_);
}

bool FpMatrix::is_identity() const { return is_square() && *this == identity(rows_, modulus_); }

std::string FpMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << entries_[i * cols_ + j];
    out << ']';
  }
  out << ']';
  return out.str();
}

FpMatrix power(const FpMatrix& m, std::int64_t exponent) {
  if (!m.is_square()) throw std::logic_error("power of a non-square matrix");
  if (exponent < 0) {
    auto inv = inverse(m);
    if (!inv) throw std::domain_error("negative power of a singular matrix");
    return power(*inv, -exponent);
  }
  FpMatrix result = FpMatrix::identity(m.rows(), m.modulus());
  FpMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b) {
  require_same_modulus(a.modulus(), b.modulus());
  FpMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::int64_t aij = a.value(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + k, j * b.cols() + l, aij * b.value(k, l));
        }
      }
    }
  }
  return out;
}

FpMatrix vstack(std::span<const FpMatrix> blocks) {
  if (blocks.empty()) throw std::logic_error("vstack of nothing");
  std::size_t total_rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks.front().cols()) throw std::logic_error("vstack column mismatch");
    require_same_modulus(b.modulus(), blocks.front().modulus());
    total_rows += b.rows();
  }
  FpMatrix out(total_rows, blocks.front().cols(), blocks.front().modulus());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(offset + i, j, b.value(i, j));
    }
    offset += b.rows();
  }
  return out;
}

std::size_t rank(const FpMatrix& m) {
  std::vector<std::int64_t> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m.value(i, j);
  }
  return row_reduce(a, m.rows(), m.cols(), m.p());
}

std::size_t nullity(const FpMatrix& m) { return m.cols() - rank(m); }

FpScalar determinant(const FpMatrix& m) {
  if (!m.is_square()) throw std::logic_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const std::int64_t p = m.p();
  std::vector<std::int64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.value(i, j);
  }
  FpScalar det(1, m.modulus());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r * n + c] == 0) ++r;
    if (r == n) return FpScalar(0, m.modulus());
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[r * n + k], a[c * n + k]);
      det = -det;
    }
    const FpScalar pivot(a[c * n + c], m.modulus());
    det *= pivot;
    const std::int64_t inv = pivot.inverse().value();
    for (std::size_t below = c + 1; below < n; ++below) {
      const std::int64_t factor = a[below * n + c] * inv % p;
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) {
        a[below * n + k] = reduce(a[below * n + k] - factor * a[c * n + k], p);
      }
    }
  }
  return det;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (!m.is_square()) throw std::logic_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  // Reduce [m | I]; m is invertible iff the left block becomes I.
  std::vector<std::int64_t> a(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = m.value(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  row_reduce(a, n, 2 * n, m.p());
  FpMatrix out(n, n, m.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i * 2 * n + j] != (i == j ? 1 : 0)) return std::nullopt;
      out.set(i, j, a[i * 2 * n + n + j]);
    }
  }
  return out;
}

std::size_t averaging_fixed_dim(std::span<const FpMatrix> images) {
  if (images.empty()) throw std::logic_error("averaging over an empty group");
  const auto p = images.front().modulus();
  const auto order = static_cast<std::int64_t>(images.size());
  if (order % p.value() == 0) throw ParameterError("group order divisible by p");
  FpMatrix sum(images.front().rows(), images.front().cols(), p);
  for (const auto& g : images) sum = sum + g;
  return rank(sum * FpScalar(order, p).inverse());
}

std::int64_t next_prime_congruent_one(std::int64_t modulus, std::int64_t lower_bound) {
  if (modulus < 1) throw ParameterError("modulus must be positive");
  std::int64_t candidate = std::max<std::int64_t>(lower_bound, 3);
  // First candidate = 1 (mod modulus) at or above the bound.
  candidate += reduce(1 - candidate, modulus);
  for (; candidate <= kPrimeSearchCeiling; candidate += modulus) {
    if (candidate % 2 == 1 && is_prime(candidate)) return candidate;
  }
  throw ParameterError("no prime p = 1 (mod " + std::to_string(modulus) + ") at or above " +
                       std::to_string(lower_bound) + " below the search ceiling " +
                       std::to_string(kPrimeSearchCeiling));
}

std::vector<std::int64_t> smallest_primes_congruent_one(std::int64_t modulus, std::size_t count) {
  std::vector<std::int64_t> primes;
  std::int64_t bound = 3;
  while (primes.size() < count) {
    primes.push_back(next_prime_congruent_one(modulus, bound));
    bound = primes.back() + 1;
  }
  return primes;
}

std::int64_t find_prime(std::int64_t n, std::int64_t lower_bound) {
  if (n < 3) throw ParameterError("find_prime requires n >= 3");
  if (lower_bound < 3) throw ParameterError("find_prime requires lower_bound >= 3");
  return next_prime_congruent_one(n, lower_bound);
}

std::int64_t multiplicative_order(FpScalar x) {
  if (x.is_zero()) throw std::domain_error("zero has no multiplicative order");
  FpScalar acc = x;
  std::int64_t order = 1;
  while (acc.value() != 1) {
    acc *= x;
    ++order;
  }
  return order;
}

std::vector<FpScalar> primitive_roots_of_unity(std::int64_t p, std::int64_t n) {
  const PrimeModulus mod(p);
  if (n < 1 || (p - 1) % n != 0) {
    throw ParameterError(std::to_string(n) + " does not divide p - 1 = " + std::to_string(p - 1));
  }
  std::vector<FpScalar> roots;
  for (std::int64_t w = 1; w < p; ++w) {
    const FpScalar x(w, mod);
    if (x.pow(n).value() != 1) continue;
    if (multiplicative_order(x) == n) roots.push_back(x);
  }
  return roots;
}

FpScalar primitive_root_of_unity(std::int64_t p, std::int64_t n) {
  const PrimeModulus mod(p);
  if (n < 2 || (p - 1) % n != 0) {
    throw ParameterError("no element of order " + std::to_string(n) + " in [2, p-1] for p = " +
                         std::to_string(p));
  }
  for (std::int64_t w = 2; w < p; ++w) {
    const FpScalar x(w, mod);
    if (x.pow(n).value() == 1 && multiplicative_order(x) == n) return x;
  }
  throw std::logic_error("cyclic group F_p^* has no element of the requested order");
}

}  // namespace udrfusion
