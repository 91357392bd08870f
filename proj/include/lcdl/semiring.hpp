#pragma once

// Abstract semirings and the induced dense n x n matrix semiring.

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcdl {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A semiring is a runtime object because some instances (distinguished
// languages) carry state such as their alphabet.
template <typename S>
concept Semiring = std::equality_comparable<S> &&
    requires(const S& s, const typename S::value_type& a) {
      typename S::value_type;
      { s.zero() } -> std::convertible_to<typename S::value_type>;
      { s.one() } -> std::convertible_to<typename S::value_type>;
      { s.add(a, a) } -> std::convertible_to<typename S::value_type>;
      { s.mul(a, a) } -> std::convertible_to<typename S::value_type>;
      { S::is_idempotent } -> std::convertible_to<bool>;
      { S::is_commutative } -> std::convertible_to<bool>;
    };

using Natural = boost::multiprecision::cpp_int;

// (N, +, *, 0, 1) with exact arithmetic.
struct NaturalSemiring {
  using value_type = Natural;
  static constexpr bool is_idempotent = false;
  static constexpr bool is_commutative = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }

  friend bool operator==(const NaturalSemiring&, const NaturalSemiring&) = default;
};

// Dense square matrix over a semiring. Immutable after construction.
template <Semiring S>
class Matrix {
 public:
  using value_type = typename S::value_type;

  Matrix(S semiring, std::size_t n, std::vector<value_type> entries)
      : semiring_(std::move(semiring)), n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw DimensionError("matrix dimension must be at least 1");
    if (entries_.size() != n_ * n_) {
      throw DimensionError("matrix of dimension " + std::to_string(n_) + " needs " +
                           std::to_string(n_ * n_) + " entries, got " +
                           std::to_string(entries_.size()));
    }
  }

  static Matrix zero(S semiring, std::size_t n) {
    if (n == 0) throw DimensionError("matrix dimension must be at least 1");
    auto z = semiring.zero();
    std::vector<value_type> entries(n * n, z);
    return Matrix(std::move(semiring), n, std::move(entries));
  }

  static Matrix identity(S semiring, std::size_t n) {
    if (n == 0) throw DimensionError("matrix dimension must be at least 1");
    std::vector<value_type> entries(n * n, semiring.zero());
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = semiring.one();
    return Matrix(std::move(semiring), n, std::move(entries));
  }

  std::size_t size() const noexcept { return n_; }
  const S& semiring() const noexcept { return semiring_; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const value_type& at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    return entries_[i * n_ + j];
  }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.semiring_ == b.semiring_ && a.entries_ == b.entries_;
  }

 private:
  S semiring_;
  std::size_t n_;
  std::vector<value_type> entries_;
};

namespace detail {
template <Semiring S>
void require_compatible(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("matrix dimensions differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  if (!(a.semiring() == b.semiring())) throw DimensionError("matrices use different semirings");
}
}  // namespace detail

template <Semiring S>
Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_compatible(a, b);
  const auto& s = a.semiring();
  std::vector<typename S::value_type> out;
  out.reserve(a.entries().size());
  for (std::size_t idx = 0; idx < a.entries().size(); ++idx) {
    out.push_back(s.add(a.entries()[idx], b.entries()[idx]));
  }
  return Matrix<S>(s, a.size(), std::move(out));
}

/// (A*B)_ij = sum_m A_im * B_mj. Entries are independent of each other.
template <Semiring S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_compatible(a, b);
  const auto& s = a.semiring();
  const std::size_t n = a.size();
  std::vector<typename S::value_type> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto acc = s.zero();
      for (std::size_t m = 0; m < n; ++m) acc = s.add(acc, s.mul(a(i, m), b(m, j)));
      out.push_back(std::move(acc));
    }
  }
  return Matrix<S>(s, n, std::move(out));
}

/// A^[1] = A, A^[k] = A * A^[k-1]. The left recurrence is kept literally:
/// products over non-associative multiplications must not be regrouped.
template <Semiring S>
Matrix<S> power_left(const Matrix<S>& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("matrix power exponent must be at least 1");
  Matrix<S> acc = a;
  for (std::size_t step = 2; step <= k; ++step) acc = multiply(a, acc);
  return acc;
}

}  // namespace lcdl
