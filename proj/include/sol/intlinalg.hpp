#pragma once

#include "sol/errors.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sol {

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves as a plain value inside Eigen expressions.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <typename Scalar> using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
/// Row-major reading [[r, s], [t, u]].
using Mat2Z = Mat2<std::int64_t>;

template <typename Scalar>
using IntMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = IntMatrixT<BigInt>;

// ---------------------------------------------------------------------------
// checked 64-bit arithmetic

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError("integer overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow in multiplication");
  return out;
}

// ---------------------------------------------------------------------------
// 2x2 calculus

inline Mat2Z mat2(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u) {
  Mat2Z m;
  m << r, s, t, u;
  return m;
}

inline std::int64_t det2(const Mat2Z &m) {
  return checked_sub(checked_mul(m(0, 0), m(1, 1)), checked_mul(m(0, 1), m(1, 0)));
}

inline Mat2Z mul2(const Mat2Z &a, const Mat2Z &b) {
  Mat2Z out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = checked_add(checked_mul(a(i, 0), b(0, j)), checked_mul(a(i, 1), b(1, j)));
  return out;
}

/// Inverse in GL(2,Z); throws NotUnimodular when |det| != 1.
inline Mat2Z inv2(const Mat2Z &m) {
  const std::int64_t d = det2(m);
  if (d != 1 && d != -1)
    throw NotUnimodular("matrix has determinant " + std::to_string(d) + ", not invertible over Z");
  // adjugate / det with det = +-1
  return mat2(d * m(1, 1), -d * m(0, 1), -d * m(1, 0), d * m(0, 0));
}

inline Mat2Z identity2() { return Mat2Z::Identity(); }

/// (r, s, t, u), the key used for lexicographic ordering.
inline std::array<std::int64_t, 4> entries(const Mat2Z &m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

inline bool lex_less(const Mat2Z &a, const Mat2Z &b) { return entries(a) < entries(b); }

/// `r s; t u`
std::string to_text(const Mat2Z &m);

/// Accepts `r s; t u` (also with commas) and JSON `[[r,s],[t,u]]`.
/// Throws ParseError.
Mat2Z parse_mat2(const std::string &text);

// ---------------------------------------------------------------------------
// finitely generated abelian groups

/// Z^free_rank + Z/d1 + ... + Z/dk with 1 < d1 | d2 | ... | dk.
struct AbelianGroup {
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Order of the torsion subgroup.
  BigInt torsion_order() const;

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

/// Canonical invariant-factor form of a direct sum of cyclic groups Z/n_i
/// (n_i = 0 means Z). Primary decomposition then regrouping.
AbelianGroup abelian_group_from_cyclic(const std::vector<BigInt> &orders);

/// `Z_4 + Z_4`, `Z + Z_2`, `0`
std::string to_text(const AbelianGroup &g);
/// `4.4` (free summands written as 0)
std::string to_dotted(const AbelianGroup &g);

namespace detail {
AbelianGroup smith_reduce(IntMatrix m);
} // namespace detail

/// Cokernel of an integer matrix acting on Z^cols (rows are relations).
/// Any Eigen integer expression is accepted; reduction happens in BigInt.
template <typename Derived>
AbelianGroup smith_normal_form(const Eigen::MatrixBase<Derived> &m) {
  return detail::smith_reduce(m.template cast<BigInt>());
}

/// Diagonal of the Smith normal form (length min(rows, cols), nonnegative,
/// divisibility chain, zeros last).
std::vector<BigInt> smith_diagonal(IntMatrix m);

// ---------------------------------------------------------------------------
// elementary number theory

using FactorMap = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Trial division. Throws DomainError for x < 1; factorize(1) is empty.
FactorMap factorize(std::int64_t x);

/// Largest e with p^e | x. Throws DomainError for x == 0 or p < 2.
unsigned valuation(std::int64_t x, std::uint64_t p);

/// Product of p^|x|_p over the primes p of `primes_of`: the part of |x|
/// supported on the prime divisors of primes_of.
std::int64_t part_supported_on(std::int64_t x, std::int64_t primes_of);

std::int64_t ipow(std::int64_t base, unsigned exp);

} // namespace sol
