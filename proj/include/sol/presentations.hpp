#pragma once

#include "sol/intlinalg.hpp"
#include "sol/words.hpp"

namespace sol {

/// Gluing matrix [[r, s], [t, u]] of a Sol sapphire: det = +-1 and rstu != 0.
class SapphireMatrix {
public:
  /// Throws InvalidMatrix naming the first violated condition.
  explicit SapphireMatrix(const Mat2Z &m);
  SapphireMatrix(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u)
      : SapphireMatrix(mat2(r, s, t, u)) {}

  /// Non-throwing validity test; on failure `why` receives the reason.
  static bool is_valid(const Mat2Z &m, std::string *why = nullptr);

  const Mat2Z &matrix() const { return m_; }
  std::int64_t r() const { return m_(0, 0); }
  std::int64_t s() const { return m_(0, 1); }
  std::int64_t t() const { return m_(1, 0); }
  std::int64_t u() const { return m_(1, 1); }
  std::int64_t det() const { return r() * u() - s() * t(); }
  bool all_positive() const { return r() > 0 && s() > 0 && t() > 0 && u() > 0; }

  friend bool operator==(const SapphireMatrix &a, const SapphireMatrix &b) {
    return a.m_ == b.m_;
  }

private:
  Mat2Z m_;
};

/// Monodromy [[m, n], [p, q]] of a torus bundle: det = +-1. Anosov-ness
/// (|trace| > 2) is reported, not required.
class TorusBundleMatrix {
public:
  /// Throws InvalidMatrix when |det| != 1.
  explicit TorusBundleMatrix(const Mat2Z &m);

  const Mat2Z &matrix() const { return m_; }
  std::int64_t trace() const { return m_(0, 0) + m_(1, 1); }
  bool is_anosov() const { return trace() > 2 || trace() < -2; }

  friend bool operator==(const TorusBundleMatrix &a, const TorusBundleMatrix &b) {
    return a.m_ == b.m_;
  }

private:
  Mat2Z m_;
};

/// < a, b, c | a b a^-1 b,  c^2 a^-2r b^-s,  c a^2t b^u c^-1 a^2t b^u >
Presentation pi1_sapphire(const SapphireMatrix &A);

/// < a, b, c | a b a^-1 b^-1,  c a c^-1 b^-p a^-m,  c b c^-1 b^-q a^-n >
Presentation pi1_torus_bundle(const TorusBundleMatrix &A);

/// Rows are the exponent-sum vectors of the relators.
IntMatrixT<std::int64_t> relation_matrix(const Presentation &p);

/// Abelianization via Smith normal form of the relation matrix.
AbelianGroup h1_of_presentation(const Presentation &p);

} // namespace sol
