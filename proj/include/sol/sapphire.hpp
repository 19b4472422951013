#pragma once

#include "sol/presentations.hpp"

#include <vector>

namespace sol {

/// Matrices giving a sapphire homeomorphic to S_A:
/// { +-X, +-BX, +-XB, +-BXB : X in {A, A^-1} } with B = diag(1, -1).
/// Sorted lexicographically by (r, s, t, u), duplicates removed.
std::vector<Mat2Z> morimoto_orbit(const SapphireMatrix &A);

bool in_orbit(const SapphireMatrix &A, const Mat2Z &candidate);

/// All entries positive, r <= u, and lexicographically least such member of
/// its orbit.
class CanonicalSapphire {
public:
  const SapphireMatrix &matrix() const { return m_; }
  const Mat2Z &mat() const { return m_.matrix(); }
  std::int64_t r() const { return m_.r(); }
  std::int64_t s() const { return m_.s(); }
  std::int64_t t() const { return m_.t(); }
  std::int64_t u() const { return m_.u(); }

  friend bool operator==(const CanonicalSapphire &, const CanonicalSapphire &) = default;
  friend bool operator<(const CanonicalSapphire &a, const CanonicalSapphire &b) {
    return lex_less(a.mat(), b.mat());
  }

private:
  friend CanonicalSapphire canonical_form(const SapphireMatrix &A);
  explicit CanonicalSapphire(SapphireMatrix m) : m_(std::move(m)) {}
  SapphireMatrix m_;
};

/// Throws NoPositiveRepresentative if the orbit has no all-positive member,
/// which cannot happen for a valid SapphireMatrix.
CanonicalSapphire canonical_form(const SapphireMatrix &A);

/// Canonical-form equality.
bool homeomorphic(const SapphireMatrix &A, const SapphireMatrix &B);
/// Direct orbit membership; agrees with homeomorphic().
bool homeomorphic_by_orbit(const SapphireMatrix &A, const SapphireMatrix &B);

/// Closed form: Z_4t + Z_4 when s is odd, Z_4t + Z_2 + Z_2 when s is even,
/// with t taken from the canonical representative.
AbelianGroup h1_sapphire(const SapphireMatrix &A);

} // namespace sol
