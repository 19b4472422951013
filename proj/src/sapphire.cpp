#include "sol/sapphire.hpp"

#include <algorithm>
#include <optional>

namespace sol {

namespace {

const Mat2Z kB = mat2(1, 0, 0, -1);

bool qualifies_canonical(const Mat2Z &m) {
  return m(0, 0) > 0 && m(0, 1) > 0 && m(1, 0) > 0 && m(1, 1) > 0 && m(0, 0) <= m(1, 1);
}

} // namespace

std::vector<Mat2Z> morimoto_orbit(const SapphireMatrix &A) {
  std::vector<Mat2Z> out;
  out.reserve(16);
  for (const Mat2Z &X : {A.matrix(), inv2(A.matrix())}) {
    for (const Mat2Z &Y : {X, mul2(kB, X), mul2(X, kB), mul2(mul2(kB, X), kB)}) {
      out.push_back(Y);
      out.push_back(-Y);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_orbit(const SapphireMatrix &A, const Mat2Z &candidate) {
  const auto orbit = morimoto_orbit(A);
  return std::binary_search(orbit.begin(), orbit.end(), candidate, lex_less);
}

CanonicalSapphire canonical_form(const SapphireMatrix &A) {
  // orbit is sorted, so the first qualifying member is the minimum
  for (const Mat2Z &m : morimoto_orbit(A))
    if (qualifies_canonical(m))
      return CanonicalSapphire(SapphireMatrix(m));
  throw NoPositiveRepresentative("orbit of " + to_text(A.matrix()) +
                                 " has no all-positive member with r <= u");
}

bool homeomorphic(const SapphireMatrix &A, const SapphireMatrix &B) {
  return canonical_form(A) == canonical_form(B);
}

bool homeomorphic_by_orbit(const SapphireMatrix &A, const SapphireMatrix &B) {
  return in_orbit(A, B.matrix());
}

AbelianGroup h1_sapphire(const SapphireMatrix &A) {
  const CanonicalSapphire c = canonical_form(A);
  const BigInt four_t = BigInt(4) * c.t();
  if (c.s() % 2 != 0)
    return abelian_group_from_cyclic({four_t, BigInt(4)});
  return abelian_group_from_cyclic({four_t, BigInt(2), BigInt(2)});
}

} // namespace sol
