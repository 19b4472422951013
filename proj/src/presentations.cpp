#include "sol/presentations.hpp"

namespace sol {

namespace {

constexpr std::size_t kA = 0, kB = 1, kC = 2;

Word g(std::size_t gen, std::int64_t e = 1) { return Word::power(gen, e); }

} // namespace

bool SapphireMatrix::is_valid(const Mat2Z &m, std::string *why) {
  static constexpr const char *names[] = {"r", "s", "t", "u"};
  const auto e = entries(m);
  for (int i = 0; i < 4; ++i)
    if (e[i] == 0) {
      if (why)
        *why = std::string("entry ") + names[i] + " is zero: not a Sol sapphire";
      return false;
    }
  std::int64_t d = 0;
  try {
    d = det2(m);
  } catch (const OverflowError &) {
    if (why)
      *why = "determinant overflows: not in GL(2,Z)";
    return false;
  }
  if (d != 1 && d != -1) {
    if (why)
      *why = "determinant is " + std::to_string(d) + ": not in GL(2,Z)";
    return false;
  }
  return true;
}

SapphireMatrix::SapphireMatrix(const Mat2Z &m) : m_(m) {
  std::string why;
  if (!is_valid(m, &why))
    throw InvalidMatrix(why);
}

TorusBundleMatrix::TorusBundleMatrix(const Mat2Z &m) : m_(m) {
  const std::int64_t d = det2(m);
  if (d != 1 && d != -1)
    throw InvalidMatrix("determinant is " + std::to_string(d) + ": not in GL(2,Z)");
}

Presentation pi1_sapphire(const SapphireMatrix &A) {
  const std::int64_t r = A.r(), s = A.s(), t = A.t(), u = A.u();
  std::vector<Word> rel;
  rel.push_back(g(kA) * g(kB) * g(kA, -1) * g(kB));
  rel.push_back(g(kC, 2) * g(kA, checked_mul(-2, r)) * g(kB, -s));
  const Word tail = g(kA, checked_mul(2, t)) * g(kB, u);
  rel.push_back(g(kC) * tail * g(kC, -1) * tail);
  return Presentation(3, {"a", "b", "c"}, std::move(rel));
}

Presentation pi1_torus_bundle(const TorusBundleMatrix &A) {
  const Mat2Z &M = A.matrix();
  const std::int64_t m = M(0, 0), n = M(0, 1), p = M(1, 0), q = M(1, 1);
  std::vector<Word> rel;
  rel.push_back(g(kA) * g(kB) * g(kA, -1) * g(kB, -1));
  rel.push_back(g(kC) * g(kA) * g(kC, -1) * g(kB, -p) * g(kA, -m));
  rel.push_back(g(kC) * g(kB) * g(kC, -1) * g(kB, -q) * g(kA, -n));
  return Presentation(3, {"a", "b", "c"}, std::move(rel));
}

IntMatrixT<std::int64_t> relation_matrix(const Presentation &p) {
  const auto n = p.generator_count();
  IntMatrixT<std::int64_t> m(static_cast<Eigen::Index>(p.relators().size()),
                             static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto sums = exponent_sums(p.relators()[i], n);
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sums[j];
  }
  return m;
}

AbelianGroup h1_of_presentation(const Presentation &p) {
  return smith_normal_form(relation_matrix(p));
}

} // namespace sol
