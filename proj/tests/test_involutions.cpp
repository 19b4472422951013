#include "oracles.hpp"
#include "sol/involutions.hpp"

#include <doctest.h>

using namespace sol;

namespace {

oracle::Key key(const SapphireMatrix &m) { return {m.r(), m.s(), m.t(), m.u()}; }

std::set<oracle::Key> pair_keys(const std::pair<SapphireMatrix, SapphireMatrix> &p) {
  return {key(p.first), key(p.second)};
}

std::vector<Mat2Z> raw_quotients(const InvolutionReport &r) {
  std::vector<Mat2Z> out;
  for (const Quotient &q : r.quotients)
    out.push_back(q.raw.matrix());
  return out;
}

} // namespace

TEST_CASE("SapphireDown1 examples") {
  const auto [x, y] = solve_sapphire_down1(3, 2, 4, 3);
  CHECK(x.matrix() == mat2(1, 1, 2, 1));
  CHECK(y.matrix() == mat2(1, 1, 1, 2));
  CHECK(pair_keys(solve_sapphire_down1(5, 4, 6, 5)) ==
        std::set<oracle::Key>{{2, 1, 3, 1}, {1, 2, 1, 3}});
  CHECK(pair_keys(solve_sapphire_down1(5, 4, 6, 5)) == oracle::down1_brute(5, 4, 6));
  CHECK_THROWS_AS(solve_sapphire_down1(3, 2, 4, 5), PreconditionViolation);
  try {
    solve_sapphire_down1(4, 3, 5, 5);
    FAIL("accepted bad input");
  } catch (const PreconditionViolation &e) {
    const std::string msg = e.what();
    CHECK(msg.find("a != d") != std::string::npos);
    CHECK(msg.find("a is even") != std::string::npos);
    CHECK(msg.find("b is odd") != std::string::npos);
    CHECK(msg.find("c is odd") != std::string::npos);
  }
}

TEST_CASE("SapphireDown3 examples") {
  CHECK(pair_keys(solve_sapphire_down3(3, 2, 4, 3)) ==
        std::set<oracle::Key>{{1, 1, 2, 1}, {2, 1, 1, 1}});
  // diagonal-swapped partners of the Down1 pair
  CHECK(pair_keys(solve_sapphire_down3(5, 4, 6, 5)) ==
        std::set<oracle::Key>{{1, 1, 3, 2}, {3, 2, 1, 1}});
  CHECK(pair_keys(solve_sapphire_down3(5, 4, 6, 5)) == oracle::down3_brute(5, 4, 6));
  CHECK_THROWS_AS(solve_sapphire_down3(4, 2, 4, 4), PreconditionViolation);
  CHECK_THROWS_AS(solve_sapphire_down3(-3, -2, -4, -3), PreconditionViolation);
}

TEST_CASE("involution classification examples") {
  const auto none = classify_involutions(SapphireMatrix(1, 1, 1, 2));
  CHECK(none.count == InvolutionCount::None);
  CHECK(none.quotients.empty());

  const auto one = classify_involutions(SapphireMatrix(1, 1, 2, 3));
  CHECK(one.count == InvolutionCount::ExactlyOne);
  CHECK(raw_quotients(one) == std::vector<Mat2Z>{mat2(1, 2, 1, 3)});

  const auto three = classify_involutions(SapphireMatrix(5, 4, 6, 5));
  CHECK(three.count == InvolutionCount::ExactlyThree);
  CHECK(raw_quotients(three) ==
        std::vector<Mat2Z>{mat2(5, 8, 3, 5), mat2(2, 1, 3, 1), mat2(1, 2, 1, 3)});

  const auto degenerate = classify_involutions(SapphireMatrix(3, 2, 4, 3));
  CHECK(degenerate.count == InvolutionCount::ThreeToFive);
  CHECK(degenerate.quotients.size() >= 3);
  CHECK(to_string(degenerate.count) == "three-to-five");

  // II-a: b, c even and |a| != |d|
  const auto two_a = classify_involutions(SapphireMatrix(1, 2, 2, 5));
  CHECK(two_a.count == InvolutionCount::ExactlyOne);
  CHECK(raw_quotients(two_a) == std::vector<Mat2Z>{mat2(1, 4, 1, 5)});
}

TEST_CASE("Borsuk-Ulam examples") {
  CHECK(borsuk_ulam(SapphireMatrix(1, 1, 2, 3), 3).verdict == BUResult::Holds);
  CHECK(borsuk_ulam(SapphireMatrix(3, 2, 4, 3), 3).verdict == BUResult::Fails);
  CHECK(borsuk_ulam(SapphireMatrix(1, 1, 2, 3), 2).verdict == BUResult::Holds);
  CHECK(borsuk_ulam(SapphireMatrix(1, 1, 1, 2), 3).verdict == BUResult::VacuousNoInvolution);
  CHECK(borsuk_ulam(SapphireMatrix(1, 1, 2, 3), 1).verdict == BUResult::Holds);
  CHECK(borsuk_ulam(SapphireMatrix(1, 1, 2, 3), 4).verdict == BUResult::Fails);
  CHECK(borsuk_ulam(SapphireMatrix(1, 1, 2, 3), 17).verdict == BUResult::Fails);
  CHECK_THROWS_AS(borsuk_ulam(SapphireMatrix(1, 1, 2, 3), 0), DomainError);
  CHECK(to_string(BUResult::VacuousNoInvolution) == "VACUOUS");
}

TEST_CASE("property: Down solvers match brute force for odd a up to 15") {
  std::size_t cases = 0;
  for (std::int64_t a = 3; a <= 15; a += 2)
    for (std::int64_t b = 2; b <= a * a - 1; b += 2) {
      if ((a * a - 1) % b != 0)
        continue;
      const std::int64_t c = (a * a - 1) / b;
      if (c % 2 != 0)
        continue;
      CHECK(pair_keys(solve_sapphire_down1(a, b, c, a)) == oracle::down1_brute(a, b, c));
      CHECK(pair_keys(solve_sapphire_down3(a, b, c, a)) == oracle::down3_brute(a, b, c));
      ++cases;
    }
  CHECK(cases > 0);
}

TEST_CASE("property: classification is constant on orbits") {
  for (const oracle::Key &k : oracle::nonzero_unimodular(4)) {
    const SapphireMatrix A(k[0], k[1], k[2], k[3]);
    const InvolutionReport base = classify_involutions(A);
    std::set<oracle::Key> base_classes;
    for (const Quotient &q : base.quotients)
      base_classes.insert(key(q.canonical.matrix()));
    CHECK(base_classes.size() == base.quotients.size());
    for (const Mat2Z &x : morimoto_orbit(A)) {
      const InvolutionReport other = classify_involutions(SapphireMatrix(x));
      CHECK(other.count == base.count);
      std::set<oracle::Key> classes;
      for (const Quotient &q : other.quotients)
        classes.insert(key(q.canonical.matrix()));
      CHECK(classes == base_classes);
    }
  }
}
