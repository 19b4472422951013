#include "sol/involutions.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sol {

namespace {

bool is_even(std::int64_t x) { return x % 2 == 0; }

struct DownData {
  std::int64_t beta, gamma; // b/2, c/2
  std::int64_t plus, minus; // (a+1)/2, (a-1)/2
};

DownData check_down_preconditions(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t d) {
  std::vector<std::string> failed;
  if (a != d)
    failed.push_back("a != d");
  if (is_even(a))
    failed.push_back("a is even");
  if (!is_even(b))
    failed.push_back("b is odd");
  if (!is_even(c))
    failed.push_back("c is odd");
  if (a == 0 || b == 0 || c == 0 || d == 0)
    failed.push_back("an entry is zero");
  else if (a < 0 || b < 0 || c < 0)
    failed.push_back("a, b, c must be positive for positive solutions");
  std::int64_t det = 0;
  try {
    det = checked_sub(checked_mul(a, d), checked_mul(b, c));
  } catch (const OverflowError &) {
    failed.push_back("determinant overflows");
  }
  if (det != 1)
    failed.push_back("det = " + std::to_string(det) + ", expected 1");
  if (!failed.empty()) {
    std::string msg = "SapphireDown precondition violated:";
    for (const auto &f : failed)
      msg += " [" + f + "]";
    throw PreconditionViolation(msg);
  }
  return {b / 2, c / 2, (a + 1) / 2, (a - 1) / 2};
}

void expect_solution(bool ok) {
  if (!ok)
    throw std::logic_error("SapphireDown solution does not satisfy its system");
}

} // namespace

std::pair<SapphireMatrix, SapphireMatrix> solve_sapphire_down1(std::int64_t a, std::int64_t b,
                                                               std::int64_t c, std::int64_t d) {
  const DownData dd = check_down_preconditions(a, b, c, d);
  const std::int64_t beta_p = part_supported_on(dd.beta, dd.plus);
  const std::int64_t beta_m = part_supported_on(dd.beta, dd.minus);
  const std::int64_t gamma_p = part_supported_on(dd.gamma, dd.plus);
  const std::int64_t gamma_m = part_supported_on(dd.gamma, dd.minus);
  // ts = (a+1)/2, ru = (a-1)/2
  const Mat2Z first = mat2(beta_m, beta_p, gamma_p, gamma_m);
  // ts = (a-1)/2, ru = (a+1)/2
  const Mat2Z second = mat2(beta_p, beta_m, gamma_m, gamma_p);
  for (const Mat2Z &m : {first, second}) {
    const std::int64_t r = m(0, 0), s = m(0, 1), t = m(1, 0), u = m(1, 1);
    expect_solution(r * u + t * s == a && 2 * r * s == b && 2 * t * u == c);
  }
  return {SapphireMatrix(first), SapphireMatrix(second)};
}

std::pair<SapphireMatrix, SapphireMatrix> solve_sapphire_down3(std::int64_t a, std::int64_t b,
                                                               std::int64_t c, std::int64_t d) {
  const DownData dd = check_down_preconditions(a, b, c, d);
  const std::int64_t beta_p = part_supported_on(dd.beta, dd.plus);
  const std::int64_t beta_m = part_supported_on(dd.beta, dd.minus);
  const std::int64_t gamma_p = part_supported_on(dd.gamma, dd.plus);
  const std::int64_t gamma_m = part_supported_on(dd.gamma, dd.minus);
  const Mat2Z first = mat2(gamma_m, beta_p, gamma_p, beta_m);
  const Mat2Z second = mat2(gamma_p, beta_m, gamma_m, beta_p);
  for (const Mat2Z &m : {first, second}) {
    const std::int64_t r = m(0, 0), s = m(0, 1), t = m(1, 0), u = m(1, 1);
    expect_solution(r * u + t * s == a && 2 * s * u == b && 2 * r * t == c);
  }
  return {SapphireMatrix(first), SapphireMatrix(second)};
}

std::string to_string(InvolutionCount c) {
  switch (c) {
  case InvolutionCount::None:
    return "none";
  case InvolutionCount::ExactlyOne:
    return "exactly-one";
  case InvolutionCount::ExactlyThree:
    return "exactly-three";
  case InvolutionCount::ThreeToFive:
    return "three-to-five";
  }
  return "none";
}

namespace {

Quotient make_quotient(const Mat2Z &m, std::string source) {
  SapphireMatrix raw(m);
  return {raw, canonical_form(raw), std::move(source)};
}

} // namespace

InvolutionReport classify_involutions(const SapphireMatrix &A) {
  const std::int64_t a = A.r(), b = A.s(), c = A.t(), d = A.u();
  InvolutionReport rep;
  if (!is_even(c)) {
    rep.count = InvolutionCount::None;
    rep.notes.push_back("c odd: no free involutions");
    return rep;
  }

  Quotient case_two = make_quotient(mat2(a, checked_mul(2, b), c / 2, d), "phi2");
  if (!is_even(b)) {
    rep.count = InvolutionCount::ExactlyOne;
    rep.notes.push_back("c even, b odd: one class, quotient [[a,2b],[c/2,d]]");
    rep.quotients.push_back(std::move(case_two));
    return rep;
  }
  if (std::llabs(a) != std::llabs(d)) {
    rep.count = InvolutionCount::ExactlyOne;
    rep.notes.push_back("b, c even, |a| != |d|: one class, quotient [[a,2b],[c/2,d]]");
    rep.quotients.push_back(std::move(case_two));
    return rep;
  }

  const CanonicalSapphire canon = canonical_form(A);
  const auto [down1_a, down1_b] = solve_sapphire_down1(canon.r(), canon.s(), canon.t(), canon.u());
  const auto [down3_a, down3_b] = solve_sapphire_down3(canon.r(), canon.s(), canon.t(), canon.u());
  rep.quotients.push_back(std::move(case_two));

  if (down1_a.r() != down1_a.u() && down1_a.s() != down1_a.t()) {
    rep.count = InvolutionCount::ExactlyThree;
    rep.notes.push_back("b, c even, |a| = |d|: three classes");
    rep.quotients.push_back(make_quotient(down1_a.matrix(), "phi1"));
    rep.quotients.push_back(make_quotient(down1_b.matrix(), "phi1"));
    return rep;
  }

  rep.count = InvolutionCount::ThreeToFive;
  rep.notes.push_back("b, c even, |a| = |d|, degenerate solution (r = u or s = t): "
                      "between three and five classes, exact count undecided");
  const std::pair<const SapphireMatrix *, const char *> candidates[] = {
      {&down1_a, "phi1"}, {&down1_b, "phi1"}, {&down3_a, "phi3"}, {&down3_b, "phi3"}};
  for (const auto &[m, source] : candidates) {
    Quotient q = make_quotient(m->matrix(), source);
    bool seen = false;
    for (const Quotient &existing : rep.quotients)
      seen = seen || existing.canonical == q.canonical;
    if (!seen)
      rep.quotients.push_back(std::move(q));
  }
  return rep;
}

std::string to_string(BUResult r) {
  switch (r) {
  case BUResult::Holds:
    return "HOLDS";
  case BUResult::Fails:
    return "FAILS";
  case BUResult::VacuousNoInvolution:
    return "VACUOUS";
  }
  return "VACUOUS";
}

BUVerdict borsuk_ulam(const SapphireMatrix &A, std::int64_t n) {
  if (n < 1)
    throw DomainError("Borsuk-Ulam dimension n must be positive, got " + std::to_string(n));
  const InvolutionReport rep = classify_involutions(A);
  if (rep.count == InvolutionCount::None)
    return {n, BUResult::VacuousNoInvolution, "no free involutions (c odd)"};
  if (n == 1)
    return {n, BUResult::Holds,
            "connectedness: f - f o tau changes sign (standard fact, outside the sapphire "
            "classification)"};
  if (n == 2)
    return {n, BUResult::Holds, "H1(M; Z) is finite, so every free involution has the property"};
  if (n == 3) {
    const bool holds = A.t() % 2 == 0 && A.s() % 2 != 0;
    return {n, holds ? BUResult::Holds : BUResult::Fails,
            holds ? "c even and b odd: cube of the characteristic class is nonzero"
                  : "b even: cube of every characteristic class vanishes"};
  }
  return {n, BUResult::Fails,
          "n > 3 = dim M: an equivariant map to S^(n-1) exists (standard reading)"};
}

} // namespace sol
