#pragma once

#include "sol/covers.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sol {

/// Both positive solutions (r, s, t, u) of
///   a = ru + ts,  b = 2rs,  c = 2tu,  d = ru + st.
/// With P = (a+1)/2 and Q = (a-1)/2 (coprime), a solution has {st, ru} = {P, Q}:
///   first:  r = (b/2)_Q, s = (b/2)_P, t = (c/2)_P, u = (c/2)_Q
///   second: r = (b/2)_P, s = (b/2)_Q, t = (c/2)_Q, u = (c/2)_P
/// where x_P is the part of x supported on the primes of P.
/// Requires a = d odd, b and c even, a, b, c positive, ad - bc = 1; throws
/// PreconditionViolation listing each failed hypothesis.
std::pair<SapphireMatrix, SapphireMatrix> solve_sapphire_down1(std::int64_t a, std::int64_t b,
                                                               std::int64_t c, std::int64_t d);

/// Positive solutions of a = ru + ts, b = 2su, c = 2rt, d = ru + st. If the
/// first Down1 solution is [[x, y], [z, w]], these are [[w, y], [z, x]] and
/// [[z, x], [w, y]].
std::pair<SapphireMatrix, SapphireMatrix> solve_sapphire_down3(std::int64_t a, std::int64_t b,
                                                               std::int64_t c, std::int64_t d);

enum class InvolutionCount { None, ExactlyOne, ExactlyThree, ThreeToFive };
std::string to_string(InvolutionCount c);

struct Quotient {
  SapphireMatrix raw;
  CanonicalSapphire canonical;
  std::string source; // hom class realising the cover S_A -> quotient
};

struct InvolutionReport {
  InvolutionCount count = InvolutionCount::None;
  std::vector<Quotient> quotients; // pairwise non-homeomorphic
  std::vector<std::string> notes;
};

/// Free involutions on S_A up to equivalence, read off the gluing matrix
/// [[a, b], [c, d]]:
///   c odd                -> None
///   c even, b odd        -> ExactlyOne, quotient [[a, 2b], [c/2, d]]
///   b, c even, |a| != |d| -> ExactlyOne, same quotient
///   b, c even, |a| = |d|  -> Down1 on the canonical form; ExactlyThree when
///                           the solution has r != u and s != t, otherwise
///                           ThreeToFive with every quotient class found.
InvolutionReport classify_involutions(const SapphireMatrix &A);

enum class BUResult { Holds, Fails, VacuousNoInvolution };
std::string to_string(BUResult r);

struct BUVerdict {
  std::int64_t n;
  BUResult verdict;
  std::string rationale;
};

/// Borsuk-Ulam property of (S_A, tau, R^n) over every free involution tau.
/// Throws DomainError for n < 1.
BUVerdict borsuk_ulam(const SapphireMatrix &A, std::int64_t n);

} // namespace sol
