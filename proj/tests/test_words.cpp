#include "oracles.hpp"
#include "sol/errors.hpp"
#include "sol/words.hpp"

#include <doctest.h>

using namespace sol;

namespace {

constexpr std::size_t a = 0, b = 1, c = 2;
Letter L(std::size_t g, int s = 1) { return {g, s}; }

std::vector<std::string> abc() { return {"a", "b", "c"}; }

} // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(Word::reduce({L(a), L(a, -1), L(b)}) == Word::generator(b));
  CHECK(Word::reduce(std::span<const Letter>{}).is_identity());
  CHECK(Word::reduce({L(a), L(b), L(b, -1), L(a, -1), L(c)}) == Word::generator(c));
  // a a^-1 is not confused with a^-1 b
  CHECK(Word::reduce({L(a, -1), L(b)}).length() == 2);
  CHECK_THROWS_AS(Word::reduce({Letter{a, 2}}), DomainError);
}

TEST_CASE("concat, invert, conjugate") {
  const Word A = Word::generator(a), B = Word::generator(b);
  CHECK(concat(A, invert(A)).is_identity());
  CHECK(invert(A * B) == Word::reduce({L(b, -1), L(a, -1)}));
  CHECK(conjugate(B, A) == Word::reduce({L(a), L(b), L(a, -1)}));
  CHECK(conjugate(B, A).length() == 3);
}

TEST_CASE("exponent sums") {
  const Word abab = Word::reduce({L(a), L(b), L(a, -1), L(b)});
  CHECK(exponent_sums(abab, 3) == std::vector<std::int64_t>{0, 2, 0});
  const Word rel = Word::power(c, 2) * Word::power(a, -2) * Word::power(b, -1);
  CHECK(exponent_sums(rel, 3) == std::vector<std::int64_t>{-2, -1, 2});
  CHECK(exponent_sums(Word{}, 3) == std::vector<std::int64_t>{0, 0, 0});
  CHECK_THROWS_AS(exponent_sums(Word::generator(5), 3), DomainError);
}

TEST_CASE("text form uses caret exponents") {
  const Word w = Word::generator(a) * Word::power(b, -1) * Word::power(c, 2);
  CHECK(to_text(w, abc()) == "a b^-1 c^2");
  CHECK(to_text(Word{}, abc()) == "1");
  const std::vector<std::string> compound{"a^2", "a b a^-1"};
  CHECK(to_text(Word::power(0, -1) * Word::power(1, 2), compound) == "(a^2)^-1 (a b a^-1)^2");
}

TEST_CASE("presentation rejects foreign generators") {
  CHECK_THROWS_AS(Presentation(2, {Word::generator(2)}), DomainError);
  CHECK_THROWS_AS(Presentation(2, {"x"}, {}), DomainError);
  const Presentation p(2, {"x", "y"}, {Word::generator(0) * Word::generator(1)});
  CHECK(p.generator_count() == 2);
  CHECK(p.to_text() == "< x, y |\n    x y\n>");
}

TEST_CASE("property: reduction agrees with naive reduction and is idempotent") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const auto raw = oracle::random_letters(rng, 3, 24);
    const Word w = Word::reduce(raw);
    const auto naive = oracle::reduce_naive(raw);
    REQUIRE(std::vector<Letter>(w.letters().begin(), w.letters().end()) == naive);
    CHECK(Word::reduce(w.letters()) == w);
    CHECK(w.length() <= raw.size());
  }
}

TEST_CASE("property: group laws on reduced words") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = Word::reduce(oracle::random_letters(rng, 3, 12));
    const Word v = Word::reduce(oracle::random_letters(rng, 3, 12));
    const Word w = Word::reduce(oracle::random_letters(rng, 3, 12));
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(concat(u, invert(u)).is_identity());
    CHECK(invert(invert(u)) == u);
    const auto su = exponent_sums(u, 3), sv = exponent_sums(v, 3);
    const auto suv = exponent_sums(concat(u, v), 3);
    for (std::size_t g = 0; g < 3; ++g)
      CHECK(suv[g] == su[g] + sv[g]);
  }
}
