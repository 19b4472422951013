#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sol {

/// A generator raised to +1 or -1.
struct Letter {
  std::size_t generator = 0;
  int sign = 1;

  friend auto operator<=>(const Letter &, const Letter &) = default;
};

constexpr Letter inverse(Letter l) { return {l.generator, -l.sign}; }

/// Freely reduced word in indexed generators. The empty word is the identity.
class Word {
public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters);
  static Word reduce(std::initializer_list<Letter> letters) {
    return reduce(std::span<const Letter>(letters.begin(), letters.size()));
  }
  /// g^exponent; exponent 0 gives the identity.
  static Word power(std::size_t generator, std::int64_t exponent);
  static Word generator(std::size_t g) { return power(g, 1); }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  /// One past the largest generator index used (0 for the identity).
  std::size_t alphabet_bound() const;

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;

private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

Word concat(const Word &u, const Word &v);
Word invert(const Word &u);
/// by * u * by^-1
Word conjugate(const Word &u, const Word &by);

Word operator*(const Word &u, const Word &v);

/// Signed occurrence count of each generator; length = generator_count.
std::vector<std::int64_t> exponent_sums(const Word &w, std::size_t generator_count);

/// Text form `a b^-1 c^2`: syllables separated by spaces, exponent after a caret.
std::string to_text(const Word &w, std::span<const std::string> names);

/// A finitely presented group <generators | relators>.
class Presentation {
public:
  /// Throws DomainError if a relator mentions a generator >= generator_count
  /// or if names.size() != generator_count.
  Presentation(std::size_t generator_count, std::vector<std::string> names,
               std::vector<Word> relators);
  /// Generators named a, b, c when there are at most three, x0, x1, ... otherwise.
  Presentation(std::size_t generator_count, std::vector<Word> relators);

  std::size_t generator_count() const { return generator_count_; }
  const std::vector<std::string> &generator_names() const { return names_; }
  const std::vector<Word> &relators() const { return relators_; }

  /// Multi-line `< a, b | r1, r2 >` rendering for debugging.
  std::string to_text() const;

private:
  std::size_t generator_count_;
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

} // namespace sol
