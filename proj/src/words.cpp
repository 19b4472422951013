#include "sol/words.hpp"

#include "sol/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sol {

Word Word::reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter &l : letters) {
    if (l.sign != 1 && l.sign != -1)
      throw DomainError("letter exponent must be +1 or -1");
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::power(std::size_t generator, std::int64_t exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  const auto n = static_cast<std::size_t>(exponent < 0 ? -exponent : exponent);
  return Word(std::vector<Letter>(n, Letter{generator, sign}));
}

std::size_t Word::alphabet_bound() const {
  std::size_t bound = 0;
  for (const Letter &l : letters_)
    bound = std::max(bound, l.generator + 1);
  return bound;
}

Word concat(const Word &u, const Word &v) {
  std::vector<Letter> joined(u.letters().begin(), u.letters().end());
  joined.insert(joined.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(joined);
}

Word invert(const Word &u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(inverse(*it));
  return Word::reduce(out);
}

Word conjugate(const Word &u, const Word &by) { return concat(concat(by, u), invert(by)); }

Word operator*(const Word &u, const Word &v) { return concat(u, v); }

std::vector<std::int64_t> exponent_sums(const Word &w, std::size_t generator_count) {
  std::vector<std::int64_t> sums(generator_count, 0);
  for (const Letter &l : w.letters()) {
    if (l.generator >= generator_count)
      throw DomainError("generator index " + std::to_string(l.generator) +
                        " outside alphabet of size " + std::to_string(generator_count));
    sums[l.generator] += l.sign;
  }
  return sums;
}

std::string to_text(const Word &w, std::span<const std::string> names) {
  if (w.is_identity())
    return "1";
  auto name = [&](std::size_t g) {
    return g < names.size() ? names[g] : "x" + std::to_string(g);
  };
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i])
      ++j;
    const auto run = static_cast<std::int64_t>(j - i) * letters[i].sign;
    if (!out.empty())
      out += ' ';
    std::string label = name(letters[i].generator);
    // compound names (Schreier generators) are bracketed when raised to a power
    if (run != 1 && label.find_first_of(" ^") != std::string::npos)
      label = "(" + label + ")";
    out += label;
    if (run != 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
  static constexpr const char *abc[] = {"a", "b", "c"};
  std::vector<std::string> names;
  for (std::size_t g = 0; g < n; ++g)
    names.push_back(n <= 3 ? std::string(abc[g]) : "x" + std::to_string(g));
  return names;
}

} // namespace

Presentation::Presentation(std::size_t generator_count, std::vector<std::string> names,
                           std::vector<Word> relators)
    : generator_count_(generator_count), names_(std::move(names)),
      relators_(std::move(relators)) {
  if (names_.size() != generator_count_)
    throw DomainError("presentation has " + std::to_string(generator_count_) +
                      " generators but " + std::to_string(names_.size()) + " names");
  for (const Word &r : relators_)
    if (r.alphabet_bound() > generator_count_)
      throw DomainError("relator uses a generator outside the presentation alphabet");
}

Presentation::Presentation(std::size_t generator_count, std::vector<Word> relators)
    : Presentation(generator_count, default_names(generator_count), std::move(relators)) {}

std::string Presentation::to_text() const {
  std::string out = "< ";
  for (std::size_t g = 0; g < generator_count_; ++g) {
    if (g)
      out += ", ";
    out += names_[g];
  }
  out += " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += sol::to_text(relators_[i], names_);
  }
  out += "\n>";
  return out;
}

} // namespace sol
