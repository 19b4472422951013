#include "sol/covers.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace sol {

Z2Hom::Z2Hom(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  bool nontrivial = false;
  for (auto v : images_) {
    if (v > 1)
      throw InvalidHom("Z/2 images must be 0 or 1");
    nontrivial = nontrivial || v == 1;
  }
  if (!nontrivial)
    throw InvalidHom("the trivial homomorphism does not define a double cover");
}

std::uint8_t Z2Hom::operator()(const Word &w) const {
  unsigned parity = 0;
  for (const Letter &l : w.letters())
    parity ^= images_.at(l.generator);
  return static_cast<std::uint8_t>(parity);
}

bool Z2Hom::kills_relators(const Presentation &p) const {
  if (p.generator_count() != images_.size())
    return false;
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word &r) { return (*this)(r) == 0; });
}

void Z2Hom::validate(const Presentation &p) const {
  if (p.generator_count() != images_.size())
    throw InvalidHom("hom has " + std::to_string(images_.size()) +
                     " images but the group has " + std::to_string(p.generator_count()) +
                     " generators");
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    if ((*this)(p.relators()[i]) != 0)
      throw InvalidHom("relator " + std::to_string(i + 1) + " (" +
                       to_text(p.relators()[i], p.generator_names()) +
                       ") does not map to 0");
}

namespace {

constexpr std::array<std::array<std::uint8_t, 3>, 7> kPhi = {{
    {1, 0, 0},
    {0, 1, 0},
    {0, 0, 1},
    {1, 1, 0},
    {1, 0, 1},
    {0, 1, 1},
    {1, 1, 1},
}};

} // namespace

int phi_index(const Z2Hom &h) {
  if (h.size() != 3)
    throw InvalidHom("phi labels apply to homs on three generators");
  for (std::size_t i = 0; i < kPhi.size(); ++i)
    if (std::equal(kPhi[i].begin(), kPhi[i].end(), h.images().begin()))
      return static_cast<int>(i) + 1;
  throw InvalidHom("unreachable: nontrivial hom without a phi label");
}

Z2Hom phi(int index) {
  if (index < 1 || index > 7)
    throw DomainError("phi index must be in 1..7");
  const auto &im = kPhi[static_cast<std::size_t>(index - 1)];
  return Z2Hom({im.begin(), im.end()});
}

std::string case_label(int index) {
  static constexpr const char *labels[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
  if (index < 1 || index > 7)
    throw DomainError("case index must be in 1..7");
  return labels[index - 1];
}

std::vector<Z2Hom> enumerate_z2_homs(const Presentation &p) {
  const std::size_t n = p.generator_count();
  if (n >= 8 * sizeof(std::uint64_t) - 1)
    throw DomainError("too many generators to enumerate Z/2 homs");
  std::vector<std::vector<std::uint8_t>> images;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::uint8_t> im(n);
    for (std::size_t g = 0; g < n; ++g)
      im[g] = (mask >> g) & 1u;
    images.push_back(std::move(im));
  }
  std::sort(images.begin(), images.end(), [](const auto &x, const auto &y) {
    const auto wx = std::count(x.begin(), x.end(), 1);
    const auto wy = std::count(y.begin(), y.end(), 1);
    if (wx != wy)
      return wx < wy;
    return x > y;
  });
  std::vector<Z2Hom> out;
  for (auto &im : images) {
    Z2Hom h(std::move(im));
    if (h.kills_relators(p))
      out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier for index two

namespace {

/// Index bookkeeping for Schreier generators s(coset, g), coset in {0, 1}.
struct SchreierTable {
  std::size_t n;
  std::size_t x; // first generator with image 1

  /// Kernel generator index of s(coset, g), or nullopt for s(0, x) = 1.
  std::optional<std::size_t> index(unsigned coset, std::size_t g) const {
    if (coset == 0 && g == x)
      return std::nullopt;
    const std::size_t flat = coset * n + g;
    return flat > x ? flat - 1 : flat;
  }
};

std::size_t first_odd_generator(const Z2Hom &h) {
  const auto &im = h.images();
  return static_cast<std::size_t>(std::find(im.begin(), im.end(), 1) - im.begin());
}

Word rewrite(const Word &w, unsigned start, const Z2Hom &h, const SchreierTable &tab) {
  std::vector<Letter> out;
  unsigned coset = start;
  for (const Letter &l : w.letters()) {
    if (l.sign > 0) {
      if (auto k = tab.index(coset, l.generator))
        out.push_back({*k, 1});
      coset ^= h(l.generator);
    } else {
      const unsigned prev = coset ^ h(l.generator);
      if (auto k = tab.index(prev, l.generator))
        out.push_back({*k, -1});
      coset = prev;
    }
  }
  return Word::reduce(out);
}

} // namespace

std::vector<Word> schreier_generators(const Presentation &p, const Z2Hom &h) {
  h.validate(p);
  const std::size_t n = p.generator_count();
  const std::size_t x = first_odd_generator(h);
  const Word xw = Word::generator(x);
  std::vector<Word> gens;
  for (unsigned coset = 0; coset < 2; ++coset)
    for (std::size_t g = 0; g < n; ++g) {
      if (coset == 0 && g == x)
        continue;
      const Word t = coset ? xw : Word{};
      const Word tg = t * Word::generator(g);
      const Word rep = h(tg) ? xw : Word{};
      gens.push_back(tg * invert(rep));
    }
  return gens;
}

Presentation reidemeister_schreier(const Presentation &p, const Z2Hom &h) {
  const auto gens = schreier_generators(p, h); // validates
  const SchreierTable tab{p.generator_count(), first_odd_generator(h)};
  std::vector<Word> relators;
  for (unsigned coset = 0; coset < 2; ++coset)
    for (const Word &r : p.relators())
      relators.push_back(rewrite(r, coset, h, tab));
  std::vector<std::string> names;
  for (const Word &g : gens)
    names.push_back(to_text(g, p.generator_names()));
  return Presentation(gens.size(), std::move(names), std::move(relators));
}

// ---------------------------------------------------------------------------
// closed-form covers

const Mat2Z &CoverDescriptor::matrix() const {
  return std::visit([](const auto &k) -> const Mat2Z & { return k.matrix; }, kind);
}

CoverDescriptor double_cover_matrix(const CanonicalSapphire &A, const Z2Hom &h) {
  const int idx = phi_index(h);
  const std::int64_t r = A.r(), s = A.s(), t = A.t(), u = A.u();
  const std::int64_t ru_st = checked_add(checked_mul(r, u), checked_mul(s, t));
  switch (idx) {
  case 1:
    return {h, SapphireCover{mat2(ru_st, checked_mul(2, checked_mul(r, s)),
                                  checked_mul(2, checked_mul(t, u)), ru_st)},
            idx};
  case 3:
    return {h, SapphireCover{mat2(ru_st, checked_mul(2, checked_mul(s, u)),
                                  checked_mul(2, checked_mul(r, t)), ru_st)},
            idx};
  case 5: {
    // the table's monodromy assumes det A = 1; [[-r, s], [-t, u]] is the
    // det 1 representative of the same sapphire when det A = -1
    const std::int64_t sign = A.matrix().det();
    const std::int64_t diag = sign * ru_st;
    return {h, TorusBundleCover{mat2(diag, checked_mul(-2, checked_mul(r, t)),
                                     checked_mul(-2, checked_mul(s, u)), diag)},
            idx};
  }
  default:
    if (s % 2 != 0)
      throw CaseRequiresEvenS("case " + case_label(idx) + " needs s even, but s = " +
                              std::to_string(s));
    return {h, SapphireCover{mat2(r, s / 2, checked_mul(2, t), u)}, idx};
  }
}

std::vector<CoverDescriptor> all_double_covers(const CanonicalSapphire &A) {
  std::vector<CoverDescriptor> out;
  for (const Z2Hom &h : enumerate_z2_homs(pi1_sapphire(A.matrix())))
    out.push_back(double_cover_matrix(A, h));
  return out;
}

AbelianGroup cover_h1(const CoverDescriptor &c) {
  if (c.is_sapphire())
    return h1_sapphire(SapphireMatrix(c.matrix()));
  return h1_of_presentation(pi1_torus_bundle(TorusBundleMatrix(c.matrix())));
}

std::string to_string(HomClassStatus s) {
  switch (s) {
  case HomClassStatus::ProvenDistinct:
    return "proven-distinct";
  case HomClassStatus::ProvenEquivalent:
    return "proven-equivalent";
  case HomClassStatus::Unknown:
    return "unknown";
  }
  return "unknown";
}

HomPartition hom_equivalence_classes(const CanonicalSapphire &A) {
  HomPartition p;
  if (A.r() == A.u()) {
    // covers from phi_1 and phi_3 are homeomorphic; equivalence is open
    p.classes.push_back({{1, 3}, HomClassStatus::Unknown});
  } else {
    p.classes.push_back({{1}, HomClassStatus::ProvenDistinct});
    p.classes.push_back({{3}, HomClassStatus::ProvenDistinct});
  }
  p.classes.push_back({{5}, HomClassStatus::ProvenDistinct});
  if (A.s() % 2 == 0)
    p.classes.push_back({{2, 4, 6, 7}, HomClassStatus::ProvenEquivalent});
  return p;
}

std::vector<CoverCheck> check_covers(const CanonicalSapphire &A) {
  const Presentation group = pi1_sapphire(A.matrix());
  std::vector<CoverCheck> out;
  for (const Z2Hom &h : enumerate_z2_homs(group)) {
    const Presentation kernel = reidemeister_schreier(group, h);
    const CoverDescriptor cover = double_cover_matrix(A, h);
    out.push_back({cover.case_index, h1_of_presentation(kernel), cover_h1(cover),
                   kernel.generator_count()});
  }
  return out;
}

} // namespace sol
