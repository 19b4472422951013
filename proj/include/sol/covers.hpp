#pragma once

#include "sol/sapphire.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace sol {

/// Homomorphism onto Z/2 given by the parity assigned to each generator.
class Z2Hom {
public:
  /// Throws InvalidHom for an all-zero assignment or an entry outside {0, 1}.
  explicit Z2Hom(std::vector<std::uint8_t> images);

  const std::vector<std::uint8_t> &images() const { return images_; }
  std::size_t size() const { return images_.size(); }
  std::uint8_t operator()(std::size_t generator) const { return images_.at(generator); }
  /// Parity of the image of a word.
  std::uint8_t operator()(const Word &w) const;

  bool kills_relators(const Presentation &p) const;
  /// Throws InvalidHom unless the alphabet matches and every relator maps to 0.
  void validate(const Presentation &p) const;

  friend bool operator==(const Z2Hom &, const Z2Hom &) = default;

private:
  std::vector<std::uint8_t> images_;
};

/// Index 1..7 of a hom on a three-generator group, ordered as
/// (1,0,0) (0,1,0) (0,0,1) (1,1,0) (1,0,1) (0,1,1) (1,1,1).
int phi_index(const Z2Hom &h);
Z2Hom phi(int index);
std::string case_label(int index); // "I" .. "VII"

/// Every nontrivial hom killing all relators. Ordered by number of
/// generators sent to 1, then with earlier generators taking 1 first; on
/// three generators this is phi_1 .. phi_7.
std::vector<Z2Hom> enumerate_z2_homs(const Presentation &p);

/// Schreier generators t g (overline{t g})^-1 for the transversal {1, x},
/// x the first generator with image 1, skipping the one that is trivial.
/// Returned as words in the parent generators, ordered coset 1 first then
/// coset x, each by generator index.
std::vector<Word> schreier_generators(const Presentation &p, const Z2Hom &h);

/// Presentation of ker h on 2n - 1 Schreier generators. Relators are the
/// rewrites of every parent relator R, then of every x R x^-1.
/// Generator names are the parent words. Throws InvalidHom.
Presentation reidemeister_schreier(const Presentation &p, const Z2Hom &h);

struct SapphireCover {
  Mat2Z matrix;
  friend bool operator==(const SapphireCover &, const SapphireCover &) = default;
};
struct TorusBundleCover {
  Mat2Z matrix;
  friend bool operator==(const TorusBundleCover &, const TorusBundleCover &) = default;
};

struct CoverDescriptor {
  Z2Hom hom;
  std::variant<SapphireCover, TorusBundleCover> kind;
  int case_index; // 1..7

  bool is_sapphire() const { return std::holds_alternative<SapphireCover>(kind); }
  const Mat2Z &matrix() const;
};

/// Closed-form double cover of S_A for a hom on pi1_sapphire(A).
///   I   sapphire [[ru+st, 2rs], [2tu, ru+st]]
///   III sapphire [[ru+st, 2su], [2rt, ru+st]]
///   II, IV, VI, VII sapphire [[r, s/2], [2t, u]]
///   V   torus bundle [[ru+st, -2rt], [-2su, ru+st]] for det A = 1; for
///       det A = -1 the same formula on [[-r, s], [-t, u]].
/// Throws CaseRequiresEvenS when b maps to 1 and s is odd, InvalidHom for a
/// hom that is not on three generators.
CoverDescriptor double_cover_matrix(const CanonicalSapphire &A, const Z2Hom &h);

/// One descriptor per hom in enumerate_z2_homs(pi1_sapphire(A)).
std::vector<CoverDescriptor> all_double_covers(const CanonicalSapphire &A);

/// H1 of a table cover: h1_sapphire for sapphires, SNF of the torus-bundle
/// presentation otherwise.
AbelianGroup cover_h1(const CoverDescriptor &c);

enum class HomClassStatus { ProvenDistinct, ProvenEquivalent, Unknown };
std::string to_string(HomClassStatus s);

struct HomClass {
  std::vector<int> cases; // phi indices, ascending
  HomClassStatus status;
  friend bool operator==(const HomClass &, const HomClass &) = default;
};

struct HomPartition {
  std::vector<HomClass> classes;
};

/// Equivalence classes of the homs of S_A:
/// {1} {3} (or {1,3} unknown when r = u), {5}, {2,4,6,7} when s is even.
HomPartition hom_equivalence_classes(const CanonicalSapphire &A);

/// RS kernel homology against the closed-form cover, one result per hom.
struct CoverCheck {
  int case_index;
  AbelianGroup kernel_h1;
  AbelianGroup table_h1;
  std::size_t kernel_generators;
  bool ok() const { return kernel_h1 == table_h1; }
};
std::vector<CoverCheck> check_covers(const CanonicalSapphire &A);

} // namespace sol
