#pragma once

#include "sol/involutions.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace sol {

using Json = nlohmann::ordered_json;

Json to_json(const Mat2Z &m);
Json bigint_json(const BigInt &x);
Json to_json(const AbelianGroup &g);
/// {case, hom: {a, b, c}, kind, matrix, h1}
Json to_json(const CoverDescriptor &c);
Json to_json(const HomPartition &p);
Json to_json(const Quotient &q);
/// {count, quotients, notes}
Json to_json(const InvolutionReport &r);
/// {n1, n2, n3, "n>=4"}
Json bu_table_json(const SapphireMatrix &A);

/// Everything the atlas records about one canonical sapphire.
struct AtlasRow {
  CanonicalSapphire canonical;
  std::int64_t det;
  AbelianGroup h1;
  std::vector<CoverDescriptor> covers;
  std::vector<AbelianGroup> cover_h1;
  HomPartition hom_partition;
  InvolutionReport involutions;
  std::vector<BUVerdict> bu; // n = 1, 2, 3, 4 (the n >= 4 representative)
};

AtlasRow make_atlas_row(const CanonicalSapphire &A);

/// Canonical forms of every sapphire with entries in [1, max_entry], sorted
/// lexicographically.
std::vector<CanonicalSapphire> enumerate_canonical(std::int64_t max_entry);

Json to_json(const AtlasRow &row);
Json atlas_json(std::int64_t max_entry, const std::vector<AtlasRow> &rows);

std::string atlas_csv_header();
std::string to_csv(const AtlasRow &row);

} // namespace sol
