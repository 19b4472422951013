#include "sol/report.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sol {

Json to_json(const Mat2Z &m) {
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

Json bigint_json(const BigInt &x) {
  if (x <= std::numeric_limits<std::int64_t>::max() &&
      x >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const AbelianGroup &g) {
  Json factors = Json::array();
  for (const BigInt &d : g.invariant_factors)
    factors.push_back(bigint_json(d));
  return Json{{"invariant_factors", factors}, {"free_rank", g.free_rank}};
}

Json to_json(const CoverDescriptor &c) {
  Json hom = Json::object();
  static constexpr const char *names[] = {"a", "b", "c"};
  for (std::size_t g = 0; g < c.hom.size() && g < 3; ++g)
    hom[names[g]] = c.hom(g);
  return Json{{"case", case_label(c.case_index)},
              {"hom", hom},
              {"kind", c.is_sapphire() ? "sapphire" : "torus_bundle"},
              {"matrix", to_json(c.matrix())},
              {"h1", to_json(cover_h1(c))}};
}

Json to_json(const HomPartition &p) {
  Json out = Json::array();
  for (const HomClass &k : p.classes)
    out.push_back(Json{{"cases", k.cases}, {"status", to_string(k.status)}});
  return out;
}

Json to_json(const Quotient &q) {
  return Json{{"raw", to_json(q.raw.matrix())},
              {"canonical", to_json(q.canonical.mat())},
              {"source", q.source}};
}

Json to_json(const InvolutionReport &r) {
  Json quotients = Json::array();
  for (const Quotient &q : r.quotients)
    quotients.push_back(to_json(q));
  return Json{{"count", to_string(r.count)}, {"quotients", quotients}, {"notes", r.notes}};
}

namespace {

const char *bu_key(std::int64_t n) {
  switch (n) {
  case 1:
    return "n1";
  case 2:
    return "n2";
  case 3:
    return "n3";
  default:
    return "n>=4";
  }
}

} // namespace

Json bu_table_json(const SapphireMatrix &A) {
  Json out = Json::object();
  for (std::int64_t n = 1; n <= 4; ++n)
    out[bu_key(n)] = to_string(borsuk_ulam(A, n).verdict);
  return out;
}

// ---------------------------------------------------------------------------

AtlasRow make_atlas_row(const CanonicalSapphire &A) {
  const SapphireMatrix &m = A.matrix();
  AtlasRow row{A,
               m.det(),
               h1_sapphire(m),
               all_double_covers(A),
               {},
               hom_equivalence_classes(A),
               classify_involutions(m),
               {}};
  for (const CoverDescriptor &c : row.covers)
    row.cover_h1.push_back(cover_h1(c));
  for (std::int64_t n = 1; n <= 4; ++n)
    row.bu.push_back(borsuk_ulam(m, n));
  return row;
}

std::vector<CanonicalSapphire> enumerate_canonical(std::int64_t max_entry) {
  if (max_entry < 1)
    throw DomainError("max entry must be at least 1");
  std::set<CanonicalSapphire> seen;
  for (std::int64_t r = 1; r <= max_entry; ++r)
    for (std::int64_t s = 1; s <= max_entry; ++s)
      for (std::int64_t t = 1; t <= max_entry; ++t)
        for (std::int64_t u = 1; u <= max_entry; ++u) {
          const Mat2Z m = mat2(r, s, t, u);
          if (SapphireMatrix::is_valid(m))
            seen.insert(canonical_form(SapphireMatrix(m)));
        }
  return {seen.begin(), seen.end()};
}

Json to_json(const AtlasRow &row) {
  Json covers = Json::array();
  for (std::size_t i = 0; i < row.covers.size(); ++i) {
    Json c = to_json(row.covers[i]);
    c["h1"] = to_json(row.cover_h1[i]);
    covers.push_back(std::move(c));
  }
  Json bu = Json::object();
  for (const BUVerdict &v : row.bu)
    bu[bu_key(v.n)] = to_string(v.verdict);
  return Json{{"matrix", to_json(row.canonical.mat())},
              {"canonical", to_json(row.canonical.mat())},
              {"det", row.det},
              {"h1", to_json(row.h1)},
              {"covers", covers},
              {"hom_partition", to_json(row.hom_partition)},
              {"involutions", to_json(row.involutions)},
              {"bu", bu}};
}

Json atlas_json(std::int64_t max_entry, const std::vector<AtlasRow> &rows) {
  Json out_rows = Json::array();
  for (const AtlasRow &r : rows)
    out_rows.push_back(to_json(r));
  return Json{{"max_entry", max_entry}, {"row_count", rows.size()}, {"rows", out_rows}};
}

// ---------------------------------------------------------------------------
// CSV: one line per row; lists are '|' separated so no field needs quoting

std::string atlas_csv_header() {
  return "matrix,canonical,det,h1,covers,hom_partition,involutions,quotients,bu_n1,bu_n2,bu_n3,"
         "bu_n4plus";
}

std::string to_csv(const AtlasRow &row) {
  const std::string mat = to_text(row.canonical.mat());
  std::string covers;
  for (std::size_t i = 0; i < row.covers.size(); ++i) {
    const CoverDescriptor &c = row.covers[i];
    if (i)
      covers += '|';
    covers += case_label(c.case_index) + (c.is_sapphire() ? ":S[" : ":T[") +
              to_text(c.matrix()) + "]=" + to_dotted(row.cover_h1[i]);
  }
  std::string partition;
  for (const HomClass &k : row.hom_partition.classes) {
    if (!partition.empty())
      partition += '|';
    partition += '[';
    for (std::size_t i = 0; i < k.cases.size(); ++i)
      partition += (i ? " " : "") + std::to_string(k.cases[i]);
    partition += ']';
    if (k.status == HomClassStatus::Unknown)
      partition += '?';
  }
  std::string quotients;
  for (const Quotient &q : row.involutions.quotients)
    quotients += (quotients.empty() ? "" : "|") + to_text(q.canonical.mat());

  std::string out = mat + ',' + mat + ',' + std::to_string(row.det) + ',' + to_dotted(row.h1) +
                    ',' + covers + ',' + partition + ',' + to_string(row.involutions.count) +
                    ',' + quotients;
  for (const BUVerdict &v : row.bu)
    out += ',' + to_string(v.verdict);
  return out;
}

} // namespace sol
