#include "sol/cli.hpp"

#include "sol/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace sol::cli {

namespace {

/// Thrown by a command after it has written its own diagnostic.
struct Exit {
  int code;
};

SapphireMatrix sapphire_arg(const std::string &text) {
  return SapphireMatrix(parse_mat2(text));
}

std::string join_cases(const HomClass &k) {
  std::string s = "{";
  for (std::size_t i = 0; i < k.cases.size(); ++i)
    s += (i ? "," : "") + std::to_string(k.cases[i]);
  return s + "}";
}

std::string hom_text(const Z2Hom &h) {
  std::string s;
  for (std::size_t g = 0; g < h.size(); ++g)
    s += (g ? " " : "") + std::to_string(h(g));
  return s;
}

// --------------------------------------------------------------------------

void cmd_canon(const std::string &text, bool json, std::ostream &out) {
  const SapphireMatrix A = sapphire_arg(text);
  const CanonicalSapphire c = canonical_form(A);
  const auto orbit = morimoto_orbit(A);
  if (json) {
    out << Json{{"matrix", to_json(A.matrix())},
                {"canonical", to_json(c.mat())},
                {"orbit_size", orbit.size()}}
               .dump(2)
        << '\n';
    return;
  }
  out << to_text(c.mat()) << '\n' << "orbit size: " << orbit.size() << '\n';
}

void cmd_h1(const std::string &text, bool json, std::ostream &out) {
  const SapphireMatrix A = sapphire_arg(text);
  const AbelianGroup g = h1_sapphire(A);
  if (json) {
    out << Json{{"matrix", to_json(A.matrix())}, {"h1", to_json(g)}}.dump(2) << '\n';
    return;
  }
  out << to_text(g) << '\n';
}

void cmd_homeo(const std::string &lhs, const std::string &rhs, bool json, std::ostream &out) {
  const SapphireMatrix A = sapphire_arg(lhs);
  const SapphireMatrix B = sapphire_arg(rhs);
  const bool same = homeomorphic(A, B);
  if (json) {
    out << Json{{"a", to_json(A.matrix())},
                {"b", to_json(B.matrix())},
                {"canonical_a", to_json(canonical_form(A).mat())},
                {"canonical_b", to_json(canonical_form(B).mat())},
                {"homeomorphic", same}}
               .dump(2)
        << '\n';
    return;
  }
  out << (same ? "homeomorphic" : "not homeomorphic") << '\n';
}

void cmd_covers(const std::string &text, bool json, std::ostream &out) {
  const SapphireMatrix A = sapphire_arg(text);
  const CanonicalSapphire c = canonical_form(A);
  const auto covers = all_double_covers(c);
  const HomPartition part = hom_equivalence_classes(c);
  if (json) {
    Json rows = Json::array();
    for (const CoverDescriptor &d : covers)
      rows.push_back(to_json(d));
    out << Json{{"matrix", to_json(A.matrix())},
                {"canonical", to_json(c.mat())},
                {"covers", rows},
                {"hom_partition", to_json(part)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "sapphire " << to_text(A.matrix()) << " (canonical " << to_text(c.mat()) << ")\n";
  out << std::left << std::setw(6) << "case" << std::setw(12) << "hom a b c" << std::setw(14)
      << "kind" << std::setw(18) << "matrix"
      << "H1\n";
  for (const CoverDescriptor &d : covers)
    out << std::left << std::setw(6) << case_label(d.case_index) << std::setw(12) << hom_text(d.hom)
        << std::setw(14) << (d.is_sapphire() ? "sapphire" : "torus bundle") << std::setw(18)
        << to_text(d.matrix()) << to_text(cover_h1(d)) << '\n';
  out << "hom classes:";
  for (std::size_t i = 0; i < part.classes.size(); ++i)
    out << (i ? " | " : " ") << join_cases(part.classes[i]) << ' '
        << to_string(part.classes[i].status);
  out << '\n';
}

void cmd_involutions(const std::string &text, bool json, std::ostream &out) {
  const SapphireMatrix A = sapphire_arg(text);
  const InvolutionReport rep = classify_involutions(A);
  if (json) {
    out << Json{{"matrix", to_json(A.matrix())},
                {"involutions", to_json(rep)},
                {"bu", bu_table_json(A)}}
               .dump(2)
        << '\n';
    return;
  }
  switch (rep.count) {
  case InvolutionCount::None:
    out << "no free involutions\n";
    return;
  case InvolutionCount::ExactlyOne:
    out << "exactly one class of free involutions\n";
    break;
  case InvolutionCount::ExactlyThree:
    out << "exactly three classes of free involutions\n";
    break;
  case InvolutionCount::ThreeToFive:
    out << "between three and five classes of free involutions\n";
    break;
  }
  for (const Quotient &q : rep.quotients)
    out << "quotient " << to_text(q.raw.matrix()) << " (canonical " << to_text(q.canonical.mat())
        << ", via " << q.source << ")\n";
  for (const std::string &n : rep.notes)
    out << "note: " << n << '\n';
}

void cmd_bu(const std::string &text, std::int64_t n, bool json, std::ostream &out) {
  const SapphireMatrix A = sapphire_arg(text);
  const BUVerdict v = borsuk_ulam(A, n);
  if (json) {
    out << Json{{"matrix", to_json(A.matrix())},
                {"n", v.n},
                {"verdict", to_string(v.verdict)},
                {"rationale", v.rationale}}
               .dump(2)
        << '\n';
    return;
  }
  out << to_string(v.verdict) << '\n' << v.rationale << '\n';
}

void cmd_pi1(const std::string &text, bool torus_bundle, int kernel, std::ostream &out,
             std::ostream &err) {
  const Mat2Z m = parse_mat2(text);
  for (auto e : entries(m))
    if (e > 10000 || e < -10000) {
      err << "error: pi1 prints words letter by letter; entries are limited to |x| <= 10000\n";
      throw Exit{kUsage};
    }
  Presentation p = torus_bundle ? pi1_torus_bundle(TorusBundleMatrix(m))
                                : pi1_sapphire(SapphireMatrix(m));
  if (kernel != 0) {
    const Z2Hom h = phi(kernel);
    h.validate(p);
    p = reidemeister_schreier(p, h);
  }
  out << p.to_text() << '\n' << "H1 = " << to_text(h1_of_presentation(p)) << '\n';
}

void write_file(const std::string &path, const std::string &body, std::ostream &err);

/// Rows computed up front so that a failed check writes nothing.
void cmd_atlas(std::int64_t max_entry, const std::string &path, const std::string &format,
               bool check, std::ostream &out, std::ostream &err) {
  if (max_entry < 1) {
    err << "error: --max-entry must be at least 1\n";
    throw Exit{kUsage};
  }
  std::vector<AtlasRow> rows;
  for (const CanonicalSapphire &c : enumerate_canonical(max_entry)) {
    if (check) {
      for (const CoverCheck &k : check_covers(c))
        if (!k.ok()) {
          err << "check failed at row " << to_text(c.mat()) << ", case "
              << case_label(k.case_index) << ": kernel H1 " << to_text(k.kernel_h1)
              << " != table H1 " << to_text(k.table_h1) << '\n';
          throw Exit{kCheckFailed};
        }
    }
    rows.push_back(make_atlas_row(c));
  }

  std::ostringstream body;
  if (format == "csv") {
    body << atlas_csv_header() << '\n';
    for (const AtlasRow &r : rows)
      body << to_csv(r) << '\n';
  } else {
    body << atlas_json(max_entry, rows).dump(2) << '\n';
  }

  if (path.empty() || path == "-") {
    out << body.str();
  } else {
    write_file(path, body.str(), err);
  }
  if (check)
    err << "check passed: " << rows.size() << " rows\n";
}

void write_file(const std::string &path, const std::string &body, std::ostream &err) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    throw Exit{kIoError};
  }
  file << body;
  file.close();
  if (!file) {
    err << "error: failed writing " << path << '\n';
    throw Exit{kIoError};
  }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Sapphire Sol 3-manifolds: canonical forms, homology, double covers, free "
               "involutions and Borsuk-Ulam verdicts"};
  app.require_subcommand(1);

  std::string matrix, other, format = "text", out_path;
  std::int64_t n = 0, max_entry = 0;
  int kernel = 0;
  bool check = false, torus = false;
  const std::vector<std::string> text_json{"text", "json"};

  auto add_matrix = [&](CLI::App *sub) {
    sub->add_option("matrix", matrix, "gluing matrix, \"r s; t u\" or [[r,s],[t,u]]")->required();
  };
  auto add_format = [&](CLI::App *sub, const std::vector<std::string> &choices) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
  };

  auto *canon = app.add_subcommand("canon", "canonical form and orbit size");
  add_matrix(canon);
  add_format(canon, text_json);

  auto *h1 = app.add_subcommand("h1", "first homology group");
  add_matrix(h1);
  add_format(h1, text_json);

  auto *homeo = app.add_subcommand("homeo", "decide whether two sapphires are homeomorphic");
  add_matrix(homeo);
  homeo->add_option("other", other, "second gluing matrix")->required();
  add_format(homeo, text_json);

  auto *covers = app.add_subcommand("covers", "all double covers and hom classes");
  add_matrix(covers);
  add_format(covers, {"text", "table", "json"});

  auto *invol = app.add_subcommand("involutions", "classify free involutions");
  add_matrix(invol);
  add_format(invol, text_json);

  auto *bu = app.add_subcommand("bu", "Borsuk-Ulam property for maps into R^n");
  add_matrix(bu);
  bu->add_option("-n", n, "target dimension")->required();
  add_format(bu, text_json);

  auto *pi1 = app.add_subcommand("pi1", "print a fundamental-group presentation (debugging)");
  add_matrix(pi1);
  pi1->add_flag("--torus-bundle", torus, "treat the matrix as a torus-bundle monodromy");
  pi1->add_option("--kernel", kernel, "rewrite the kernel of phi_K (1..7) instead")
      ->check(CLI::Range(1, 7));

  auto *atlas = app.add_subcommand("atlas", "tabulate every sapphire with entries in [1, N]");
  atlas->add_option("--max-entry", max_entry, "largest entry N")->required();
  atlas->add_option("--out", out_path, "output file (default stdout)");
  atlas->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  atlas->add_flag("--check", check, "verify Reidemeister-Schreier homology against the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const bool json = format == "json";
  try {
    if (*canon)
      cmd_canon(matrix, json, out);
    else if (*h1)
      cmd_h1(matrix, json, out);
    else if (*homeo)
      cmd_homeo(matrix, other, json, out);
    else if (*covers)
      cmd_covers(matrix, json, out);
    else if (*invol)
      cmd_involutions(matrix, json, out);
    else if (*bu)
      cmd_bu(matrix, n, json, out);
    else if (*pi1)
      cmd_pi1(matrix, torus, kernel, out, err);
    else if (*atlas)
      cmd_atlas(max_entry, out_path, format == "text" ? "json" : format, check, out, err);
  } catch (const Exit &e) {
    return e.code;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}

} // namespace sol::cli
