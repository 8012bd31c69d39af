// Command-line front end: validate space files, print generalized open-set
// families, classify subsets, confirm the implication diagram, run
// counterexample searches, and replay the bundled worked examples.
//
// Exit codes: 0 everything verified / printed, 1 a finding (counterexample
// found, or a worked-example mismatch), 2 malformed input or flags.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topolab/topolab.hpp"

namespace {

using namespace topolab;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_check(const std::string& file) {
  const FiniteSpace sp = parse_space(read_file(file));
  std::cout << format_space(sp);
  return 0;
}

int cmd_families(const std::string& file, const std::vector<std::string>& variants,
                 const std::vector<std::string>& lcs) {
  const FiniteSpace sp = parse_space(read_file(file));
  struct Req {
    std::string label;
    const SetFamily* fam;
  };
  std::vector<Req> reqs;
  for (const auto& v : variants) {
    auto tag = parse_variant(v);
    if (!tag) throw ValidationError("unknown variant '" + v + "'");
    reqs.push_back({std::string(name_of(*tag)), &variant_open_family(sp, *tag)});
  }
  for (const auto& l : lcs) {
    auto tag = parse_lc_variant(l);
    if (!tag) throw ValidationError("unknown locally-closed family '" + l + "'");
    reqs.push_back({std::string(name_of(*tag)), &lc_family(sp, *tag)});
  }
  if (reqs.empty()) reqs.push_back({"open", &sp.opens()});
  for (const auto& r : reqs) {
    if (reqs.size() > 1) std::cout << "== " << r.label << " ==\n";
    std::cout << format_family(sp, *r.fam);
  }
  return 0;
}

int cmd_classify(const std::string& file, const std::string& set_literal) {
  const FiniteSpace sp = parse_space(read_file(file));
  const PointSet a = parse_set(sp, set_literal);
  auto tf = [](bool b) { return b ? "true" : "false"; };
  std::cout << "set: " << format_set(sp, a) << "\n";
  for (Variant v : kAllVariants)
    std::cout << name_of(v) << (v == Variant::Open ? "" : "-open") << ": "
              << tf(is_variant_open(sp, v, a)) << "\n";
  for (LCVariant v : kAllLCVariants)
    std::cout << name_of(v) << ": " << tf(lc_family(sp, v).contains(a)) << "\n";
  std::cout << "aLC-characterization: "
            << format_characterization(sp, characterize_alc(sp, a)) << "\n";
  return 0;
}

int cmd_diagram(const std::string& file) {
  const FiniteSpace sp = parse_space(read_file(file));
  std::size_t width = 8;
  for (PointSet a : canonical_subset_order(sp.point_count()))
    width = std::max(width, format_set(sp, a).size());
  std::cout << std::string(width + 2, ' ');
  for (LCVariant v : kAllLCVariants) std::cout << name_of(v) << "  ";
  std::cout << "\n";
  for (PointSet a : canonical_subset_order(sp.point_count())) {
    const std::string lbl = format_set(sp, a);
    std::cout << lbl << std::string(width + 2 - lbl.size(), ' ');
    for (LCVariant v : kAllLCVariants) {
      std::cout << (lc_family(sp, v).contains(a) ? "x" : ".")
                << std::string(std::string(name_of(v)).size() + 1, ' ');
    }
    std::cout << "\n";
  }
  static constexpr std::pair<LCVariant, LCVariant> kArrows[] = {
      {LCVariant::LC, LCVariant::FLC},      {LCVariant::LC, LCVariant::AlphaLC},
      {LCVariant::FLC, LCVariant::BLC},     {LCVariant::FLC, LCVariant::ELC},
      {LCVariant::ALC, LCVariant::FLC},     {LCVariant::ALC, LCVariant::ELC},
      {LCVariant::ALC, LCVariant::AlphaLC}, {LCVariant::AlphaLC, LCVariant::ELC},
      {LCVariant::AlphaLC, LCVariant::BLC},
  };
  bool all_ok = true;
  for (auto [from, to] : kArrows) {
    bool ok = true;
    PointSet bad;
    for (PointSet m : lc_family(sp, from))
      if (!lc_family(sp, to).contains(m)) {
        ok = false;
        bad = m;
        break;
      }
    std::cout << "arrow " << name_of(from) << "=>" << name_of(to) << ": "
              << (ok ? "ok" : "VIOLATED at " + format_set(sp, bad)) << "\n";
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "all arrows hold\n" : "diagram violated\n");
  return all_ok ? 0 : 1;
}

int cmd_search(int points, const std::string& claim_text, bool question_3_10) {
  if (question_3_10) {
    auto [b_to_e, e_to_b] = question_3_10_search(points);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    j.push_back(record_to_json(b_to_e));
    j.push_back(record_to_json(e_to_b));
    std::cout << j.dump(2) << "\n";
    const bool found = b_to_e.status == CounterexampleRecord::Status::Found ||
                       e_to_b.status == CounterexampleRecord::Status::Found;
    return found ? 1 : 0;
  }
  auto claim = parse_claim(claim_text);
  if (!claim)
    throw ValidationError("bad claim '" + claim_text +
                          "'; expected SRC=>DST with family names such as LC, aLC, alphaLC, "
                          "bLC, eLC, FLC, open, delta, regular, semi, alpha, a, b, e, feebly");
  const CounterexampleRecord rec = find_counterexample(*claim, points);
  std::cout << record_to_json(rec).dump(2) << "\n";
  return rec.status == CounterexampleRecord::Status::Found ? 1 : 0;
}

// Bundled worked examples with their expected families; recomputed on every
// run and compared byte for byte.
int cmd_verify_paper() {
  const std::string power4 =
      "{}\n{a}\n{b}\n{c}\n{d}\n{a,b}\n{a,c}\n{a,d}\n{b,c}\n{b,d}\n{c,d}\n"
      "{a,b,c}\n{a,b,d}\n{a,c,d}\n{b,c,d}\n{a,b,c,d}\n";
  const FiniteSpace ex1 = parse_space(
      "points: a b c d\nopen: a\nopen: b\nopen: a b\nopen: a c d\n");
  const FiniteSpace ex2 = parse_space(
      "points: a b c d\nopen: a\nopen: b\nopen: a b\nopen: a c\nopen: a b c\nopen: a b d\n");
  const FiniteSpace ex3 = parse_space(
      "points: a b c d\nopen: a\nopen: b\nopen: a b\n");
  const FiniteSpace part = parse_space("points: a b c d\nopen: a\nopen: b c d\n");

  int failures = 0;
  auto expect = [&failures](const std::string& label, const std::string& got,
                            const std::string& want) {
    if (got == want) {
      std::cout << "ok   " << label << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << label << "\n--- expected ---\n"
                << want << "--- got ---\n"
                << got;
    }
  };
  auto expect_true = [&failures](const std::string& label, bool got) {
    if (got) {
      std::cout << "ok   " << label << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << label << "\n";
    }
  };

  expect("example-1 aLC", format_family(ex1, lc_family(ex1, LCVariant::ALC)),
         "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n");
  expect("example-1 eLC", format_family(ex1, lc_family(ex1, LCVariant::ELC)), power4);
  expect("example-1 alphaLC", format_family(ex1, lc_family(ex1, LCVariant::AlphaLC)), power4);
  expect("example-1 FLC", format_family(ex1, lc_family(ex1, LCVariant::FLC)), power4);
  expect("example-1 aO", format_family(ex1, variant_open_family(ex1, Variant::AOpen)),
         "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n");
  expect("example-1 aC", format_family(ex1, variant_closed_family(ex1, Variant::AOpen)),
         "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n");
  const PointSet a1 = parse_set(ex1, "{a}");
  expect_true("example-1 {a} feebly/e/alpha but not a locally closed",
              lc_family(ex1, LCVariant::FLC).contains(a1) &&
                  lc_family(ex1, LCVariant::ELC).contains(a1) &&
                  lc_family(ex1, LCVariant::AlphaLC).contains(a1) &&
                  !lc_family(ex1, LCVariant::ALC).contains(a1));
  const CharacterizationRecord ca1 = characterize_alc(ex1, a1);
  expect_true("example-1 {a} characterization uniformly negative",
              ca1.all_agree() && !ca1.holds());
  const CharacterizationRecord co1 = characterize_alo(ex1, parse_set(ex1, "{a,c,d}"));
  expect_true("example-1 {a,c,d} locally open and locally closed",
              co1.all_agree() && co1.holds() &&
                  lc_family(ex1, LCVariant::ALC).contains(parse_set(ex1, "{a,c,d}")));

  expect("example-2 LC", format_family(ex2, lc_family(ex2, LCVariant::LC)), power4);
  expect("example-2 aLC", format_family(ex2, lc_family(ex2, LCVariant::ALC)),
         "{}\n{b}\n{d}\n{a,c}\n{b,d}\n{a,b,c}\n{a,c,d}\n{a,b,c,d}\n");
  const PointSet a2 = parse_set(ex2, "{a}");
  expect_true("example-2 {a} locally closed but not a-locally closed",
              lc_family(ex2, LCVariant::LC).contains(a2) &&
                  !lc_family(ex2, LCVariant::ALC).contains(a2));

  expect("example-3 LC", format_family(ex3, lc_family(ex3, LCVariant::LC)),
         "{}\n{a}\n{b}\n{a,b}\n{c,d}\n{a,c,d}\n{b,c,d}\n{a,b,c,d}\n");
  expect("example-3 aLC", format_family(ex3, lc_family(ex3, LCVariant::ALC)), power4);
  const PointSet c3 = parse_set(ex3, "{c}");
  expect_true("example-3 {c} a-locally closed but not locally closed",
              lc_family(ex3, LCVariant::ALC).contains(c3) &&
                  !lc_family(ex3, LCVariant::LC).contains(c3));
  expect_true("example-3 is a-submaximal", is_variant_submaximal(ex3, Variant::AOpen));

  expect("a-space tau^a", format_family(part, variant_open_family(part, Variant::AOpen)),
         format_family(part, part.opens()));
  expect_true("a-space predicate", is_variant_space(part, Variant::AOpen));

  const PointSet f1 = parse_set(ex1, "{b}");
  expect_true("disjointness converse: F={b} a-closed, {a} misses it, {a} not aLC",
              variant_closed_family(ex1, Variant::AOpen).contains(f1) &&
                  !a1.intersects(f1) && converse_fails_check(ex1, a1));

  std::cout << (failures == 0 ? "verify-paper: all checks passed\n"
                              : "verify-paper: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-topology engine: generalized open sets, locally closed "
               "families, exhaustive theorem checks and counterexample search"};
  app.require_subcommand(1);

  std::string file, set_literal, claim_text;
  std::vector<std::string> variants, lcs;
  int points = 0;
  bool q310 = false;

  auto* check = app.add_subcommand("check", "validate a space file and echo its canonical form");
  check->add_option("file", file, "space file")->required();

  auto* families = app.add_subcommand("families", "print generalized open-set families");
  families->add_option("file", file, "space file")->required();
  families->add_option("--variant", variants, "openness variant (open delta regular semi alpha a b e feebly)");
  families->add_option("--lc", lcs, "locally-closed family (LC alphaLC aLC bLC eLC FLC)");

  auto* classify = app.add_subcommand("classify", "membership of one subset in every family");
  classify->add_option("file", file, "space file")->required();
  classify->add_option("--set", set_literal, "subset literal, e.g. \"{a,c}\"")->required();

  auto* diagram = app.add_subcommand("diagram", "per-subset membership matrix and implication arrows");
  diagram->add_option("file", file, "space file")->required();

  auto* search = app.add_subcommand("search", "exhaustive counterexample search over small spaces");
  search->add_option("--points", points, "largest point count to scan")->required();
  search->add_option("--claim", claim_text, "implication SRC=>DST, e.g. LC=>aLC");
  search->add_flag("--question-3-10", q310, "search both directions of the bLC/eLC comparison");

  auto* verify = app.add_subcommand("verify-paper", "recompute the bundled worked examples against their goldens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(file);
    if (families->parsed()) return cmd_families(file, variants, lcs);
    if (classify->parsed()) return cmd_classify(file, set_literal);
    if (diagram->parsed()) return cmd_diagram(file);
    if (search->parsed()) {
      if (q310 == !claim_text.empty())
        throw ValidationError("search needs exactly one of --claim or --question-3-10");
      return cmd_search(points, claim_text, q310);
    }
    if (verify->parsed()) return cmd_verify_paper();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
