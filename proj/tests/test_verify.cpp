#include <doctest.h>

#include "oracles.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/group_io.hpp"
#include "wordlab/verify.hpp"

using namespace wordlab;

namespace {

BigInt count_at(const VerificationReport& r, const std::string& label) {
  for (const auto& m : r.margins)
    if (m.element == label) return m.count;
  FAIL("no margin for " << label);
  return 0;
}

const Margin& margin_at(const VerificationReport& r, const std::string& label) {
  for (const auto& m : r.margins)
    if (m.element == label) return m;
  throw std::runtime_error("no margin for " + label);
}

}  // namespace

TEST_CASE("bound modes") {
  FiniteGroup h = catalog("heisenberg", {"3"});
  auto amit = verify_bounds(h, parse_word("[x1,x2]"), BoundMode::amit);
  CHECK(amit.verdict == Verdict::holds);
  CHECK(amit.conjecture);
  REQUIRE(amit.margins.size() == 1);
  CHECK(amit.margins[0].count == 297);
  CHECK(amit.margins[0].bound == 27);
  CHECK(amit.extra["center_squared_at_most_order"] == true);

  FiniteGroup q8 = catalog("q8");
  auto a = verify_bounds(q8, parse_word("x1^2"), BoundMode::thmA);
  CHECK(a.verdict == Verdict::holds);
  CHECK(a.word == "x1^2 (arity 2)");
  CHECK(margin_at(a, "1").count == 16);
  CHECK(margin_at(a, "-1").count == 48);
  CHECK(margin_at(a, "1").bound == 8);
  CHECK_FALSE(a.conjecture);

  auto b = verify_bounds(h, parse_word("x1^3 [x1,x2]"), BoundMode::thmB);
  CHECK(b.verdict == Verdict::holds);
  for (const auto& m : b.margins) CHECK(m.bound == 1);

  CHECK(verify_bounds(q8, parse_word("[x1,x2]"), BoundMode::thmB).verdict == Verdict::not_applicable);
  CHECK(verify_bounds(q8, parse_word("[x1,x2]"), BoundMode::thmB).hypothesis.find("p = 2") != std::string::npos);
  CHECK(verify_bounds(q8, parse_word("x1 [x2,x3]"), BoundMode::thmA).verdict == Verdict::not_applicable);
  CHECK(verify_bounds(q8, parse_word("x1 x2"), BoundMode::solomon).verdict == Verdict::holds);

  FiniteGroup s3 = oracle::symmetric3();
  for (auto mode : {BoundMode::amit, BoundMode::generalized_amit, BoundMode::thmA, BoundMode::thmB}) {
    auto r = verify_bounds(s3, parse_word("[x1,x2]"), mode);
    CHECK(r.verdict == Verdict::not_applicable);
    CHECK_FALSE(r.hypothesis.empty());
    CHECK(r.budget == 0);
  }
  CHECK(parse_bound_mode("gamit") == BoundMode::generalized_amit);
  CHECK_THROWS(parse_bound_mode("thmZ"));
}

TEST_CASE("bound sweeps over the corpus") {
  for (const auto& spec : standard_instances(243)) {
    FiniteGroup g = catalog_by_spec(spec);
    for (const auto& text : oracle::corpus()) {
      const Word w = parse_word(text);
      CAPTURE(spec);
      CAPTURE(text);
      if (w.arity() <= 2) CHECK(verify_bounds(g, w, BoundMode::thmA).verdict == Verdict::holds);
      auto b = verify_bounds(g, w, BoundMode::thmB);
      CHECK(b.verdict == (g.order() % 2 == 1 ? Verdict::holds : Verdict::not_applicable));
      CHECK(verify_bounds(g, w, BoundMode::amit).verdict == Verdict::holds);
    }
  }
}

TEST_CASE("two-degree fibers and prime derived subgroup") {
  auto q = verify_theorem_C(catalog("q8"), 1);
  CHECK(q.verdict == Verdict::holds);
  CHECK(count_at(q, "1") == 40);
  CHECK(count_at(q, "-1") == 24);
  for (const auto& m : q.margins) CHECK(m.bound == 8);

  FiniteGroup h = catalog("heisenberg", {"3"});
  auto hr = verify_theorem_C(h, 1);
  CHECK(hr.verdict == Verdict::holds);
  CHECK(hr.margins.size() == 3);
  std::vector<BigInt> counts;
  for (const auto& m : hr.margins) counts.push_back(m.count);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<BigInt>{216, 216, 297});
  CHECK(hr.extra["m"] == 3);

  auto z4 = verify_theorem_C(catalog("cyclic", {"4"}), 1);
  CHECK(z4.verdict == Verdict::not_applicable);
  CHECK(z4.hypothesis == "cd(G) = {1} does not have two elements");
  CHECK(verify_theorem_C(oracle::symmetric3(), 1).verdict == Verdict::not_applicable);
  CHECK(verify_theorem_C(catalog("q8"), 2).verdict == Verdict::holds);

  CHECK(verify_corollary_D(h, 1).verdict == Verdict::holds);
  CHECK(verify_corollary_D(catalog("extraspecial", {"2", "2", "+"}), 1).verdict == Verdict::holds);
  CHECK(verify_corollary_D(catalog("free_class2_exp_p", {"3", "2"}), 1).verdict == Verdict::not_applicable);
  CHECK(verify_corollary_D(catalog("cyclic", {"4"}), 1).verdict == Verdict::not_applicable);
}

TEST_CASE("rationality") {
  auto q = check_rationality(catalog("q8"), parse_word("x1^2"));
  CHECK(q.verdict == Verdict::holds);
  CHECK(q.extra["class_function"] == "generalized_character");
  CHECK(q.extra["fourier"][4] == "-1");
  CHECK(check_rationality(catalog("d4"), parse_word("[x1,x2]")).verdict == Verdict::holds);
  auto z5 = check_rationality(catalog("cyclic", {"5"}), parse_word("x1^2"));
  CHECK(z5.verdict == Verdict::holds);
  CHECK(z5.extra["class_function"] == "character");
  CHECK(check_rationality(oracle::symmetric3(), parse_word("x1^3")).verdict == Verdict::holds);

  for (const auto& spec : standard_instances(243)) {
    FiniteGroup g = catalog_by_spec(spec);
    for (const auto& text : oracle::corpus()) {
      CAPTURE(spec);
      CAPTURE(text);
      auto r = check_rationality(g, parse_word(text));
      CHECK(r.verdict == Verdict::holds);
      const std::string kind = r.extra["class_function"];
      CHECK(kind != "neither");
      if (g.order() % 2 == 1) CHECK(kind == "character");
    }
  }
}

TEST_CASE("chirality") {
  auto q = check_chirality(catalog("q8"), parse_word("x1^2"));
  CHECK(q.verdict == Verdict::holds);
  CHECK(q.extra["chiral"] == false);
  CHECK(q.extra["support_size"] == 2);
  auto h = check_chirality(catalog("heisenberg", {"3"}), parse_word("[x1,x2]"));
  CHECK(h.verdict == Verdict::holds);
  CHECK(h.extra["support_size"] == 3);
  for (const auto& spec : standard_instances(243)) {
    FiniteGroup g = catalog_by_spec(spec);
    for (const auto& text : oracle::corpus()) {
      auto r = check_chirality(g, parse_word(text));
      CHECK(r.verdict == Verdict::holds);
      CHECK(r.extra["weakly_rational"] == true);
    }
  }
}

TEST_CASE("product multiplicativity") {
  FiniteGroup q8 = catalog("q8");
  FiniteGroup z3 = catalog("cyclic", {"3"});
  auto r = check_product_multiplicativity(q8, z3, parse_word("x1^2"));
  CHECK(r.verdict == Verdict::holds);
  const FiniteGroup p = direct_product(q8, z3);
  // (-1, z): index of -1 in Q8 times |Z3| plus z
  ElementIndex minus_one = 0;
  for (ElementIndex x = 0; x < q8.order(); ++x)
    if (q8.label(x) == "-1") minus_one = x;
  for (ElementIndex z = 0; z < 3; ++z) CHECK(count_at(r, p.label(minus_one * 3 + z)) == 6);

  auto u = check_product_multiplicativity(catalog("cyclic", {"2"}), z3, parse_word("x1"));
  CHECK(u.verdict == Verdict::holds);
  CHECK(u.margins.size() == 6);
  for (const auto& m : u.margins) CHECK(m.count == 1);

  FiniteGroup h = catalog("heisenberg", {"3"});
  auto hz = check_product_multiplicativity(h, catalog("cyclic", {"2"}), parse_word("[x1,x2]"));
  CHECK(hz.verdict == Verdict::holds);
  CHECK(count_at(hz, direct_product(h, catalog("cyclic", {"2"})).label(0)) == 297 * 4);
}

TEST_CASE("uniformity of surjective maps") {
  auto q = check_uniformity_surjective(catalog("q8"), parse_word("x1 [x2,x3]"));
  CHECK(q.verdict == Verdict::holds);
  CHECK(q.margins.size() == 8);
  for (const auto& m : q.margins) CHECK(m.count == 64);
  auto h = check_uniformity_surjective(catalog("heisenberg", {"3"}), parse_word("x1 [x2,x3]"));
  CHECK(h.verdict == Verdict::holds);
  for (const auto& m : h.margins) CHECK(m.count == 729);
  auto z6 = check_uniformity_surjective(catalog("cyclic", {"6"}), parse_word("x1"));
  CHECK(z6.verdict == Verdict::holds);
  for (const auto& m : z6.margins) CHECK(m.count == 1);
  auto n = check_uniformity_surjective(catalog("q8"), parse_word("[x1,x2]"));
  CHECK(n.verdict == Verdict::not_applicable);
  CHECK(n.hypothesis == "word map is not surjective");
  CHECK(check_uniformity_surjective(oracle::symmetric3(), parse_word("x1")).verdict == Verdict::not_applicable);
}

TEST_CASE("report lines") {
  auto r = verify_theorem_C(catalog("q8"), 1);
  auto doc = nlohmann::json::parse(export_report_line(r));
  for (const char* key : {"claim", "group", "word", "verdict", "margins", "counterexample", "method", "budget"})
    CHECK(doc.contains(key));
  CHECK(doc["counterexample"].is_null());
  CHECK(doc["verdict"] == "holds");
  CHECK(doc["budget"] == r.budget);
  CHECK(export_report_line(r).find('\n') == std::string::npos);

  auto na = nlohmann::json::parse(export_report_line(verify_theorem_C(catalog("cyclic", {"4"}), 1)));
  CHECK(na["verdict"] == "not-applicable");
  CHECK(na.contains("hypothesis"));

  // a failing report must be replayable from its own document
  FiniteGroup q8 = catalog("q8");
  VerificationReport f;
  f.claim = "gamit";
  f.group = "q8";
  f.word = "x1^2";
  f.verdict = Verdict::fails;
  f.counterexample = Counterexample{1, q8.label(1), 3, 8, "", group_document(q8)};
  auto fd = report_json(f);
  CHECK(fd["verdict"] == "fails");
  CHECK(fd["counterexample"]["count"] == "3");
  FiniteGroup replay = load_group(nlohmann::json(fd["counterexample"]["group_document"]));
  CHECK(replay.order() == 8);
  CHECK(count_auto(replay, parse_word("[x1,x2]")).counts() == count_auto(q8, parse_word("[x1,x2]")).counts());
}
