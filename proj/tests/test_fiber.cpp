#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "wordlab/catalog.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/fiber.hpp"

using namespace wordlab;

namespace {

std::map<std::string, BigInt> by_label(const FiberDistribution& d) {
  std::map<std::string, BigInt> out;
  for (auto x : d.support()) out[d.group().label(x)] = d.count(x);
  return out;
}

using Labeled = std::map<std::string, BigInt>;

}  // namespace

TEST_CASE("brute force examples") {
  FiniteGroup q8 = catalog("q8");
  CHECK(by_label(count_brute_force(q8, parse_word("[x1,x2]"))) == Labeled{{"1", 40}, {"-1", 24}});
  CHECK(by_label(count_brute_force(q8, parse_word("x1^2"))) == Labeled{{"1", 2}, {"-1", 6}});
  FiniteGroup z2 = catalog("cyclic", {"2"});
  CHECK(by_label(count_brute_force(z2, parse_word("x1"))) == Labeled{{"0", 1}, {"1", 1}});
  CHECK(count_brute_force_serial(q8, parse_word("[x1,x2]")).counts() ==
        count_brute_force(q8, parse_word("[x1,x2]")).counts());
}

TEST_CASE("budget") {
  FiniteGroup q8 = catalog("q8");
  try {
    count_brute_force(q8, parse_word("[x1,x2]"), CountOptions{10, 0});
    FAIL("no throw");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 64);
    CHECK(e.budget() == 10);
  }
  CHECK_THROWS_AS(count_brute_force_serial(q8, parse_word("x1 x2 x3"), 100), BudgetExceeded);
  CHECK_NOTHROW(count_brute_force(q8, parse_word("x1 x2"), CountOptions{64, 0}));
  CHECK(saturating_power(1000, 10) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("central quotient examples") {
  FiniteGroup h = catalog("heisenberg", {"3"});
  FiberDistribution d = count_central_quotient(h, parse_word("[x1,x2]"));
  CHECK(d.count(0) == 297);
  for (auto z : h.center().elements)
    if (z != 0) CHECK(d.count(z) == 216);
  CHECK(d.evaluations == 81);
  CHECK(d.support() == h.center().elements);

  FiniteGroup q8 = catalog("q8");
  Word w = parse_word("x1^2 [x1,x2]");
  CHECK(count_central_quotient(q8, w).counts() == count_brute_force(q8, w).counts());

  FiniteGroup z12 = catalog("cyclic", {"12"});
  Word v = parse_word("x1^3 x2^-4 x1^2");
  FiberDistribution a = count_central_quotient(z12, v);
  CHECK(a.evaluations == 1);
  CHECK(a.counts() == count_brute_force(z12, v).counts());

  CHECK_THROWS_AS(count_central_quotient(oracle::symmetric3(), parse_word("[x1,x2]")), DomainError);
}

TEST_CASE("convolution") {
  FiniteGroup q8 = catalog("q8");
  FiberDistribution c = count_brute_force(q8, parse_word("[x1,x2]"));
  FiberDistribution cc = convolve_disjoint(c, c);
  CHECK(cc.arity() == 4);
  CHECK(by_label(cc) == Labeled{{"1", 2176}, {"-1", 1920}});
  CHECK(cc.counts() == count_brute_force(q8, build_named_word(NamedWord::wk, 2)).counts());

  FiberDistribution unit = count_brute_force(q8, Word::identity(0));
  CHECK(unit.count(0) == 1);
  CHECK(convolve_disjoint(c, unit).counts() == c.counts());
  CHECK(convolve_disjoint(unit, c).counts() == c.counts());

  FiniteGroup z3 = catalog("cyclic", {"3"});
  FiberDistribution u = convolve_disjoint(count_brute_force(z3, parse_word("x1")), count_brute_force(z3, parse_word("x1")));
  CHECK(u.arity() == 2);
  CHECK(u.counts() == std::vector<BigInt>{3, 3, 3});

  CHECK_THROWS_AS(convolve_disjoint(c, u), DomainError);
}

TEST_CASE("convolution equals brute force on shifted concatenations") {
  const auto corpus = oracle::corpus();
  for (const char* spec : {"q8", "d4", "cyclic(4)"}) {
    FiniteGroup g = catalog_by_spec(spec);
    for (std::size_t i = 0; i < corpus.size(); i += 3)
      for (std::size_t j = 1; j < corpus.size(); j += 5) {
        Word u = parse_word(corpus[i]), v = parse_word(corpus[j]);
        if (u.arity() + v.arity() > 4) continue;
        std::vector<Word> shift;
        for (std::size_t q = 0; q < v.arity(); ++q)
          shift.push_back(Word(u.arity() + v.arity(), {Letter{u.arity() + q + 1, 1}}));
        Word uv = u.with_arity(u.arity() + v.arity()) * substitute(v, shift);
        CAPTURE(corpus[i]);
        CAPTURE(corpus[j]);
        CHECK(convolve_disjoint(count_brute_force(g, u), count_brute_force(g, v)).counts() ==
              count_brute_force(g, uv).counts());
      }
  }
}

TEST_CASE("disjoint splitting and compression") {
  auto parts = split_disjoint(parse_word("[x1,x2][x3,x4]"));
  REQUIRE(parts);
  CHECK(parts->first == parse_word("[x1,x2]"));
  CHECK(parts->second == parse_word("[x1,x2]"));
  CHECK_FALSE(split_disjoint(parse_word("[x1,x2][x1,x3]")));
  CHECK_FALSE(split_disjoint(parse_word("x1")));
  auto p2 = split_disjoint(parse_word("x2^2 x3 x1"));
  REQUIRE(p2);
  CHECK(p2->first == parse_word("x1^2"));
  CHECK(p2->second == parse_word("x1 x2"));
  CHECK(compress_variables(parse_word("x3 x5^2 x3")) == parse_word("x1 x2^2 x1"));
}

TEST_CASE("count_auto routes") {
  FiniteGroup h = catalog("heisenberg", {"3"});
  Word w2 = build_named_word(NamedWord::wk, 2);
  FiberDistribution a = count_auto(h, w2);
  CHECK(a.method.find("convolve") != std::string::npos);
  CHECK(a.counts() == count_brute_force(h, w2).counts());

  FiniteGroup s3 = oracle::symmetric3();
  FiberDistribution b = count_auto(s3, parse_word("[x1,x2]"));
  CHECK(b.method == "brute");
  CHECK(b.counts() == oracle::enumerate_counts(s3, parse_word("[x1,x2]")));

  FiniteGroup q8 = catalog("q8");
  FiberDistribution c = count_auto(q8, parse_word("x1^4"));
  CHECK(by_label(c) == Labeled{{"1", 8}});
  CHECK(count_auto(q8, parse_word("x1^2", 3)).count(0) == 2 * 64);
  CHECK(count_auto(q8, parse_word("x1^2", 3)).method.rfind("pad", 0) == 0);
}

TEST_CASE("method agreement, mass and class functions on small catalog groups") {
  const auto corpus = oracle::corpus();
  for (const auto& spec : standard_instances(64)) {
    FiniteGroup g = catalog_by_spec(spec);
    const auto& cc = g.conjugacy_classes();
    for (const auto& text : corpus) {
      Word w = parse_word(text);
      CAPTURE(spec);
      CAPTURE(text);
      FiberDistribution brute = count_brute_force(g, w);
      CHECK(count_central_quotient(g, w).counts() == brute.counts());
      CHECK(count_auto(g, w).counts() == brute.counts());
      if (g.order() <= 16 || w.arity() <= 2) CHECK(oracle::enumerate_counts(g, w) == brute.counts());
      BigInt mass = 0;
      for (const auto& c : brute.counts()) mass += c;
      CHECK(mass == brute.total());
      bool constant = true;
      for (std::size_t c = 0; c < cc.count(); ++c)
        for (auto x : cc.classes[c]) constant = constant && brute.count(x) == brute.count(cc.representatives[c]);
      CHECK(constant);
      CHECK_FALSE(brute.support().empty());
    }
  }
}

TEST_CASE("serial and parallel kernels agree for 1, 2 and 8 workers") {
  for (const char* spec : {"d4", "extraspecial(2,2,-)", "heisenberg(3)"}) {
    FiniteGroup g = catalog_by_spec(spec);
    for (const char* text : {"x1^2 [x1,x2]", "[x1,x2][x2,x3]^2", "x1 x2 x3 x1^-1 x2^-1 x3^-1"}) {
      Word w = parse_word(text);
      const auto serial = count_brute_force_serial(g, w).counts();
      for (unsigned workers : {1u, 2u, 8u}) {
        CHECK(count_brute_force(g, w, CountOptions{kDefaultBudget, workers}).counts() == serial);
        CHECK(export_json(count_central_quotient(g, w, CountOptions{kDefaultBudget, workers})).dump() ==
              export_json(count_central_quotient(g, w, CountOptions{kDefaultBudget, 1})).dump());
      }
    }
  }
}

TEST_CASE("defined word maps") {
  FiniteGroup h = catalog("heisenberg", {"3"});
  for (ElementIndex a = 0; a < h.order(); a += 5) {
    DefinedWordMap f(h, parse_word("[x1,x2]"), {{2, a}});
    CHECK(f.free_positions() == std::vector<std::size_t>{1});
    HomomorphismCheck r = is_homomorphism(f);
    CHECK(r.is_homomorphism);
    CHECK(r.image_in_center);
  }
  FiniteGroup q8 = catalog("q8");
  HomomorphismCheck sq = is_homomorphism(DefinedWordMap(q8, parse_word("x1^2"), {}));
  CHECK_FALSE(sq.is_homomorphism);
  FiniteGroup z6 = catalog("cyclic", {"6"});
  CHECK(is_homomorphism(DefinedWordMap(z6, parse_word("x1^2 x2^3 x1"), {{1, 4}})).is_homomorphism);
  CHECK(is_homomorphism(DefinedWordMap(z6, parse_word("x1^5 x2"), {})).is_homomorphism);

  DefinedWordMap f(q8, parse_word("[x1,x2] x3"), {{2, q8.find_label("j")}});
  std::vector<ElementIndex> free{q8.find_label("i"), 0};
  std::vector<Element> merged{q8.element(free[0]), q8.element(q8.find_label("j")), q8.element(0)};
  CHECK(f.evaluate(free) == evaluate_word(q8, f.word(), merged).index);
  CHECK_THROWS_AS(DefinedWordMap(q8, parse_word("x1"), {{2, 0}}), DomainError);
  CHECK_THROWS_AS(DefinedWordMap(q8, parse_word("x1 x2"), {{2, 8}}), DomainError);
  CHECK_THROWS_AS(is_homomorphism(DefinedWordMap(q8, parse_word("x1 x2"), {}), 100), BudgetExceeded);
}

TEST_CASE("exports") {
  FiniteGroup q8 = catalog("q8");
  FiberDistribution d = count_auto(q8, parse_word("[x1,x2]"));
  CHECK(export_json(d).dump() ==
        R"({"group":"q8","word":"x1^-1 x2^-1 x1 x2","arity":2,"counts":{"1":"40","-1":"24"}})");
  CHECK(export_csv(d) == "element,count\n1,40\n-1,24\n");
  CHECK(export_table(d) == "element  count\n1           40\n-1          24\n");
  FiberDistribution big = count_auto(catalog("heisenberg", {"5"}), parse_word("x1 x2 x3 x4 x5 x6"));
  CHECK(export_json(big)["counts"]["1"] == "30517578125");
}
