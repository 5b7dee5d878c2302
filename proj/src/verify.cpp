#include "wordlab/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wordlab/character.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/group_io.hpp"

namespace wordlab {

namespace {

VerificationReport start(const std::string& claim, const FiniteGroup& g, const std::string& word) {
  VerificationReport r;
  r.claim = claim;
  r.group = g.name();
  r.word = word;
  return r;
}

VerificationReport not_applicable(VerificationReport r, std::string hypothesis) {
  r.verdict = Verdict::not_applicable;
  r.hypothesis = std::move(hypothesis);
  return r;
}

Counterexample make_counterexample(const FiniteGroup& g, ElementIndex x, BigInt count, BigInt bound,
                                   std::string detail = {}) {
  Counterexample c;
  c.element = x;
  c.label = g.label(x);
  c.count = std::move(count);
  c.bound = std::move(bound);
  c.detail = std::move(detail);
  c.group_document = group_document(g);
  return c;
}

[[noreturn]] void theorem_violated(const VerificationReport& r, const std::string& what) {
  throw OracleDisagreement(r.claim + " violated on " + r.group + " for " + r.word + ": " + what);
}

// Records N(x) against `bound` for each x; the first shortfall becomes the
// counterexample. Returns false on a shortfall.
bool check_lower_bound(VerificationReport& r, const FiberDistribution& d, const std::vector<ElementIndex>& elements,
                       const BigInt& bound) {
  bool ok = true;
  for (auto x : elements) {
    r.margins.push_back(Margin{d.group().label(x), d.count(x), bound});
    if (ok && d.count(x) < bound) {
      ok = false;
      r.counterexample = make_counterexample(d.group(), x, d.count(x), bound);
    }
  }
  return ok;
}

// |G|^e for e >= 0; 1 for negative e (counts on G_w are at least 1).
BigInt order_power(const FiniteGroup& g, long e) {
  return e <= 0 ? BigInt(1) : big_pow(BigInt(g.order()), static_cast<std::uint64_t>(e));
}

void record_counting(VerificationReport& r, const FiberDistribution& d) {
  r.method = d.method;
  r.budget += d.evaluations;
}

std::vector<std::uint64_t> coprime_exponents(const FiniteGroup& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t exp = g.exponent();
  for (std::uint64_t e = 1; e <= exp; ++e)
    if (std::gcd(e, exp) == 1) out.push_back(e);
  return out;
}

std::string big_text(const BigInt& v) { return to_decimal(v); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "not-applicable";
}

BoundMode parse_bound_mode(const std::string& name) {
  if (name == "amit") return BoundMode::amit;
  if (name == "gamit" || name == "generalized_amit") return BoundMode::generalized_amit;
  if (name == "thmA") return BoundMode::thmA;
  if (name == "thmB") return BoundMode::thmB;
  if (name == "solomon") return BoundMode::solomon;
  throw DomainError("unknown bound mode '" + name + "'");
}

const char* to_string(BoundMode mode) {
  switch (mode) {
    case BoundMode::amit:
      return "amit";
    case BoundMode::generalized_amit:
      return "generalized_amit";
    case BoundMode::thmA:
      return "thmA";
    case BoundMode::thmB:
      return "thmB";
    case BoundMode::solomon:
      return "solomon";
  }
  return "amit";
}

VerificationReport verify_bounds(const FiniteGroup& g, const Word& w, BoundMode mode, CountOptions options) {
  VerificationReport r = start(to_string(mode), g, render(w));
  r.conjecture = mode == BoundMode::amit || mode == BoundMode::generalized_amit;

  Word counted = w;
  switch (mode) {
    case BoundMode::amit:
    case BoundMode::generalized_amit:
      if (!g.is_nilpotent()) return not_applicable(std::move(r), "group is not nilpotent");
      break;
    case BoundMode::solomon:
      if (!g.is_nilpotent()) return not_applicable(std::move(r), "group is not nilpotent");
      [[fallthrough]];
    case BoundMode::thmA:
      if (mode == BoundMode::thmA && !g.is_class_at_most_2())
        return not_applicable(std::move(r), "nilpotency class > 2");
      if (w.arity() > 2) return not_applicable(std::move(r), "word has more than two variables");
      counted = w.with_arity(2);
      break;
    case BoundMode::thmB:
      if (!g.is_class_at_most_2()) return not_applicable(std::move(r), "nilpotency class > 2");
      if (g.order() % 2 == 0) return not_applicable(std::move(r), "group order is even (p = 2)");
      break;
  }
  if (counted.arity() != w.arity()) r.word += " (arity " + std::to_string(counted.arity()) + ")";

  const FiberDistribution d = count_auto(g, counted, options);
  record_counting(r, d);
  const long k = static_cast<long>(counted.arity());

  bool ok = true;
  switch (mode) {
    case BoundMode::amit:
      ok = check_lower_bound(r, d, {0}, order_power(g, k - 1));
      break;
    case BoundMode::generalized_amit:
      ok = check_lower_bound(r, d, d.support(), order_power(g, k - 1));
      break;
    case BoundMode::thmA:
      ok = check_lower_bound(r, d, d.support(), BigInt(g.order()));
      break;
    case BoundMode::thmB:
      ok = check_lower_bound(r, d, d.support(), order_power(g, k - 2));
      break;
    case BoundMode::solomon: {
      std::vector<ElementIndex> central;
      for (auto x : d.support())
        if (g.center().contains(x)) central.push_back(x);
      ok = check_lower_bound(r, d, central, BigInt(g.order()));
      break;
    }
  }
  r.verdict = ok ? Verdict::holds : Verdict::fails;

  // Amit's bound is a theorem in class 2; the others here are theorems outright.
  const bool theorem = !r.conjecture || (mode == BoundMode::amit && g.is_class_at_most_2());
  if (!ok && theorem) theorem_violated(r, "N(" + r.counterexample->label + ") = " + big_text(r.counterexample->count) +
                                              " < " + big_text(r.counterexample->bound));

  // Sufficient condition for the generalized bound: class-2 p-group, word
  // with zero exponent sums, |Z|^2 <= |G|.
  if (g.p_group_prime() && g.is_class_at_most_2() && class2_signature(counted).a_is_zero()) {
    const bool small_center = g.center().size() * g.center().size() <= g.order();
    r.extra["center_squared_at_most_order"] = small_center;
    if (small_center) {
      const BigInt bound = order_power(g, k - 1);
      for (auto x : d.support())
        if (d.count(x) < bound)
          theorem_violated(r, "generalized bound fails at " + g.label(x) + " although |Z|^2 <= |G|");
    }
  }
  return r;
}

VerificationReport verify_theorem_C(const FiniteGroup& g, std::size_t k, CountOptions options) {
  if (k < 1) throw DomainError("w_k needs k >= 1");
  const Word wk = build_named_word(NamedWord::wk, k);
  VerificationReport r = start("thmC", g, render(wk));
  if (!g.p_group_prime()) return not_applicable(std::move(r), "not a p-group");
  if (g.order() > kMaxTableOrder) return not_applicable(std::move(r), "order beyond character table range");
  const CharacterTable& t = cached_character_table(g);
  const auto m = t.two_degree_m();
  if (!m) {
    std::string cd;
    for (auto d : t.degree_set()) cd += (cd.empty() ? "" : ",") + std::to_string(d);
    return not_applicable(std::move(r), "cd(G) = {" + cd + "} does not have two elements");
  }

  const FiberDistribution d = count_auto(g, wk, options);
  record_counting(r, d);
  const Subgroup& derived = g.derived_subgroup();
  const BigInt bound = order_power(g, static_cast<long>(2 * k - 1));

  if (d.support() != derived.elements) theorem_violated(r, "support differs from the derived subgroup");
  if (!check_lower_bound(r, d, derived.elements, bound))
    theorem_violated(r, "count below |G|^(2k-1) at " + r.counterexample->label);

  std::set<BigInt> sizes;
  for (auto x : derived.elements) sizes.insert(d.count(x));
  if (sizes.size() != 2) theorem_violated(r, std::to_string(sizes.size()) + " fiber sizes on G'");
  for (auto x : derived.elements)
    if (x != 0 && d.count(x) >= d.count(0)) theorem_violated(r, "N(1) is not the larger fiber size");

  const TwoDegreeCounts closed = closed_form_wk_two_degree(g.order(), derived.size(), *m, k);
  for (auto x : derived.elements)
    if (d.count(x) != (x == 0 ? closed.identity : closed.nontrivial))
      theorem_violated(r, "closed form disagrees at " + g.label(x));
  const FiberDistribution frob = frobenius_count_wk(t, k);
  if (frob.counts() != d.counts()) theorem_violated(r, "character sum disagrees with counting");

  r.verdict = Verdict::holds;
  r.extra["m"] = *m;
  r.extra["fiber_sizes"] = {big_text(*sizes.rbegin()), big_text(*sizes.begin())};
  r.extra["cross_checks"] = {d.method, "closed-form", "frobenius"};
  return r;
}

VerificationReport verify_corollary_D(const FiniteGroup& g, std::size_t k, CountOptions options) {
  if (k < 1) throw DomainError("w_k needs k >= 1");
  const Word wk = build_named_word(NamedWord::wk, k);
  VerificationReport r = start("corD", g, render(wk));
  if (!g.is_class_at_most_2()) return not_applicable(std::move(r), "nilpotency class > 2");
  const Subgroup& derived = g.derived_subgroup();
  if (derived.size() < 2 || prime_factors(derived.size()) != std::vector<std::uint64_t>{derived.size()})
    return not_applicable(std::move(r), "|G'| = " + std::to_string(derived.size()) + " is not prime");

  const FiberDistribution d = count_auto(g, wk, options);
  record_counting(r, d);
  if (!check_lower_bound(r, d, derived.elements, order_power(g, static_cast<long>(2 * k - 1))))
    theorem_violated(r, "count below |G|^(2k-1) at " + r.counterexample->label);
  if (g.order() <= kMaxTableOrder && g.conjugacy_classes().count() <= kMaxTableClasses) {
    const bool central = is_central_type(cached_character_table(g));
    r.extra["central_type"] = central;
    if (!central) theorem_violated(r, "no irreducible degree d with d^2 = |G:Z|");
  }
  r.verdict = Verdict::holds;
  return r;
}

VerificationReport check_rationality(const FiniteGroup& g, const Word& w, CountOptions options) {
  VerificationReport r = start("rational", g, render(w));
  const FiberDistribution d = count_auto(g, w, options);
  record_counting(r, d);
  const bool class2 = g.is_class_at_most_2();

  r.verdict = Verdict::holds;
  for (auto e : coprime_exponents(g)) {
    for (ElementIndex x = 0; x < g.order() && r.verdict == Verdict::holds; ++x) {
      const ElementIndex y = g.power(x, e);
      if (d.count(x) != d.count(y)) {
        r.verdict = Verdict::fails;
        r.counterexample = make_counterexample(g, x, d.count(x), d.count(y),
                                               "e = " + std::to_string(e) + ", N(" + g.label(y) + ") differs");
      }
    }
    if (r.verdict != Verdict::holds) break;
  }
  if (r.verdict == Verdict::fails && class2) theorem_violated(r, r.counterexample->detail);

  if (g.order() <= kMaxTableOrder && g.conjugacy_classes().count() <= kMaxTableClasses) {
    const CharacterTable& t = cached_character_table(g);
    try {
      const FourierDecomposition f = fourier_coefficients(d, t);
      const ClassFunctionKind kind = classify_class_function(f, t, d);
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < t.size(); ++i) coeffs.push_back(f.coefficient_text(i));
      r.extra["fourier"] = coeffs;
      r.extra["class_function"] = to_string(kind);
      if (class2 && kind == ClassFunctionKind::neither) theorem_violated(r, "non-integral Fourier coefficient");
      if (class2 && g.order() % 2 == 1 && kind != ClassFunctionKind::character)
        theorem_violated(r, "negative Fourier coefficient on an odd-order group");
    } catch (const NumericFailure& e) {
      if (class2) throw;
      r.extra["fourier"] = "irrational";
    }
  }
  return r;
}

VerificationReport check_chirality(const FiniteGroup& g, const Word& w, CountOptions options) {
  VerificationReport r = start("chiral", g, render(w));
  const FiberDistribution d = count_auto(g, w, options);
  record_counting(r, d);
  const auto support = d.support();
  std::vector<char> in(g.order(), 0);
  for (auto x : support) in[x] = 1;

  r.verdict = Verdict::holds;
  for (auto x : support)
    if (!in[g.inverse(x)]) {
      r.verdict = Verdict::fails;
      r.counterexample = make_counterexample(g, x, d.count(x), 0, "inverse " + g.label(g.inverse(x)) + " not in G_w");
      break;
    }
  bool weak = true;
  for (auto e : coprime_exponents(g)) {
    for (auto x : support)
      if (!in[g.power(x, e)]) weak = false;
    if (!weak) break;
  }
  r.extra["chiral"] = r.verdict == Verdict::fails;
  r.extra["weakly_rational"] = weak;
  r.extra["support_size"] = support.size();
  if (g.is_class_at_most_2() && (r.verdict == Verdict::fails || !weak))
    theorem_violated(r, "G_w not closed under coprime powers in class 2");
  return r;
}

VerificationReport check_product_multiplicativity(const FiniteGroup& h, const FiniteGroup& k, const Word& w,
                                                  CountOptions options) {
  const FiniteGroup p = direct_product(h, k);
  VerificationReport r = start("product", p, render(w));
  const FiberDistribution dp = count_brute_force(p, w, options);
  const FiberDistribution dh = count_auto(h, w, options);
  const FiberDistribution dk = count_auto(k, w, options);
  r.method = dp.method;
  r.budget = dp.evaluations + dh.evaluations + dk.evaluations;
  r.verdict = Verdict::holds;
  for (ElementIndex x = 0; x < p.order(); ++x) {
    const BigInt expected = dh.count(x / k.order()) * dk.count(x % k.order());
    if (expected != 0 || dp.count(x) != 0) r.margins.push_back(Margin{p.label(x), dp.count(x), expected});
    if (dp.count(x) != expected) {
      r.verdict = Verdict::fails;
      r.counterexample = make_counterexample(p, x, dp.count(x), expected);
      theorem_violated(r, "N(" + p.label(x) + ") is not the product of component counts");
    }
  }
  return r;
}

VerificationReport check_uniformity_surjective(const FiniteGroup& g, const Word& w, CountOptions options) {
  VerificationReport r = start("uniform", g, render(w));
  if (!g.is_nilpotent()) return not_applicable(std::move(r), "group is not nilpotent");
  const FiberDistribution d = count_auto(g, w, options);
  record_counting(r, d);
  const auto support = d.support();
  r.extra["support_size"] = support.size();
  if (support.size() != g.order()) return not_applicable(std::move(r), "word map is not surjective");
  const BigInt expected = order_power(g, static_cast<long>(w.arity()) - 1);
  r.verdict = Verdict::holds;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    r.margins.push_back(Margin{g.label(x), d.count(x), expected});
    if (d.count(x) != expected) {
      r.verdict = Verdict::fails;
      r.counterexample = make_counterexample(g, x, d.count(x), expected);
      theorem_violated(r, "surjective word map is not uniform");
    }
  }
  return r;
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json doc;
  doc["claim"] = r.claim;
  doc["group"] = r.group;
  doc["word"] = r.word;
  doc["verdict"] = to_string(r.verdict);
  nlohmann::ordered_json margins = nlohmann::ordered_json::array();
  for (const auto& m : r.margins)
    margins.push_back({{"element", m.element}, {"count", big_text(m.count)}, {"bound", big_text(m.bound)}});
  doc["margins"] = std::move(margins);
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    nlohmann::ordered_json ce;
    ce["element"] = c.label;
    ce["index"] = c.element;
    ce["count"] = big_text(c.count);
    ce["bound"] = big_text(c.bound);
    if (!c.detail.empty()) ce["detail"] = c.detail;
    ce["group_document"] = c.group_document;
    doc["counterexample"] = std::move(ce);
  } else {
    doc["counterexample"] = nullptr;
  }
  doc["method"] = r.method;
  doc["budget"] = r.budget;
  if (!r.hypothesis.empty()) doc["hypothesis"] = r.hypothesis;
  if (!r.extra.empty()) doc["extra"] = r.extra;
  return doc;
}

std::string export_report_line(const VerificationReport& r) { return report_json(r).dump(); }

}  // namespace wordlab
