#include <algorithm>
#include <deque>
#include <numeric>

#include "detail.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/group.hpp"

namespace wordlab {

namespace {

std::vector<char> membership(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> in(g.order(), 0);
  for (auto x : h.elements) in[x] = 1;
  return in;
}

}  // namespace

bool Subgroup::contains(ElementIndex g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                       elements.end());
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Subgroup closure(const FiniteGroup& g, std::span<const ElementIndex> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementIndex> found{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < found.size(); ++head) {
    const ElementIndex x = found[head];
    for (auto s : gens) {
      const ElementIndex y = g.multiply(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup{g.uid(), std::move(found)};
}

namespace detail {

std::vector<ElementIndex> compute_generators(const FiniteGroup& g) {
  std::vector<ElementIndex> gens;
  if (const auto* pc = g.pc()) {
    for (std::size_t i = 0; i < pc->generator_count(); ++i)
      gens.push_back(static_cast<ElementIndex>(pc->generator(i)));
    return gens;
  }
  Subgroup h{g.uid(), {0}};
  std::vector<char> in = membership(g, h);
  for (ElementIndex x = 0; x < g.order() && h.size() < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    h = closure(g, gens);
    in = membership(g, h);
  }
  return gens;
}

Subgroup compute_center(const FiniteGroup& g) {
  const auto& gens = g.generators();
  std::vector<ElementIndex> z;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : gens)
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return Subgroup{g.uid(), std::move(z)};
}

Subgroup compute_derived(const FiniteGroup& g) {
  const auto& gens = g.generators();
  std::vector<ElementIndex> hgens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const ElementIndex c = g.commutator(gens[i], gens[j]);
      if (c != 0) hgens.push_back(c);
    }
  Subgroup h = closure(g, hgens);
  std::vector<char> in = membership(g, h);
  // Normal closure: conjugates of the generators of H by generators of G.
  for (std::size_t idx = 0; idx < hgens.size(); ++idx) {
    for (auto s : gens) {
      const ElementIndex c = g.conjugate(hgens[idx], s);
      if (in[c]) continue;
      hgens.push_back(c);
      h = closure(g, hgens);
      in = membership(g, h);
    }
  }
  return h;
}

ConjugacyClasses compute_classes(const FiniteGroup& g) {
  const auto& gens = g.generators();
  ConjugacyClasses cc;
  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  cc.class_of.assign(g.order(), kUnassigned);
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(cc.classes.size());
    std::vector<ElementIndex> orbit{x};
    cc.class_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (auto s : gens) {
        const ElementIndex y = g.conjugate(orbit[head], s);
        if (cc.class_of[y] == kUnassigned) {
          cc.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cc.representatives.push_back(x);
    cc.sizes.push_back(orbit.size());
    cc.classes.push_back(std::move(orbit));
  }
  return cc;
}

std::vector<std::uint64_t> compute_element_orders(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  const auto primes = prime_factors(n);
  std::vector<std::uint64_t> orders(n, 1);
  for (ElementIndex x = 1; x < n; ++x) {
    std::uint64_t o = n;
    for (auto p : primes)
      while (o % p == 0 && g.power(x, o / p) == 0) o /= p;
    orders[x] = o;
  }
  return orders;
}

}  // namespace detail

Subgroup center(const FiniteGroup& g) { return g.center(); }
Subgroup derived_subgroup(const FiniteGroup& g) { return g.derived_subgroup(); }
ConjugacyClasses conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }

std::vector<ElementIndex> power_map(const FiniteGroup& g, const BigInt& e) {
  const std::uint64_t r = mod_u64(e, g.order());
  std::vector<ElementIndex> out(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) out[x] = g.power(x, r);
  return out;
}

std::vector<SylowSubgroup> sylow_decomposition(const FiniteGroup& g) {
  const auto& orders = g.element_orders();
  std::vector<SylowSubgroup> out;
  std::uint64_t product = 1;
  for (auto p : prime_factors(g.order())) {
    std::vector<ElementIndex> members;
    for (ElementIndex x = 0; x < g.order(); ++x) {
      std::uint64_t o = orders[x];
      while (o % p == 0) o /= p;
      if (o == 1) members.push_back(x);
    }
    // The p-elements form a subgroup iff the subgroup they generate has no
    // further elements.
    std::vector<char> in(g.order(), 0);
    for (auto x : members) in[x] = 1;
    std::vector<ElementIndex> gens;
    Subgroup h{g.uid(), {0}};
    std::vector<char> in_h(g.order(), 0);
    in_h[0] = 1;
    for (auto x : members) {
      if (in_h[x]) continue;
      gens.push_back(x);
      h = closure(g, gens);
      if (h.size() > members.size())
        throw DomainError(g.name() + " is not nilpotent: " + std::to_string(p) +
                          "-elements are not closed under products");
      std::fill(in_h.begin(), in_h.end(), 0);
      for (auto y : h.elements) in_h[y] = 1;
    }
    for (auto y : h.elements)
      if (!in[y])
        throw DomainError(g.name() + " is not nilpotent: " + std::to_string(p) +
                          "-elements are not closed under products");
    product *= members.size();
    out.push_back(SylowSubgroup{p, Subgroup{g.uid(), std::move(members)}});
  }
  if (product != g.order()) throw DomainError(g.name() + " is not nilpotent");
  return out;
}

namespace {

PcPresentation concatenate(const PcPresentation& a, const PcPresentation& b, std::string name) {
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<std::uint32_t> orders = a.orders;
  orders.insert(orders.end(), b.orders.begin(), b.orders.end());
  PcPresentation out(std::move(name), std::move(orders));
  auto widen = [&](const std::vector<std::uint32_t>& v, std::size_t offset) {
    if (v.empty()) return std::vector<std::uint32_t>{};
    std::vector<std::uint32_t> w(n, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
    return w;
  };
  for (std::size_t i = 0; i < na; ++i) {
    out.powers[i] = widen(a.powers[i], 0);
    for (std::size_t j = i + 1; j < na; ++j) out.commutators[i][j] = widen(a.commutators[i][j], 0);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    out.powers[na + i] = widen(b.powers[i], na);
    for (std::size_t j = i + 1; j < nb; ++j)
      out.commutators[na + i][na + j] = widen(b.commutators[i][j], na);
  }
  return out;
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k) {
  const std::uint64_t nh = h.order(), nk = k.order();
  if (nh * nk > kMaxGroupOrder)
    throw DomainError("direct product order " + std::to_string(nh * nk) + " exceeds " +
                      std::to_string(kMaxGroupOrder));
  std::string name = h.name() + " x " + k.name();
  FiniteGroup::Labeler labeler = [h, k, nk](ElementIndex e) {
    return "(" + h.label(static_cast<ElementIndex>(e / nk)) + "," +
           k.label(static_cast<ElementIndex>(e % nk)) + ")";
  };
  if (h.pc() && k.pc()) {
    FiniteGroup g(PcClass2Group(concatenate(h.pc()->presentation(), k.pc()->presentation(), name)));
    return g.renamed(name, labeler);
  }
  const std::uint64_t n = nh * nk;
  if (n > kMaxCayleyOrder)
    throw DomainError("direct product of table groups limited to order " +
                      std::to_string(kMaxCayleyOrder));
  std::vector<ElementIndex> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      const auto ha = static_cast<ElementIndex>(a / nk), ka = static_cast<ElementIndex>(a % nk);
      const auto hb = static_cast<ElementIndex>(b / nk), kb = static_cast<ElementIndex>(b % nk);
      table[a * n + b] = static_cast<ElementIndex>(h.multiply(ha, hb) * nk + k.multiply(ka, kb));
    }
  FiniteGroup g(CayleyGroup(name, static_cast<std::uint32_t>(n), std::move(table)));
  return g.renamed(name, labeler);
}

Element evaluate_word(const FiniteGroup& g, const Word& w, std::span<const Element> tuple) {
  if (tuple.size() != w.arity())
    throw DomainError("tuple length " + std::to_string(tuple.size()) + " does not match arity " +
                      std::to_string(w.arity()));
  for (const auto& e : tuple)
    if (e.owner != g.uid() || e.index >= g.order())
      throw DomainError("element handle does not belong to " + g.name());
  ElementIndex acc = 0;
  for (const auto& l : w.letters())
    acc = g.multiply(acc, g.power(tuple[l.generator - 1].index, l.exponent));
  return Element{acc, g.uid()};
}

CayleyGroup to_cayley(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxCayleyOrder)
    throw DomainError("Cayley tables are limited to order " + std::to_string(kMaxCayleyOrder));
  std::vector<ElementIndex> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      table[a * n + b] = g.multiply(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
  return CayleyGroup(g.name(), static_cast<std::uint32_t>(n), std::move(table));
}

}  // namespace wordlab
