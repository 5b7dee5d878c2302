#include "wordlab/abelian.hpp"

#include <algorithm>

#include "wordlab/errors.hpp"
#include "wordlab/int_matrix.hpp"

namespace wordlab {

const std::vector<std::uint64_t>& AbelianDecomposition::coordinates_of(ElementIndex g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) throw DomainError("element outside the decomposed subgroup");
  return coordinates[static_cast<std::size_t>(it - elements.begin())];
}

AbelianDecomposition decompose_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (auto x : h.elements)
    for (auto y : h.elements) {
      if (y > x) break;
      if (g.multiply(x, y) != g.multiply(y, x)) throw DomainError("subgroup is not abelian");
    }

  // Greedy generators s_1..s_r. The span of s_1..s_i is built as
  // {x * s_i^t : x in previous span, 0 <= t < n_i}, giving every element a
  // unique exponent vector; each step contributes the relation
  // n_i e_i - (vector of s_i^{n_i}).
  std::vector<ElementIndex> gens;
  std::vector<std::vector<BigInt>> relations;
  std::vector<ElementIndex> span{0};
  std::vector<std::vector<BigInt>> vecs{{}};
  std::vector<std::int64_t> where(g.order(), -1);
  where[0] = 0;

  for (auto s : h.elements) {
    if (where[s] >= 0) continue;
    const std::size_t r = gens.size();
    gens.push_back(s);
    for (auto& v : vecs) v.resize(r + 1);
    for (auto& rel : relations) rel.resize(r + 1);

    std::uint64_t n = 1;
    ElementIndex p = s;
    while (where[p] < 0) {
      p = g.multiply(p, s);
      ++n;
    }
    std::vector<BigInt> rel(r + 1);
    for (std::size_t i = 0; i < r; ++i) rel[i] = -vecs[static_cast<std::size_t>(where[p])][i];
    rel[r] = n;
    relations.push_back(std::move(rel));

    const std::size_t base_size = span.size();
    ElementIndex st = s;
    for (std::uint64_t t = 1; t < n; ++t) {
      for (std::size_t b = 0; b < base_size; ++b) {
        const ElementIndex y = g.multiply(span[b], st);
        where[y] = static_cast<std::int64_t>(span.size());
        span.push_back(y);
        auto v = vecs[b];
        v[r] = t;
        vecs.push_back(std::move(v));
      }
      st = g.multiply(st, s);
    }
  }
  if (span.size() != h.size()) throw DomainError("subgroup is not closed");

  AbelianDecomposition out;
  out.elements = h.elements;
  out.coordinates.assign(h.size(), {});
  const std::size_t r = gens.size();
  if (r == 0) return out;

  IntMatrix rel(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rel(i, j) = relations[i][j];
  const SmithForm snf = smith_normal_form(rel);

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < r; ++j) {
    const BigInt& d = snf.diagonal(j, j);
    if (d > 1) {
      kept.push_back(j);
      out.invariants.push_back(d.convert_to<std::uint64_t>());
    }
  }
  // Coordinates of exponent vector v are (v * right) mod d_j.
  for (std::size_t idx = 0; idx < span.size(); ++idx) {
    const ElementIndex x = span[idx];
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(out.elements.begin(), out.elements.end(), x) - out.elements.begin());
    std::vector<std::uint64_t> c;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      const std::size_t j = kept[q];
      BigInt acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += vecs[idx][i] * snf.right(i, j);
      c.push_back(mod_u64(acc, out.invariants[q]));
    }
    out.coordinates[pos] = std::move(c);
  }
  return out;
}

BigInt count_abelian_power_product(std::span<const std::uint64_t> invariants,
                                   std::span<const BigInt> a,
                                   std::span<const std::uint64_t> target) {
  if (target.size() != invariants.size())
    throw DomainError("target has " + std::to_string(target.size()) + " coordinates, group has " +
                      std::to_string(invariants.size()) + " cyclic factors");
  BigInt total = 1;
  const std::size_t k = a.size();
  for (std::size_t f = 0; f < invariants.size(); ++f) {
    const std::uint64_t m = invariants[f];
    if (m == 0) throw DomainError("cyclic factor of order 0");
    if (target[f] >= m) throw DomainError("target outside the described group");
    if (k == 0) {
      if (target[f] != 0) return 0;
      continue;
    }
    BigInt gcd = m;
    for (const auto& ai : a) gcd = big_gcd(gcd, ai < 0 ? BigInt(-ai) : ai);
    if (target[f] % gcd.convert_to<std::uint64_t>() != 0) return 0;
    total *= big_pow(BigInt(m), k - 1) * gcd;
  }
  return total;
}

}  // namespace wordlab
