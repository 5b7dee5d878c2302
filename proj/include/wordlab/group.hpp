#pragma once

// Finite groups with two engines: an explicit Cayley table, or a class-2
// power-commutator presentation multiplied by collection. Both expose
// elements as canonical indices 0..|G|-1 with 0 the identity.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordlab/bigint.hpp"
#include "wordlab/pc_group.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

using ElementIndex = std::uint32_t;

inline constexpr std::uint64_t kMaxGroupOrder = 1'000'000;
/// PC groups up to this order get a materialized multiplication table.
inline constexpr std::uint64_t kTableThreshold = 1024;
/// Largest order for which a Cayley table is built from scratch.
inline constexpr std::uint64_t kMaxCayleyOrder = 4096;

struct ValidationOptions {
  /// Check associativity on all triples regardless of order.
  bool full_associativity = false;
};

/// Validated multiplication table.
class CayleyGroup {
 public:
  /// Throws InvalidGroup unless `table` is an associative Latin square with
  /// identity 0. Associativity is exhaustive up to order 64, sampled on 10^5
  /// random triples above unless `options.full_associativity` is set.
  CayleyGroup(std::string name, std::uint32_t order, std::vector<ElementIndex> table,
              ValidationOptions options = {});

  const std::string& name() const noexcept { return name_; }
  std::uint32_t order() const noexcept { return order_; }
  const std::vector<ElementIndex>& table() const noexcept { return table_; }
  const std::vector<ElementIndex>& inverses() const noexcept { return inverses_; }

 private:
  std::string name_;
  std::uint32_t order_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverses_;
};

/// Element handle tagged with its owning group.
struct Element {
  ElementIndex index = 0;
  std::uint64_t owner = 0;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Sorted element set closed under products and inverses.
struct Subgroup {
  std::uint64_t owner = 0;
  std::vector<ElementIndex> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(ElementIndex g) const;
  bool is_subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

struct ConjugacyClasses {
  std::vector<std::vector<ElementIndex>> classes;  // each sorted; ordered by representative
  std::vector<ElementIndex> representatives;       // minimal element of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;             // element -> class position

  std::size_t count() const noexcept { return classes.size(); }
};

class FiniteGroup {
 public:
  using Labeler = std::function<std::string(ElementIndex)>;

  explicit FiniteGroup(CayleyGroup group);
  explicit FiniteGroup(PcClass2Group group, ValidationOptions options = {});

  const std::string& name() const noexcept;
  std::uint64_t uid() const noexcept;
  std::uint32_t order() const noexcept { return order_; }

  ElementIndex multiply(ElementIndex a, ElementIndex b) const {
    if (table_ != nullptr) return table_[std::size_t{a} * order_ + b];
    return multiply_slow(a, b);
  }
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  ElementIndex power(ElementIndex a, std::uint64_t e) const;
  /// a^e for any integer e.
  ElementIndex power(ElementIndex a, const BigInt& e) const;
  /// [a,b] = a^-1 b^-1 a b
  ElementIndex commutator(ElementIndex a, ElementIndex b) const;
  ElementIndex conjugate(ElementIndex a, ElementIndex by) const;

  Element element(ElementIndex i) const;
  std::string label(ElementIndex i) const;
  /// Element with the given label; throws DomainError if none.
  ElementIndex find_label(const std::string& label) const;

  const CayleyGroup* cayley() const noexcept;
  const PcClass2Group* pc() const noexcept;
  bool has_table() const noexcept { return table_ != nullptr; }

  /// Copy with a new display name and/or element labels.
  FiniteGroup renamed(std::string name, Labeler labeler = nullptr) const;

  // Structure, computed once per group and shared by copies.
  const std::vector<ElementIndex>& generators() const;
  const Subgroup& center() const;
  const Subgroup& derived_subgroup() const;
  const ConjugacyClasses& conjugacy_classes() const;
  const std::vector<std::uint64_t>& element_orders() const;
  std::uint64_t exponent() const;
  bool is_abelian() const;
  /// derived subgroup contained in the center
  bool is_class_at_most_2() const;
  /// Every set of p-power-order elements is a subgroup.
  bool is_nilpotent() const;
  /// Prime p if |G| = p^n (n >= 1), else nullopt.
  std::optional<std::uint64_t> p_group_prime() const;

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<Impl> impl);
  ElementIndex multiply_slow(ElementIndex a, ElementIndex b) const;
  void bind();

  std::shared_ptr<Impl> impl_;
  const ElementIndex* table_ = nullptr;
  const ElementIndex* inverses_ = nullptr;
  std::uint32_t order_ = 0;
};

/// Subgroup generated by `gens`.
Subgroup closure(const FiniteGroup& g, std::span<const ElementIndex> gens);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// g -> g^e for every element.
std::vector<ElementIndex> power_map(const FiniteGroup& g, const BigInt& e);

/// Components ordered so that (h, k) has index h * |K| + k.
FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k);

/// One subgroup per prime dividing |G| (ascending). Throws DomainError if G
/// is not nilpotent.
struct SylowSubgroup {
  std::uint64_t prime;
  Subgroup subgroup;
};
std::vector<SylowSubgroup> sylow_decomposition(const FiniteGroup& g);

/// Left-to-right product of letter powers at the given tuple.
Element evaluate_word(const FiniteGroup& g, const Word& w, std::span<const Element> tuple);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Materialized multiplication table (order <= kMaxCayleyOrder).
CayleyGroup to_cayley(const FiniteGroup& g);

}  // namespace wordlab
