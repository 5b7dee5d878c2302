#pragma once

// Exact fiber sizes N_w(g) = #{(g_1..g_k) : w(g_1..g_k) = g}.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordlab/bigint.hpp"
#include "wordlab/group.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct CountOptions {
  /// Maximum number of word evaluations.
  std::uint64_t budget = kDefaultBudget;
  /// OpenMP threads for the parallel kernels; 0 = runtime default.
  unsigned workers = 0;
};

class FiberDistribution {
 public:
  FiberDistribution(FiniteGroup group, std::size_t arity, std::vector<BigInt> counts);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& count(ElementIndex g) const { return counts_.at(g); }
  /// |G|^arity
  BigInt total() const;
  /// G_w: elements with nonzero count, ascending.
  std::vector<ElementIndex> support() const;
  long double probability(ElementIndex g) const;

  std::string word_text;      // rendered word, for export
  std::string method;         // counting route taken
  std::uint64_t evaluations = 0;

  /// Same counts and arity over the same group.
  bool same_counts(const FiberDistribution& other) const;

 private:
  FiniteGroup group_;
  std::size_t arity_;
  std::vector<BigInt> counts_;
};

/// Word specialised to one group: exponents reduced mod |G| with power tables.
class CompiledWord {
 public:
  CompiledWord(const FiniteGroup& g, const Word& w);

  std::size_t arity() const noexcept { return arity_; }
  ElementIndex evaluate(const ElementIndex* tuple) const {
    ElementIndex acc = 0;
    for (const auto& step : steps_) {
      const ElementIndex x = tuple[step.variable];
      acc = group_.multiply(acc, step.table < 0 ? x : tables_[static_cast<std::size_t>(step.table)][x]);
    }
    return acc;
  }

 private:
  struct Step {
    std::size_t variable;
    std::ptrdiff_t table;  // -1 = exponent 1
  };
  FiniteGroup group_;
  std::size_t arity_;
  std::vector<Step> steps_;
  std::vector<std::vector<ElementIndex>> tables_;
};

/// n^k, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t n, std::size_t k);

/// Serial reference enumeration of G^k in lexicographic order.
FiberDistribution count_brute_force_serial(const FiniteGroup& g, const Word& w,
                                           std::uint64_t budget = kDefaultBudget);

/// OpenMP kernel: the first coordinate is partitioned across workers, partial
/// counts are merged by addition.
FiberDistribution count_brute_force(const FiniteGroup& g, const Word& w, CountOptions options = {});

/// Class <= 2 only. Each x_i is split as t_i z_i with t_i the minimal
/// representative of x_i Z(G); then w(x) = w(t) * prod z_i^{a_i}, so only
/// |G/Z|^k evaluations are needed and the central factor is counted by
/// count_abelian_power_product on Z(G).
FiberDistribution count_central_quotient(const FiniteGroup& g, const Word& w, CountOptions options = {});

/// N_{uv}(g) = sum_h N_u(h) N_v(h^-1 g) for words on disjoint variables.
FiberDistribution convolve_disjoint(const FiberDistribution& d1, const FiberDistribution& d2);

/// If w = u v with u and v on disjoint variable sets, returns (u, v) with
/// variables renumbered from 1 in order of first use.
std::optional<std::pair<Word, Word>> split_disjoint(const Word& w);

/// Renumbers the used variables of w to 1..u in order of first use.
Word compress_variables(const Word& w);

/// Padding, then disjoint splitting (convolution), then the central-quotient
/// route on class <= 2 groups, else brute force.
FiberDistribution count_auto(const FiniteGroup& g, const Word& w, CountOptions options = {});

enum class CountMethod { automatic, brute, central, convolve, frobenius };
CountMethod parse_count_method(const std::string& name);

/// A word map with some arguments frozen at group elements.
class DefinedWordMap {
 public:
  /// `fixed` maps 1-based positions to elements.
  DefinedWordMap(FiniteGroup g, Word w, std::map<std::size_t, ElementIndex> fixed);

  const FiniteGroup& group() const noexcept { return group_; }
  const Word& word() const noexcept { return word_; }
  const std::vector<std::size_t>& free_positions() const noexcept { return free_; }
  const std::map<std::size_t, ElementIndex>& fixed() const noexcept { return fixed_; }

  ElementIndex evaluate(std::span<const ElementIndex> free_values) const;

 private:
  FiniteGroup group_;
  Word word_;
  std::map<std::size_t, ElementIndex> fixed_;
  std::vector<std::size_t> free_;
  CompiledWord compiled_;
};

struct HomomorphismCheck {
  bool is_homomorphism = false;
  bool image_in_center = false;
  std::vector<ElementIndex> image;
  std::uint64_t evaluations = 0;
};

/// Exhaustive f(uv) = f(u) f(v) over all pairs of free tuples.
HomomorphismCheck is_homomorphism(const DefinedWordMap& map, std::uint64_t budget = kDefaultBudget);

/// {"group","word","arity","counts":{label: "decimal"}} over the support.
nlohmann::ordered_json export_json(const FiberDistribution& d);
std::string export_csv(const FiberDistribution& d);
std::string export_table(const FiberDistribution& d);

}  // namespace wordlab
