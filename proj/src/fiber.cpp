#include "wordlab/fiber.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include <omp.h>

#include "wordlab/abelian.hpp"
#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

int resolve_workers(unsigned workers) {
  return workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);
}

void check_budget(std::uint64_t required, std::uint64_t budget) {
  if (required > budget) throw BudgetExceeded(required, budget);
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) {
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

// Histogram of w over reps^k (reps = all elements for brute force). The first
// coordinate is split statically across threads; every thread owns its own
// histogram and they are summed afterwards.
std::vector<std::uint64_t> histogram(const FiniteGroup& g, const CompiledWord& cw,
                                     const std::vector<ElementIndex>& reps, int workers) {
  const std::size_t n = g.order();
  const std::size_t k = cw.arity();
  if (k == 0) {
    std::vector<std::uint64_t> h(n, 0);
    h[cw.evaluate(nullptr)] = 1;
    return h;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers));

#pragma omp parallel num_threads(workers)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
    local.assign(n, 0);
    std::vector<std::size_t> pos(k, 0);
    std::vector<ElementIndex> tuple(k, 0);
#pragma omp for schedule(static)
    for (std::ptrdiff_t first = 0; first < static_cast<std::ptrdiff_t>(m); ++first) {
      std::fill(pos.begin(), pos.end(), 0);
      for (std::size_t i = 1; i < k; ++i) tuple[i] = reps[0];
      tuple[0] = reps[static_cast<std::size_t>(first)];
      while (true) {
        ++local[cw.evaluate(tuple.data())];
        std::size_t i = k;
        while (--i >= 1) {
          if (++pos[i] < m) {
            tuple[i] = reps[pos[i]];
            break;
          }
          pos[i] = 0;
          tuple[i] = reps[0];
        }
        if (i == 0) break;
      }
    }
  }
  std::vector<std::uint64_t> total(n, 0);
  for (const auto& local : partial)
    for (std::size_t i = 0; i < local.size(); ++i) total[i] += local[i];
  return total;
}

std::vector<ElementIndex> all_elements(const FiniteGroup& g) {
  std::vector<ElementIndex> v(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) v[i] = i;
  return v;
}

}  // namespace

FiberDistribution::FiberDistribution(FiniteGroup group, std::size_t arity, std::vector<BigInt> counts)
    : group_(std::move(group)), arity_(arity), counts_(std::move(counts)) {
  if (counts_.size() != group_.order()) throw DomainError("distribution size does not match group order");
}

BigInt FiberDistribution::total() const { return big_pow(BigInt(group_.order()), arity_); }

std::vector<ElementIndex> FiberDistribution::support() const {
  std::vector<ElementIndex> s;
  for (ElementIndex i = 0; i < counts_.size(); ++i)
    if (counts_[i] != 0) s.push_back(i);
  return s;
}

long double FiberDistribution::probability(ElementIndex g) const {
  return counts_.at(g).convert_to<long double>() / total().convert_to<long double>();
}

bool FiberDistribution::same_counts(const FiberDistribution& other) const {
  return group_.uid() == other.group_.uid() && arity_ == other.arity_ && counts_ == other.counts_;
}

CompiledWord::CompiledWord(const FiniteGroup& g, const Word& w) : group_(g), arity_(w.arity()) {
  std::map<std::uint64_t, std::ptrdiff_t> table_of;
  for (const auto& l : w.letters()) {
    const std::uint64_t r = mod_u64(l.exponent, g.order());
    std::ptrdiff_t t = -1;
    if (r != 1) {
      auto it = table_of.find(r);
      if (it == table_of.end()) {
        std::vector<ElementIndex> table(g.order());
        for (ElementIndex x = 0; x < g.order(); ++x) table[x] = g.power(x, r);
        it = table_of.emplace(r, static_cast<std::ptrdiff_t>(tables_.size())).first;
        tables_.push_back(std::move(table));
      }
      t = it->second;
    }
    steps_.push_back(Step{l.generator - 1, t});
  }
}

std::uint64_t saturating_power(std::uint64_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && r > std::numeric_limits<std::uint64_t>::max() / n)
      return std::numeric_limits<std::uint64_t>::max();
    r *= n;
  }
  return r;
}

FiberDistribution count_brute_force_serial(const FiniteGroup& g, const Word& w, std::uint64_t budget) {
  const std::size_t k = w.arity();
  const std::uint64_t n = g.order();
  const std::uint64_t required = saturating_power(n, k);
  check_budget(required, budget);
  CompiledWord cw(g, w);
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<ElementIndex> tuple(k, 0);
  while (true) {
    ++counts[cw.evaluate(tuple.data())];
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++tuple[i] < n) break;
      tuple[i] = 0;
      if (i == 0) {
        i = k + 1;
        break;
      }
    }
    if (k == 0 || i == k + 1) break;
  }
  FiberDistribution d(g, k, to_big(counts));
  d.word_text = render(w);
  d.method = "brute-serial";
  d.evaluations = required;
  return d;
}

FiberDistribution count_brute_force(const FiniteGroup& g, const Word& w, CountOptions options) {
  const std::size_t k = w.arity();
  const std::uint64_t required = saturating_power(g.order(), k);
  check_budget(required, options.budget);
  CompiledWord cw(g, w);
  auto counts = histogram(g, cw, all_elements(g), resolve_workers(options.workers));
  FiberDistribution d(g, k, to_big(counts));
  d.word_text = render(w);
  d.method = "brute";
  d.evaluations = required;
  return d;
}

FiberDistribution count_central_quotient(const FiniteGroup& g, const Word& w, CountOptions options) {
  if (!g.is_class_at_most_2())
    throw DomainError(g.name() + " has nilpotency class > 2; central-quotient counting needs class <= 2");
  const Subgroup& z = g.center();
  const std::size_t k = w.arity();

  std::vector<ElementIndex> reps;
  {
    std::vector<char> covered(g.order(), 0);
    for (ElementIndex x = 0; x < g.order(); ++x) {
      if (covered[x]) continue;
      reps.push_back(x);
      for (auto c : z.elements) covered[g.multiply(x, c)] = 1;
    }
  }
  const std::uint64_t required = saturating_power(reps.size(), k);
  check_budget(required, options.budget);

  CompiledWord cw(g, w);
  const auto outer = histogram(g, cw, reps, resolve_workers(options.workers));

  const AbelianDecomposition dec = decompose_abelian(g, z);
  const Class2Signature sig = class2_signature(w);
  std::vector<BigInt> central(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    central[i] = count_abelian_power_product(dec.invariants, sig.a, dec.coordinates[i]);

  std::vector<BigInt> counts(g.order());
  for (ElementIndex c = 0; c < g.order(); ++c) {
    if (outer[c] == 0) continue;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (central[i] != 0) counts[g.multiply(c, z.elements[i])] += central[i] * outer[c];
  }
  FiberDistribution d(g, k, std::move(counts));
  d.word_text = render(w);
  d.method = "central";
  d.evaluations = required;
  return d;
}

FiberDistribution convolve_disjoint(const FiberDistribution& d1, const FiberDistribution& d2) {
  if (d1.group().uid() != d2.group().uid()) throw DomainError("convolution needs distributions over the same group");
  const FiniteGroup& g = d1.group();
  std::vector<BigInt> counts(g.order());
  const auto s1 = d1.support();
  const auto s2 = d2.support();
  for (auto h : s1)
    for (auto h2 : s2) counts[g.multiply(h, h2)] += d1.count(h) * d2.count(h2);
  FiberDistribution d(g, d1.arity() + d2.arity(), std::move(counts));
  d.word_text = d1.word_text + " * " + d2.word_text;
  d.method = "convolve(" + d1.method + "," + d2.method + ")";
  d.evaluations = d1.evaluations + d2.evaluations;
  return d;
}

Word compress_variables(const Word& w) {
  std::map<std::size_t, std::size_t> rename;
  std::vector<Letter> letters;
  for (const auto& l : w.letters()) {
    auto it = rename.find(l.generator);
    if (it == rename.end()) it = rename.emplace(l.generator, rename.size() + 1).first;
    letters.push_back(Letter{it->second, l.exponent});
  }
  return Word(rename.size(), std::move(letters));
}

std::optional<std::pair<Word, Word>> split_disjoint(const Word& w) {
  const auto& letters = w.letters();
  const std::size_t len = letters.size();
  if (len < 2) return std::nullopt;
  // last[v] = last position of variable v; a prefix [0, cut) is closed when
  // no variable in it occurs at or after `cut`.
  std::map<std::size_t, std::size_t> last;
  for (std::size_t i = 0; i < len; ++i) last[letters[i].generator] = i;
  std::size_t reach = 0;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    reach = std::max(reach, last[letters[i].generator]);
    if (reach == i) {
      std::vector<Letter> head(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(i + 1));
      std::vector<Letter> tail(letters.begin() + static_cast<std::ptrdiff_t>(i + 1), letters.end());
      return std::make_pair(compress_variables(Word(w.arity(), std::move(head))),
                            compress_variables(Word(w.arity(), std::move(tail))));
    }
  }
  return std::nullopt;
}

FiberDistribution count_auto(const FiniteGroup& g, const Word& w, CountOptions options) {
  const std::size_t used = used_generators(w).size();
  if (used < w.arity()) {
    FiberDistribution inner = count_auto(g, compress_variables(w), options);
    const std::size_t pad = w.arity() - used;
    const BigInt factor = big_pow(BigInt(g.order()), pad);
    std::vector<BigInt> counts = inner.counts();
    for (auto& c : counts) c *= factor;
    FiberDistribution d(g, w.arity(), std::move(counts));
    d.word_text = render(w);
    d.method = "pad(" + inner.method + ")";
    d.evaluations = inner.evaluations;
    return d;
  }
  if (auto parts = split_disjoint(w)) {
    FiberDistribution d = convolve_disjoint(count_auto(g, parts->first, options),
                                            count_auto(g, parts->second, options));
    d.word_text = render(w);
    return d;
  }
  if (g.is_class_at_most_2()) return count_central_quotient(g, w, options);
  return count_brute_force(g, w, options);
}

CountMethod parse_count_method(const std::string& name) {
  if (name == "auto") return CountMethod::automatic;
  if (name == "brute") return CountMethod::brute;
  if (name == "central") return CountMethod::central;
  if (name == "convolve") return CountMethod::convolve;
  if (name == "frobenius") return CountMethod::frobenius;
  throw DomainError("unknown method '" + name + "' (expected auto, brute, central, convolve, frobenius)");
}

DefinedWordMap::DefinedWordMap(FiniteGroup g, Word w, std::map<std::size_t, ElementIndex> fixed)
    : group_(std::move(g)), word_(std::move(w)), fixed_(std::move(fixed)), compiled_(group_, word_) {
  for (const auto& [pos, value] : fixed_) {
    if (pos < 1 || pos > word_.arity()) throw DomainError("fixed position " + std::to_string(pos) + " out of range");
    if (value >= group_.order()) throw DomainError("fixed value is not an element of " + group_.name());
  }
  for (std::size_t i = 1; i <= word_.arity(); ++i)
    if (!fixed_.count(i)) free_.push_back(i);
}

ElementIndex DefinedWordMap::evaluate(std::span<const ElementIndex> free_values) const {
  if (free_values.size() != free_.size()) throw DomainError("wrong number of free values");
  std::vector<ElementIndex> tuple(word_.arity(), 0);
  for (const auto& [pos, value] : fixed_) tuple[pos - 1] = value;
  for (std::size_t i = 0; i < free_.size(); ++i) tuple[free_[i] - 1] = free_values[i];
  return compiled_.evaluate(tuple.data());
}

HomomorphismCheck is_homomorphism(const DefinedWordMap& map, std::uint64_t budget) {
  const FiniteGroup& g = map.group();
  const std::size_t f = map.free_positions().size();
  const std::uint64_t tuples = saturating_power(g.order(), f);
  const std::uint64_t required = saturating_power(tuples, 2);
  check_budget(required, budget);

  // Tuples in lexicographic order; tuple t has index sum t_i n^{f-1-i}.
  auto decode = [&](std::uint64_t idx, std::vector<ElementIndex>& out) {
    for (std::size_t i = f; i-- > 0;) {
      out[i] = static_cast<ElementIndex>(idx % g.order());
      idx /= g.order();
    }
  };
  std::vector<ElementIndex> values(tuples);
  std::vector<ElementIndex> u(f), v(f), uv(f);
  for (std::uint64_t i = 0; i < tuples; ++i) {
    decode(i, u);
    values[i] = map.evaluate(u);
  }
  HomomorphismCheck out;
  out.is_homomorphism = true;
  for (std::uint64_t i = 0; i < tuples && out.is_homomorphism; ++i) {
    decode(i, u);
    for (std::uint64_t j = 0; j < tuples; ++j) {
      decode(j, v);
      std::uint64_t idx = 0;
      for (std::size_t q = 0; q < f; ++q) idx = idx * g.order() + g.multiply(u[q], v[q]);
      if (values[idx] != g.multiply(values[i], values[j])) {
        out.is_homomorphism = false;
        break;
      }
    }
  }
  std::set<ElementIndex> image(values.begin(), values.end());
  out.image.assign(image.begin(), image.end());
  const Subgroup& z = g.center();
  out.image_in_center = std::all_of(out.image.begin(), out.image.end(), [&](ElementIndex x) { return z.contains(x); });
  out.evaluations = required;
  return out;
}

nlohmann::ordered_json export_json(const FiberDistribution& d) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (auto g : d.support()) counts[d.group().label(g)] = to_decimal(d.count(g));
  nlohmann::ordered_json doc;
  doc["group"] = d.group().name();
  doc["word"] = d.word_text;
  doc["arity"] = d.arity();
  doc["counts"] = std::move(counts);
  return doc;
}

std::string export_csv(const FiberDistribution& d) {
  std::string out = "element,count\n";
  for (auto g : d.support()) {
    std::string label = d.group().label(g);
    if (label.find_first_of(",\"") != std::string::npos) label = "\"" + label + "\"";
    out += label + "," + to_decimal(d.count(g)) + "\n";
  }
  return out;
}

std::string export_table(const FiberDistribution& d) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t w1 = std::string("element").size(), w2 = std::string("count").size();
  for (auto g : d.support()) {
    rows.emplace_back(d.group().label(g), to_decimal(d.count(g)));
    w1 = std::max(w1, rows.back().first.size());
    w2 = std::max(w2, rows.back().second.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w1)) << "element" << "  " << std::right
     << std::setw(static_cast<int>(w2)) << "count" << "\n";
  for (const auto& [a, b] : rows)
    os << std::left << std::setw(static_cast<int>(w1)) << a << "  " << std::right
       << std::setw(static_cast<int>(w2)) << b << "\n";
  return os.str();
}

}  // namespace wordlab
