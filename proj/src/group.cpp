#include "wordlab/group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <mutex>
#include <random>
#include <unordered_map>

#include "detail.hpp"
#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

std::uint64_t next_uid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

template <class Mul>
void check_associativity(std::uint64_t n, Mul&& mul, std::uint64_t exhaustive_limit,
                         std::uint64_t samples, bool full) {
  auto fail = [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    throw InvalidGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                       "," + std::to_string(c) + ")");
  };
  if (full || n <= exhaustive_limit) {
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        const auto ab = mul(a, b);
        for (std::uint64_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) fail(a, b, c);
      }
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
  }
}

}  // namespace

struct FiniteGroup::Impl {
  std::string name;
  std::uint64_t uid = 0;
  std::uint32_t order = 0;
  std::shared_ptr<const CayleyGroup> cayley;
  std::shared_ptr<const PcClass2Group> pc;
  std::shared_ptr<const std::vector<ElementIndex>> table;
  std::shared_ptr<const std::vector<ElementIndex>> inverses;
  Labeler labeler;
  std::shared_ptr<detail::StructureCache> cache = std::make_shared<detail::StructureCache>();
};

CayleyGroup::CayleyGroup(std::string name, std::uint32_t order, std::vector<ElementIndex> table,
                         ValidationOptions options)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  const std::uint64_t n = order_;
  if (n == 0) throw InvalidGroup("order must be positive");
  if (n > kMaxGroupOrder) throw InvalidGroup("order exceeds supported size");
  if (table_.size() != n * n) throw InvalidGroup("table must be order x order");
  for (auto v : table_)
    if (v >= n) throw InvalidGroup("table entry out of range");
  for (std::uint64_t i = 0; i < n; ++i) {
    if (table_[i] != i || table_[i * n] != i)
      throw InvalidGroup("element 0 is not the identity (row/column " + std::to_string(i) + ")");
  }
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    ++stamp;
    for (std::uint64_t j = 0; j < n; ++j) {
      auto& s = seen[table_[i * n + j]];
      if (s == stamp) throw InvalidGroup("not a Latin square: repeated entry in row " + std::to_string(i));
      s = stamp;
    }
  }
  for (std::uint64_t j = 0; j < n; ++j) {
    ++stamp;
    for (std::uint64_t i = 0; i < n; ++i) {
      auto& s = seen[table_[i * n + j]];
      if (s == stamp)
        throw InvalidGroup("not a Latin square: repeated entry in column " + std::to_string(j));
      s = stamp;
    }
  }
  check_associativity(
      n, [&](std::uint64_t a, std::uint64_t b) { return table_[a * n + b]; }, 64, 100'000,
      options.full_associativity);
  inverses_.assign(n, 0);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      if (table_[i * n + j] == 0) {
        inverses_[i] = static_cast<ElementIndex>(j);
        break;
      }
}

FiniteGroup::FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) { bind(); }

void FiniteGroup::bind() {
  order_ = impl_->order;
  table_ = impl_->table ? impl_->table->data() : nullptr;
  inverses_ = impl_->inverses->data();
}

FiniteGroup::FiniteGroup(CayleyGroup group) {
  auto impl = std::make_shared<Impl>();
  auto shared = std::make_shared<const CayleyGroup>(std::move(group));
  impl->name = shared->name();
  impl->uid = next_uid();
  impl->order = shared->order();
  impl->table = std::shared_ptr<const std::vector<ElementIndex>>(shared, &shared->table());
  impl->inverses = std::shared_ptr<const std::vector<ElementIndex>>(shared, &shared->inverses());
  impl->cayley = std::move(shared);
  impl_ = std::move(impl);
  bind();
}

FiniteGroup::FiniteGroup(PcClass2Group group, ValidationOptions options) {
  auto impl = std::make_shared<Impl>();
  auto shared = std::make_shared<const PcClass2Group>(std::move(group));
  if (shared->order() > kMaxGroupOrder)
    throw InvalidGroup("order " + std::to_string(shared->order()) + " exceeds supported size " +
                       std::to_string(kMaxGroupOrder));
  const std::uint64_t n = shared->order();
  impl->name = shared->presentation().name;
  impl->uid = next_uid();
  impl->order = static_cast<std::uint32_t>(n);
  if (n <= kTableThreshold) {
    auto table = std::make_shared<std::vector<ElementIndex>>(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        (*table)[a * n + b] = static_cast<ElementIndex>(shared->multiply(a, b));
    impl->table = std::move(table);
  }
  auto inverses = std::make_shared<std::vector<ElementIndex>>(n);
  for (std::uint64_t a = 0; a < n; ++a) (*inverses)[a] = static_cast<ElementIndex>(shared->inverse(a));
  impl->inverses = std::move(inverses);
  impl->pc = std::move(shared);
  impl_ = std::move(impl);
  bind();

  check_associativity(
      n, [&](std::uint64_t a, std::uint64_t b) { return multiply(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)); },
      512, 10'000, options.full_associativity);
  for (std::uint64_t a = 0; a < n; ++a)
    if (multiply(static_cast<ElementIndex>(a), inverses_[a]) != 0)
      throw InvalidGroup("presentation is inconsistent: inverse check fails");
  // Central support of the relations already forces class <= 2 in a
  // consistent presentation; confirm it directly where that is cheap.
  if (n <= kTableThreshold && !is_class_at_most_2())
    throw InvalidGroup("presentation does not define a group of class <= 2");
}

ElementIndex FiniteGroup::multiply_slow(ElementIndex a, ElementIndex b) const {
  return static_cast<ElementIndex>(impl_->pc->multiply(a, b));
}

const std::string& FiniteGroup::name() const noexcept { return impl_->name; }
std::uint64_t FiniteGroup::uid() const noexcept { return impl_->uid; }
const CayleyGroup* FiniteGroup::cayley() const noexcept { return impl_->cayley.get(); }
const PcClass2Group* FiniteGroup::pc() const noexcept { return impl_->pc.get(); }

ElementIndex FiniteGroup::power(ElementIndex a, std::uint64_t e) const {
  ElementIndex result = 0;
  ElementIndex base = a;
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

ElementIndex FiniteGroup::power(ElementIndex a, const BigInt& e) const {
  return power(a, mod_u64(e, order_));
}

ElementIndex FiniteGroup::commutator(ElementIndex a, ElementIndex b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

ElementIndex FiniteGroup::conjugate(ElementIndex a, ElementIndex by) const {
  return multiply(multiply(inverse(by), a), by);
}

Element FiniteGroup::element(ElementIndex i) const {
  if (i >= order_) throw DomainError("element index out of range");
  return Element{i, impl_->uid};
}

std::string FiniteGroup::label(ElementIndex i) const {
  if (impl_->labeler) return impl_->labeler(i);
  if (impl_->pc) {
    if (i == 0) return "1";
    const auto e = impl_->pc->decode(i);
    std::string out;
    for (std::size_t l = 0; l < e.size(); ++l) {
      if (e[l] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'g' + std::to_string(l + 1);
      if (e[l] != 1) out += '^' + std::to_string(e[l]);
    }
    return out;
  }
  return std::to_string(i);
}

ElementIndex FiniteGroup::find_label(const std::string& text) const {
  for (ElementIndex i = 0; i < order_; ++i)
    if (label(i) == text) return i;
  throw DomainError("no element labelled '" + text + "' in " + name());
}

FiniteGroup FiniteGroup::renamed(std::string name, Labeler labeler) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  if (labeler) impl->labeler = std::move(labeler);
  return FiniteGroup(std::move(impl));
}

const std::vector<ElementIndex>& FiniteGroup::generators() const {
  auto& c = *impl_->cache;
  std::call_once(c.generators_once, [&] { c.generators = detail::compute_generators(*this); });
  return c.generators;
}

const Subgroup& FiniteGroup::center() const {
  auto& c = *impl_->cache;
  std::call_once(c.center_once, [&] { c.center = detail::compute_center(*this); });
  return c.center;
}

const Subgroup& FiniteGroup::derived_subgroup() const {
  auto& c = *impl_->cache;
  std::call_once(c.derived_once, [&] { c.derived = detail::compute_derived(*this); });
  return c.derived;
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const {
  auto& c = *impl_->cache;
  std::call_once(c.classes_once, [&] { c.classes = detail::compute_classes(*this); });
  return c.classes;
}

const std::vector<std::uint64_t>& FiniteGroup::element_orders() const {
  auto& c = *impl_->cache;
  std::call_once(c.orders_once, [&] { c.orders = detail::compute_element_orders(*this); });
  return c.orders;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto o : element_orders()) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const { return center().size() == order_; }

bool FiniteGroup::is_class_at_most_2() const {
  return derived_subgroup().is_subset_of(center());
}

bool FiniteGroup::is_nilpotent() const {
  auto& c = *impl_->cache;
  std::call_once(c.nilpotent_once, [&] {
    try {
      (void)sylow_decomposition(*this);
      c.nilpotent = true;
    } catch (const DomainError&) {
      c.nilpotent = false;
    }
  });
  return c.nilpotent;
}

std::optional<std::uint64_t> FiniteGroup::p_group_prime() const {
  auto primes = prime_factors(order_);
  if (primes.size() == 1) return primes.front();
  return std::nullopt;
}

}  // namespace wordlab
