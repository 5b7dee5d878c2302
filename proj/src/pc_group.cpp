#include "wordlab/pc_group.hpp"

#include <algorithm>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

bool is_trivial(const std::vector<std::uint32_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t e) { return e == 0; });
}

}  // namespace

PcPresentation::PcPresentation(std::string name_, std::vector<std::uint32_t> orders_)
    : name(std::move(name_)),
      orders(std::move(orders_)),
      powers(orders.size()),
      commutators(orders.size(), std::vector<std::vector<std::uint32_t>>(orders.size())) {}

void PcPresentation::set_commutator(std::size_t i, std::size_t j, std::vector<std::uint32_t> v) {
  if (i >= j) throw DomainError("commutator relations are keyed by i < j");
  commutators.at(i).at(j) = std::move(v);
}

PcClass2Group::PcClass2Group(PcPresentation presentation) : pres_(std::move(presentation)) {
  const std::size_t n = pres_.size();
  if (pres_.powers.size() != n || pres_.commutators.size() != n)
    throw InvalidGroup("presentation tables do not match generator count");

  radix_.assign(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    if (pres_.orders[i] < 2) throw InvalidGroup("relative orders must be >= 2");
    radix_[i] = order_;
    if (order_ > (std::uint64_t{1} << 40) / pres_.orders[i])
      throw InvalidGroup("presentation order too large");
    order_ *= pres_.orders[i];
  }

  auto check_vector = [&](const std::vector<std::uint32_t>& v, const std::string& what) {
    if (v.empty()) return;
    if (v.size() != n) throw InvalidGroup(what + ": exponent vector has wrong length");
    for (std::size_t l = 0; l < n; ++l)
      if (v[l] >= pres_.orders[l]) throw InvalidGroup(what + ": exponent out of range");
  };

  for (std::size_t i = 0; i < n; ++i) {
    check_vector(pres_.powers[i], "power relation " + std::to_string(i + 1));
    if (pres_.commutators[i].size() != n) throw InvalidGroup("commutator table is ragged");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = pres_.commutators[i][j];
      if (j <= i && !c.empty() && !is_trivial(c))
        throw InvalidGroup("commutator relations must be keyed by i < j");
      check_vector(c, "commutator relation " + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
    const auto& p = pres_.powers[i];
    for (std::size_t l = 0; l <= i && !p.empty(); ++l)
      if (p[l] != 0)
        throw InvalidGroup("power relation " + std::to_string(i + 1) +
                           " must be supported on later generators");
  }

  central_.assign(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!pres_.commutators[i][j].empty() && !is_trivial(pres_.commutators[i][j]))
        central_[i] = central_[j] = false;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = pres_.commutators[i][j];
      for (std::size_t l = 0; l < c.size(); ++l)
        if (c[l] != 0 && !central_[l])
          throw InvalidGroup("commutator [g" + std::to_string(i + 1) + ",g" + std::to_string(j + 1) +
                             "] is not supported on central generators");
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (!central_[i]) continue;
    const auto& p = pres_.powers[i];
    for (std::size_t l = 0; l < p.size(); ++l)
      if (p[l] != 0 && !central_[l])
        throw InvalidGroup("power of central generator g" + std::to_string(i + 1) +
                           " leaves the central generators");
  }

  // Inverses of commutator values; these live among central generators, where
  // collection never needs a commutator correction.
  inverse_commutators_.assign(n, std::vector<std::vector<std::uint32_t>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = pres_.commutators[i][j];
      if (c.empty() || is_trivial(c)) continue;
      std::vector<std::uint32_t> power = c;
      std::vector<std::uint32_t> previous(n, 0);
      std::uint64_t steps = 1;
      while (!is_trivial(power)) {
        previous = power;
        multiply_into(power, c);
        if (++steps > order_) throw InvalidGroup("commutator value has no finite order");
      }
      inverse_commutators_[i][j] = previous;
    }

  generator_inverses_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = n; i-- > 0;) {
    std::vector<std::uint32_t> state(n, 0);
    state[i] = pres_.orders[i] - 1;
    const auto& p = pres_.powers[i];
    if (!p.empty() && !is_trivial(p)) {
      std::vector<std::uint32_t> p_inv(n, 0);
      for (std::size_t l = n; l-- > i + 1;)
        if (p[l] != 0) multiply_into(p_inv, power_vector(generator_inverses_[l], p[l]));
      multiply_into(state, p_inv);
    }
    generator_inverses_[i] = std::move(state);
  }
}

std::vector<std::uint32_t> PcClass2Group::decode(std::uint64_t index) const {
  const std::size_t n = pres_.size();
  std::vector<std::uint32_t> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = static_cast<std::uint32_t>(index / radix_[i]);
    index %= radix_[i];
  }
  return e;
}

std::uint64_t PcClass2Group::encode(const std::vector<std::uint32_t>& exponents) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) idx += exponents[i] * radix_[i];
  return idx;
}

std::uint64_t PcClass2Group::generator(std::size_t i) const { return radix_.at(i); }

std::vector<std::uint32_t> PcClass2Group::power_vector(const std::vector<std::uint32_t>& v,
                                                       std::uint64_t e) const {
  std::vector<std::uint32_t> result(pres_.size(), 0);
  std::vector<std::uint32_t> base = v;
  while (e > 0) {
    if (e & 1U) multiply_into(result, base);
    e >>= 1U;
    if (e > 0) {
      std::vector<std::uint32_t> sq = base;
      multiply_into(sq, base);
      base = std::move(sq);
    }
  }
  return result;
}

void PcClass2Group::multiply_central(std::vector<std::uint32_t>& state,
                                     const std::vector<std::uint32_t>& c,
                                     std::uint64_t times) const {
  if (times == 1) {
    multiply_into(state, c);
    return;
  }
  multiply_into(state, power_vector(c, times));
}

void PcClass2Group::multiply_generator(std::vector<std::uint32_t>& state, std::size_t j,
                                       std::uint32_t times) const {
  const std::size_t n = pres_.size();
  // Moving g_j^times left across g_k^{e_k} (k > j) leaves [g_j,g_k]^{-e_k*times}.
  std::vector<std::pair<std::size_t, std::uint64_t>> corrections;
  std::vector<std::uint32_t> suffix;
  bool has_suffix = false;
  for (std::size_t k = j + 1; k < n; ++k) {
    if (state[k] == 0) continue;
    if (!inverse_commutators_[j][k].empty())
      corrections.emplace_back(k, std::uint64_t{state[k]} * times);
    if (!has_suffix) {
      suffix.assign(n, 0);
      has_suffix = true;
    }
    suffix[k] = state[k];
    state[k] = 0;
  }

  const std::uint32_t next = state[j] + times;
  if (next >= pres_.orders[j]) {
    state[j] = next - pres_.orders[j];
    if (!pres_.powers[j].empty()) multiply_into(state, pres_.powers[j]);
  } else {
    state[j] = next;
  }

  if (has_suffix)
    for (std::size_t k = j + 1; k < n; ++k)
      if (suffix[k] != 0) multiply_generator(state, k, suffix[k]);

  for (const auto& [k, count] : corrections)
    multiply_central(state, inverse_commutators_[j][k], count);
}

void PcClass2Group::multiply_into(std::vector<std::uint32_t>& state,
                                  const std::vector<std::uint32_t>& rhs) const {
  for (std::size_t j = 0; j < rhs.size(); ++j)
    if (rhs[j] != 0) multiply_generator(state, j, rhs[j]);
}

std::uint64_t PcClass2Group::multiply(std::uint64_t a, std::uint64_t b) const {
  std::vector<std::uint32_t> state = decode(a);
  multiply_into(state, decode(b));
  return encode(state);
}

std::uint64_t PcClass2Group::inverse(std::uint64_t a) const {
  const std::size_t n = pres_.size();
  std::vector<std::uint32_t> e = decode(a);
  std::vector<std::uint32_t> state(n, 0);
  for (std::size_t l = n; l-- > 0;)
    if (e[l] != 0) multiply_into(state, power_vector(generator_inverses_[l], e[l]));
  return encode(state);
}

}  // namespace wordlab
