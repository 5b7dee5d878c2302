#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wordlab {

/// Power-commutator presentation of a group of nilpotency class <= 2.
///
/// Generators g_1..g_n (stored 0-based) with relative orders r_i. Every
/// element has a unique normal form g_1^{e_1} ... g_n^{e_n}, 0 <= e_i < r_i.
/// Relations: g_i^{r_i} = powers[i] (supported on generators after i) and
/// [g_i, g_j] = commutators[i][j] for i < j (supported on central generators).
struct PcPresentation {
  std::string name;
  std::vector<std::uint32_t> orders;
  std::vector<std::vector<std::uint32_t>> powers;                    // n vectors, empty = trivial
  std::vector<std::vector<std::vector<std::uint32_t>>> commutators;  // [i][j], i<j, empty = trivial

  explicit PcPresentation(std::string name_ = {}, std::vector<std::uint32_t> orders_ = {});

  std::size_t size() const noexcept { return orders.size(); }
  void set_power(std::size_t i, std::vector<std::uint32_t> v) { powers.at(i) = std::move(v); }
  void set_commutator(std::size_t i, std::size_t j, std::vector<std::uint32_t> v);
};

/// Collection-based multiplication on a validated presentation. Elements are
/// encoded as mixed-radix integers with g_1 most significant, so index 0 is
/// the identity.
class PcClass2Group {
 public:
  /// Throws InvalidGroup on malformed or non-central relations.
  explicit PcClass2Group(PcPresentation presentation);

  const PcPresentation& presentation() const noexcept { return pres_; }
  std::uint64_t order() const noexcept { return order_; }
  std::size_t generator_count() const noexcept { return pres_.size(); }
  bool is_central_generator(std::size_t i) const { return central_.at(i); }

  std::vector<std::uint32_t> decode(std::uint64_t index) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& exponents) const;

  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inverse(std::uint64_t a) const;
  std::uint64_t generator(std::size_t i) const;

  void multiply_into(std::vector<std::uint32_t>& state, const std::vector<std::uint32_t>& rhs) const;

 private:
  void multiply_generator(std::vector<std::uint32_t>& state, std::size_t j, std::uint32_t times) const;
  std::vector<std::uint32_t> power_vector(const std::vector<std::uint32_t>& v, std::uint64_t e) const;
  void multiply_central(std::vector<std::uint32_t>& state, const std::vector<std::uint32_t>& c,
                        std::uint64_t times) const;

  PcPresentation pres_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> radix_;  // place values
  std::vector<bool> central_;
  // inverse_commutators_[i][j] = [g_i, g_j]^{-1}, i < j
  std::vector<std::vector<std::vector<std::uint32_t>>> inverse_commutators_;
  std::vector<std::vector<std::uint32_t>> generator_inverses_;
};

}  // namespace wordlab
