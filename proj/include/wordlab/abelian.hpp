#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wordlab/bigint.hpp"
#include "wordlab/group.hpp"

namespace wordlab {

/// Explicit isomorphism from an abelian subgroup to Z/m_1 + ... + Z/m_t
/// with m_1 | m_2 | ... | m_t, m_1 > 1.
struct AbelianDecomposition {
  std::vector<std::uint64_t> invariants;
  std::vector<ElementIndex> elements;               // sorted, as in the subgroup
  std::vector<std::vector<std::uint64_t>> coordinates;  // aligned with `elements`

  const std::vector<std::uint64_t>& coordinates_of(ElementIndex g) const;
};

/// Throws DomainError if `h` is not abelian.
AbelianDecomposition decompose_abelian(const FiniteGroup& g, const Subgroup& h);

/// Number of (z_1..z_k) in Z/m_1 + ... + Z/m_t with sum_i a_i z_i = target:
/// per cyclic factor m, m^{k-1} * gcd(a_1..a_k, m) if that gcd divides the
/// target coordinate, else 0.
BigInt count_abelian_power_product(std::span<const std::uint64_t> invariants,
                                   std::span<const BigInt> a,
                                   std::span<const std::uint64_t> target);

}  // namespace wordlab
