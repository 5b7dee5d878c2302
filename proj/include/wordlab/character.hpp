#pragma once

// Complex character tables by class-matrix diagonalization, Fourier
// coefficients of class functions and the two-degree commutator formulas.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordlab/bigint.hpp"
#include "wordlab/fiber.hpp"
#include "wordlab/group.hpp"

namespace wordlab {

inline constexpr std::uint64_t kMaxTableOrder = 2000;
inline constexpr std::size_t kMaxTableClasses = 200;
inline constexpr double kOrthogonalityTolerance = 1e-9;

struct FourierDecomposition;

class CharacterTable {
 public:
  /// Throws DomainError beyond kMaxTableOrder / kMaxTableClasses and
  /// NumericFailure if no random class-matrix combination separates the
  /// eigenvalues or the result fails the orthogonality relations.
  explicit CharacterTable(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  /// Class representatives, in conjugacy_classes() order (identity first).
  const std::vector<ElementIndex>& representatives() const noexcept { return reps_; }
  const std::vector<std::uint64_t>& class_sizes() const noexcept { return sizes_; }
  /// Ascending; equal degrees ordered by value vector, trivial character first.
  const std::vector<std::uint64_t>& degrees() const noexcept { return degrees_; }
  /// values()[chi][class]
  const std::vector<std::vector<std::complex<double>>>& values() const noexcept { return values_; }
  std::complex<double> value(std::size_t chi, ElementIndex g) const;

  /// Distinct degrees, ascending.
  std::vector<std::uint64_t> degree_set() const;
  /// Largest degree when there are exactly two distinct degrees.
  std::optional<std::uint64_t> two_degree_m() const;
  /// Max deviation of row and column orthogonality.
  double orthogonality_residual() const { return residual_; }

 private:
  FiniteGroup group_;
  std::vector<ElementIndex> reps_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> degrees_;
  std::vector<std::vector<std::complex<double>>> values_;
  std::vector<std::vector<std::complex<long double>>> precise_;
  double residual_ = 0;

  friend FourierDecomposition fourier_coefficients(const std::vector<BigInt>&, const CharacterTable&);
  friend FiberDistribution frobenius_count_wk(const CharacterTable&, std::size_t);
};

/// Shared table per group, built on first use. Thread-safe.
const CharacterTable& cached_character_table(const FiniteGroup& g);

/// Exact coefficient numerator / |G|.
struct FourierDecomposition {
  std::uint64_t group_order = 0;
  std::vector<BigInt> numerators;
  /// Largest distance of a numeric numerator from its rounded value.
  double residual = 0;

  bool all_integers() const;
  bool all_nonnegative() const;
  /// Reduced "p/q" or "p".
  std::string coefficient_text(std::size_t chi) const;
};

/// Per-class values of a class function; throws DomainError if `values` is
/// not constant on a class.
FourierDecomposition fourier_coefficients(const std::vector<BigInt>& values, const CharacterTable& t);
FourierDecomposition fourier_coefficients(const FiberDistribution& d, const CharacterTable& t);

enum class ClassFunctionKind { character, generalized_character, neither };
const char* to_string(ClassFunctionKind kind);

/// Classifies by the coefficients and cross-checks with the power-map test
/// f(g) = f(g^e) for e coprime to |G|: when f takes integer values, being a
/// generalized character is equivalent to that test. Disagreement throws
/// OracleDisagreement.
ClassFunctionKind classify_class_function(const FourierDecomposition& f, const CharacterTable& t,
                                          const std::vector<BigInt>& values);
ClassFunctionKind classify_class_function(const FourierDecomposition& f, const CharacterTable& t,
                                          const FiberDistribution& d);

/// f(g) == f(g^e) for every g and every e coprime to |G| (taken mod exp(G)).
bool power_map_invariant(const FiniteGroup& g, const std::vector<BigInt>& values);

struct TwoDegreeCounts {
  BigInt identity;
  BigInt nontrivial;
};
/// N_{w_k}(1) and N_{w_k}(g) for 1 != g in G' on a p-group with degrees {1, m}:
/// N(g) = |G|^{2k} (m^{2k} - 1) / (|G'| m^{2k}), N(1) = |G|^{2k} - (|G'| - 1) N(g).
TwoDegreeCounts closed_form_wk_two_degree(std::uint64_t order, std::uint64_t derived_order,
                                          std::uint64_t m, std::size_t k);

/// N_{w_k}(g) = sum_chi (|G|/chi(1))^{2k-1} chi(g), rounded with a residual check.
FiberDistribution frobenius_count_wk(const CharacterTable& t, std::size_t k);

/// Some irreducible degree d has d^2 = |G : Z(G)|.
bool is_central_type(const CharacterTable& t);

nlohmann::ordered_json export_table_json(const CharacterTable& t);

}  // namespace wordlab
