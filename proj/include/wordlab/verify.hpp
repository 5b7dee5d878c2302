#pragma once

// Machine-checkable verdicts for the fiber bounds, rationality, chirality and
// product claims. Conjecture checks report failures; a failed theorem check
// on inputs meeting its hypotheses throws OracleDisagreement instead.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordlab/bigint.hpp"
#include "wordlab/fiber.hpp"
#include "wordlab/group.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

enum class Verdict { holds, fails, not_applicable };
const char* to_string(Verdict v);

struct Margin {
  std::string element;
  BigInt count;
  BigInt bound;  // required value; for equality claims the expected count
};

struct Counterexample {
  ElementIndex element = 0;
  std::string label;
  BigInt count;
  BigInt bound;
  std::string detail;            // e.g. the power e or the missing inverse
  nlohmann::json group_document;  // replayable group
};

struct VerificationReport {
  std::string claim;
  std::string group;
  std::string word;
  Verdict verdict = Verdict::not_applicable;
  std::vector<Margin> margins;
  std::optional<Counterexample> counterexample;
  std::string method;
  std::uint64_t budget = 0;  // evaluations spent
  std::string hypothesis;    // violated hypothesis when not applicable
  /// Secondary findings, e.g. the |Z|^2 <= |G| test or weak rationality.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  /// Conjectures may fail; everything else failing is a bug.
  bool conjecture = false;
};

enum class BoundMode { amit, generalized_amit, thmA, thmB, solomon };
BoundMode parse_bound_mode(const std::string& name);
const char* to_string(BoundMode mode);

/// Bounds on N_w over G_w:
///   amit:             N(1) >= |G|^{k-1}, nilpotent G
///   generalized_amit: N(g) >= |G|^{k-1} on G_w, nilpotent G
///   thmA:             N(g) >= |G| on G_w, class <= 2, words in at most two
///                     variables (padded to two)
///   thmB:             N(g) >= |G|^{k-2} on G_w, class <= 2, odd order
///   solomon:          N(g) >= |G| on Z(G) cap G_w, nilpotent, at most two variables
/// For class-2 p-groups and words with zero exponent sums the report also
/// records whether |Z|^2 <= |G|, under which the generalized bound must hold.
VerificationReport verify_bounds(const FiniteGroup& g, const Word& w, BoundMode mode, CountOptions options = {});

/// Two-degree p-groups: G_{w_k} = G', two fiber sizes on G' with N(1) the
/// larger, every count >= |G|^{2k-1}, and counting, closed form and
/// character sum agree.
VerificationReport verify_theorem_C(const FiniteGroup& g, std::size_t k, CountOptions options = {});

/// Class 2 with |G'| = p: N_{w_k}(g) >= |G|^{2k-1} on G', and G has an
/// irreducible degree d with d^2 = |G : Z|.
VerificationReport verify_corollary_D(const FiniteGroup& g, std::size_t k, CountOptions options = {});

/// N(g) = N(g^e) for all g and e coprime to |G| (e taken mod exp(G)). When a
/// character table is available the Fourier coefficients are recorded; on
/// class-2 groups they must be integers, and non-negative for odd order.
VerificationReport check_rationality(const FiniteGroup& g, const Word& w, CountOptions options = {});

/// holds = achiral (G_w = G_w^-1). Weak rationality of G_w is recorded.
VerificationReport check_chirality(const FiniteGroup& g, const Word& w, CountOptions options = {});

/// N_{w,HxK}((h,k)) = N_{w,H}(h) N_{w,K}(k), with the product counted directly.
VerificationReport check_product_multiplicativity(const FiniteGroup& h, const FiniteGroup& k, const Word& w,
                                                  CountOptions options = {});

/// On nilpotent G: if w is surjective then N(g) = |G|^{k-1} everywhere.
VerificationReport check_uniformity_surjective(const FiniteGroup& g, const Word& w, CountOptions options = {});

/// One JSON object (no trailing newline).
std::string export_report_line(const VerificationReport& r);
nlohmann::ordered_json report_json(const VerificationReport& r);

}  // namespace wordlab
