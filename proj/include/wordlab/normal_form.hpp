#pragma once

// Canonical representatives of class-2 word signatures relative to a prime p.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wordlab/int_matrix.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// [x1,x2]^{p^{s_1}} ... [x_{2r-1},x_{2r}]^{p^{s_r}}, s non-decreasing.
struct Type1Form {
  std::vector<unsigned> s;
  std::vector<BigInt> divisors;  // full paired elementary divisors d_1 | ... | d_r
};

/// Exponent part brought to x1^d. `residual` has a = (d, 0, ..., 0) and the
/// commutator part of U (B - B^T) U^T; `exact` is the signature of the
/// substituted word, which also picks up the collection terms of powers of
/// products. Neither is canonicalized further.
struct Type2PartialForm {
  unsigned s1 = 0;
  BigInt d;
  Class2Signature residual;
  Class2Signature exact;
};
/// The witness U is unimodular and acts by the substitution
/// x_i -> prod_j x_j^{U(j,i)}: exponent sums transform as a -> U a and the
/// commutator form as (B - B^T) -> U (B - B^T) U^T.
struct NormalForm {
  std::uint64_t prime = 0;
  std::variant<Type1Form, Type2PartialForm> form;
  IntMatrix witness;
  /// Same fiber distribution as the input on class-2 groups (p-groups only
  /// for type 1).
  Word canonical;
};

bool is_prime(std::uint64_t n);

/// Signature with a == 0 and B != 0.
NormalForm reduce_type1(const Class2Signature& sig, std::uint64_t p);

/// Signature with a != 0.
NormalForm normalize_type2_partial(const Class2Signature& sig, std::uint64_t p);

/// Dispatches on whether the exponent part vanishes.
NormalForm normalize(const Word& w, std::uint64_t p);

/// Compact text of the canonical word, e.g. "[x1,x2]^2 [x3,x4]^4".
std::string canonical_text(const NormalForm& nf);

/// The word w(phi(x)) for the substitution encoded by a witness.
Word apply_witness(const Word& w, const IntMatrix& witness);

/// B - B^T.
IntMatrix alternating_matrix(const Class2Signature& sig);

}  // namespace wordlab
