#pragma once

// Free-group words: parsing, free reduction, inversion, named families and
// the image of a word in the free nilpotent group of class 2.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/bigint.hpp"

namespace wordlab {

struct Letter {
  std::size_t generator;  // 1-based
  BigInt exponent;        // never zero

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in `arity` variables x1..xk.
class Word {
 public:
  Word() = default;
  /// Reduces `letters` freely. Throws DomainError if a generator index is
  /// outside [1, arity].
  Word(std::size_t arity, std::vector<Letter> letters);

  static Word identity(std::size_t arity = 0) { return Word(arity, {}); }

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }

  /// Same letters, larger variable count.
  Word with_arity(std::size_t arity) const;

  /// Concatenation; arity is the max of both.
  Word operator*(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<Letter> letters_;
};

/// Upper bound on letters produced by expanding powers of composite bases.
inline constexpr std::size_t kMaxExpandedLetters = 1'000'000;

/// Grammar:
///   word   := factor*
///   factor := base ("^" "-"? digits)?
///   base   := "x" digits | "(" word ")" | "[" word "," word "]"
/// Whitespace between tokens is ignored; "" or "1" is the identity.
/// Commutators use [u,v] = u^-1 v^-1 u v.
Word parse_word(std::string_view text, std::optional<std::size_t> arity_hint = std::nullopt);

/// Canonical text form, e.g. "x1^2 x2^-1 x1". Identity renders as "1".
std::string render(const Word& w);

Word invert_word(const Word& w);

enum class NamedWord { wk, left_normed, vn };

/// wk: [x1,x2]...[x_{2n-1},x_{2n}]; left_normed: [x1,...,xn]; vn: x1..xn x1^-1..xn^-1.
Word build_named_word(NamedWord kind, std::size_t n);

/// Commutator [u,v] = u^-1 v^-1 u v of two words.
Word commutator(const Word& u, const Word& v);

/// Power of a word; expansion is capped at kMaxExpandedLetters.
Word word_power(const Word& w, const BigInt& e);

/// Replace x_i by images[i-1] (all in a common variable set) and reduce.
Word substitute(const Word& w, const std::vector<Word>& images);

/// Image in the free class-2 group: w = prod x_i^{a_i} * prod_{i<j} [x_i,x_j]^{b_ij}.
struct Class2Signature {
  std::size_t arity = 0;
  std::vector<BigInt> a;               // exponent sums
  std::vector<std::vector<BigInt>> b;  // arity x arity, strictly upper triangular

  explicit Class2Signature(std::size_t k = 0)
      : arity(k), a(k), b(k, std::vector<BigInt>(k)) {}

  bool a_is_zero() const;
  bool b_is_zero() const;

  friend bool operator==(const Class2Signature&, const Class2Signature&) = default;
};

Class2Signature class2_signature(const Word& w);

/// The word prod x_i^{a_i} prod_{i<j} [x_i,x_j]^{b_ij}, evaluating like the
/// signature in every group of class <= 2.
Word signature_word(const Class2Signature& sig);

/// Compact text such as "x1^2 [x1,x2]^-3"; "1" when trivial.
std::string render_signature(const Class2Signature& sig);

/// Generators occurring in w, sorted.
std::vector<std::size_t> used_generators(const Word& w);

}  // namespace wordlab
