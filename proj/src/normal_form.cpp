#include "wordlab/normal_form.hpp"

#include "wordlab/errors.hpp"

namespace wordlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

IntMatrix alternating_matrix(const Class2Signature& sig) {
  const std::size_t k = sig.arity;
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      m(i, j) = sig.b[i][j];
      m(j, i) = -sig.b[i][j];
    }
  return m;
}

Word apply_witness(const Word& w, const IntMatrix& witness) {
  const std::size_t k = w.arity();
  if (witness.rows() != k || witness.cols() != k) throw DomainError("witness size mismatch");
  std::vector<Word> images;
  images.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Letter> letters;
    for (std::size_t j = 0; j < k; ++j)
      if (witness(j, i) != 0) letters.push_back(Letter{j + 1, witness(j, i)});
    images.emplace_back(k, std::move(letters));
  }
  return substitute(w, images);
}

NormalForm reduce_type1(const Class2Signature& sig, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (!sig.a_is_zero()) throw DomainError("type-1 reduction needs zero exponent sums");
  if (sig.b_is_zero()) throw DomainError("type-1 reduction needs a nonzero commutator part");

  SkewForm skew = skew_normal_form(alternating_matrix(sig));
  Type1Form t1;
  t1.divisors = skew.divisors;
  for (const auto& d : skew.divisors) t1.s.push_back(valuation(d, p));

  const std::size_t k = sig.arity;
  Word canonical = Word::identity(k);
  for (std::size_t i = 0; i < t1.s.size(); ++i) {
    Word x(k, {Letter{2 * i + 1, 1}});
    Word y(k, {Letter{2 * i + 2, 1}});
    canonical = canonical * word_power(commutator(x, y), big_pow(BigInt(p), t1.s[i]));
  }
  return NormalForm{p, std::move(t1), std::move(skew.transform), std::move(canonical)};
}

NormalForm normalize_type2_partial(const Class2Signature& sig, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (sig.a_is_zero()) throw DomainError("type-2 normalization needs nonzero exponent sums");

  RowGcdForm g = row_gcd_form(sig.a);
  IntMatrix witness = g.transform.transpose();
  Word transformed = apply_witness(signature_word(sig), witness);

  Type2PartialForm t2;
  t2.d = g.gcd;
  t2.s1 = valuation(g.gcd, p);
  t2.exact = class2_signature(transformed);
  t2.residual = Class2Signature(sig.arity);
  t2.residual.a[0] = g.gcd;
  const IntMatrix moved = witness * alternating_matrix(sig) * witness.transpose();
  for (std::size_t i = 0; i < sig.arity; ++i)
    for (std::size_t j = i + 1; j < sig.arity; ++j) t2.residual.b[i][j] = moved(i, j);
  Word canonical = signature_word(t2.exact);
  return NormalForm{p, std::move(t2), std::move(witness), std::move(canonical)};
}

NormalForm normalize(const Word& w, std::uint64_t p) {
  Class2Signature sig = class2_signature(w);
  if (sig.a_is_zero()) return reduce_type1(sig, p);
  return normalize_type2_partial(sig, p);
}

std::string canonical_text(const NormalForm& nf) {
  if (const auto* t2 = std::get_if<Type2PartialForm>(&nf.form)) return render_signature(t2->exact);
  return render_signature(class2_signature(nf.canonical));
}

}  // namespace wordlab
