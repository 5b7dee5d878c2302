#include "wordlab/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

using Complex = std::complex<long double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

constexpr int kMaxAttempts = 12;
constexpr long double kSeparation = 1e-7L;

// value-vector order within one degree: lexicographically descending, with a
// tolerance so that rounding noise does not flip ties
bool value_greater(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  constexpr long double eps = 1e-9L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > eps) return a[i].real() > b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > eps) return a[i].imag() > b[i].imag();
  }
  return false;
}

struct Attempt {
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<Complex>> values;
  long double residual = 0;
};

// One Burnside pass with a random combination of the class matrices.
// Returns nullopt when the eigenvalues are not separated.
std::optional<Attempt> burnside(const FiniteGroup& g, const ConjugacyClasses& cc, std::mt19937_64& rng) {
  const std::size_t r = cc.count();
  const long double order = g.order();
  std::uniform_real_distribution<long double> coef(-1.0L, 1.0L);
  std::vector<Complex> c(r);
  for (auto& x : c) x = Complex(coef(rng), coef(rng));

  // M[j][k] = sum_i c_i #{x in C_i : x^-1 z_k in C_j}; omega is a right
  // eigenvector of every class matrix.
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (auto x : cc.classes[i]) {
        const auto j = cc.class_of[g.multiply(g.inverse(x), cc.representatives[k])];
        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += c[i];
      }

  Eigen::ComplexEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const auto& lambda = solver.eigenvalues();
  long double scale = 1;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) scale = std::max(scale, std::abs(lambda(i)));
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    for (Eigen::Index j = i + 1; j < lambda.size(); ++j)
      if (std::abs(lambda(i) - lambda(j)) < kSeparation * scale) return std::nullopt;

  Attempt out;
  for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(r); ++col) {
    Eigen::Matrix<Complex, Eigen::Dynamic, 1> v = solver.eigenvectors().col(col);
    if (std::abs(v(0)) < 1e-12L) return std::nullopt;
    v /= v(0);
    long double norm = 0;
    for (std::size_t k = 0; k < r; ++k) norm += std::norm(v(static_cast<Eigen::Index>(k))) / cc.sizes[k];
    const long double d2 = order / norm;
    const auto d = static_cast<std::uint64_t>(std::llround(std::sqrt(d2)));
    if (d == 0 || std::abs(d2 - static_cast<long double>(d * d)) > 1e-6L * d2 || g.order() % d != 0)
      return std::nullopt;
    std::vector<Complex> row(r);
    for (std::size_t k = 0; k < r; ++k)
      row[k] = static_cast<long double>(d) * v(static_cast<Eigen::Index>(k)) / static_cast<long double>(cc.sizes[k]);
    out.degrees.push_back(d);
    out.values.push_back(std::move(row));
  }

  // row orthogonality (1/|G|) sum |C_k| chi_i conj(chi_j) = delta_ij
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s += static_cast<long double>(cc.sizes[k]) * out.values[i][k] * std::conj(out.values[j][k]);
      s /= order;
      out.residual = std::max(out.residual, std::abs(s - Complex(i == j ? 1 : 0)));
    }
  // column orthogonality sum_chi chi(k) conj chi(l) = delta_kl |G|/|C_k|
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      Complex s = 0;
      for (std::size_t i = 0; i < r; ++i) s += out.values[i][k] * std::conj(out.values[i][l]);
      s *= static_cast<long double>(cc.sizes[k]) / order;
      out.residual = std::max(out.residual, std::abs(s - Complex(k == l ? 1 : 0)));
    }
  return out;
}

}  // namespace

CharacterTable::CharacterTable(const FiniteGroup& g) : group_(g) {
  if (g.order() > kMaxTableOrder)
    throw DomainError("character table limited to order " + std::to_string(kMaxTableOrder) + ", got " +
                      std::to_string(g.order()));
  const ConjugacyClasses& cc = g.conjugacy_classes();
  if (cc.count() > kMaxTableClasses)
    throw DomainError("character table limited to " + std::to_string(kMaxTableClasses) + " classes, got " +
                      std::to_string(cc.count()));
  reps_ = cc.representatives;
  sizes_ = cc.sizes;

  std::mt19937_64 rng(0xc4a7ab1eULL);
  std::optional<Attempt> best;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto a = burnside(g, cc, rng);
    if (a && a->residual < kOrthogonalityTolerance) {
      best = std::move(a);
      break;
    }
  }
  if (!best) throw NumericFailure("character table of " + g.name() + ": eigenvalue separation or orthogonality failed");

  std::vector<std::size_t> perm(best->degrees.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (best->degrees[a] != best->degrees[b]) return best->degrees[a] < best->degrees[b];
    return value_greater(best->values[a], best->values[b]);
  });
  for (auto i : perm) {
    degrees_.push_back(best->degrees[i]);
    precise_.push_back(best->values[i]);
    std::vector<std::complex<double>> row;
    for (const auto& v : best->values[i]) row.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    values_.push_back(std::move(row));
  }
  residual_ = static_cast<double>(best->residual);
}

const CharacterTable& cached_character_table(const FiniteGroup& g) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(g.uid());
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_shared<const CharacterTable>(g);
  std::lock_guard<std::mutex> lock(mutex);
  return *cache.emplace(g.uid(), std::move(table)).first->second;
}

std::complex<double> CharacterTable::value(std::size_t chi, ElementIndex g) const {
  return values_.at(chi).at(group_.conjugacy_classes().class_of.at(g));
}

std::vector<std::uint64_t> CharacterTable::degree_set() const {
  std::vector<std::uint64_t> s = degrees_;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<std::uint64_t> CharacterTable::two_degree_m() const {
  const auto s = degree_set();
  if (s.size() != 2) return std::nullopt;
  return s.back();
}

bool FourierDecomposition::all_integers() const {
  return std::all_of(numerators.begin(), numerators.end(),
                     [&](const BigInt& n) { return n % group_order == 0; });
}

bool FourierDecomposition::all_nonnegative() const {
  return std::all_of(numerators.begin(), numerators.end(), [](const BigInt& n) { return n >= 0; });
}

std::string FourierDecomposition::coefficient_text(std::size_t chi) const {
  BigInt n = numerators.at(chi);
  BigInt d = group_order;
  const BigInt g = big_gcd(n, d);
  if (g != 0) {
    n /= g;
    d /= g;
  }
  return d == 1 ? to_decimal(n) : to_decimal(n) + "/" + to_decimal(d);
}

FourierDecomposition fourier_coefficients(const std::vector<BigInt>& values, const CharacterTable& t) {
  const FiniteGroup& g = t.group();
  if (values.size() != g.order()) throw DomainError("class function size does not match group order");
  const ConjugacyClasses& cc = g.conjugacy_classes();
  std::vector<long double> per_class(cc.count());
  long double magnitude = 0;
  for (std::size_t k = 0; k < cc.count(); ++k) {
    const BigInt& v = values[cc.representatives[k]];
    for (auto x : cc.classes[k])
      if (values[x] != v) throw DomainError("not a class function: values differ on the class of " + g.label(x));
    per_class[k] = v.convert_to<long double>();
    magnitude += std::abs(per_class[k]) * static_cast<long double>(cc.sizes[k]);
  }
  // numerators are exact integers only while long double can resolve them
  if (magnitude >= std::ldexp(1.0L, 50))
    throw NumericFailure("class function too large for exact Fourier recovery");
  const long double tol = std::min(0.1L, 1e-6L + 1e-12L * magnitude);

  FourierDecomposition out;
  out.group_order = g.order();
  long double residual = 0;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    Complex s = 0;
    for (std::size_t k = 0; k < cc.count(); ++k)
      s += static_cast<long double>(cc.sizes[k]) * per_class[k] * std::conj(t.precise_[chi][k]);
    const long double rounded = std::round(s.real());
    residual = std::max({residual, std::abs(s.real() - rounded), std::abs(s.imag())});
    out.numerators.emplace_back(static_cast<long long>(rounded));
  }
  out.residual = static_cast<double>(residual);
  if (residual > tol)
    throw NumericFailure("Fourier coefficients of a class function on " + g.name() +
                         " are not rational with denominator |G| (residual " + std::to_string(out.residual) + ")");
  return out;
}

FourierDecomposition fourier_coefficients(const FiberDistribution& d, const CharacterTable& t) {
  if (d.group().uid() != t.group().uid()) throw DomainError("distribution and character table are over different groups");
  return fourier_coefficients(d.counts(), t);
}

const char* to_string(ClassFunctionKind kind) {
  switch (kind) {
    case ClassFunctionKind::character:
      return "character";
    case ClassFunctionKind::generalized_character:
      return "generalized_character";
    case ClassFunctionKind::neither:
      return "neither";
  }
  return "neither";
}

bool power_map_invariant(const FiniteGroup& g, const std::vector<BigInt>& values) {
  const std::uint64_t exp = g.exponent();
  for (std::uint64_t e = 1; e <= exp; ++e) {
    if (std::gcd(e, exp) != 1) continue;
    for (ElementIndex x = 0; x < g.order(); ++x)
      if (values[x] != values[g.power(x, e)]) return false;
  }
  return true;
}

namespace {

ClassFunctionKind kind_of(const FourierDecomposition& f) {
  if (!f.all_integers()) return ClassFunctionKind::neither;
  const bool nonzero = std::any_of(f.numerators.begin(), f.numerators.end(), [](const BigInt& n) { return n != 0; });
  return f.all_nonnegative() && nonzero ? ClassFunctionKind::character : ClassFunctionKind::generalized_character;
}

}  // namespace

ClassFunctionKind classify_class_function(const FourierDecomposition& f, const CharacterTable& t,
                                          const std::vector<BigInt>& values) {
  const ClassFunctionKind kind = kind_of(f);
  // An integer-valued generalized character is fixed by every Galois
  // automorphism, hence by the coprime power maps.
  if (kind != ClassFunctionKind::neither && !power_map_invariant(t.group(), values))
    throw OracleDisagreement("generalized character on " + t.group().name() + " is not power-map invariant");
  return kind;
}

ClassFunctionKind classify_class_function(const FourierDecomposition& f, const CharacterTable& t,
                                          const FiberDistribution& d) {
  const ClassFunctionKind kind = classify_class_function(f, t, d.counts());
  // For a word distribution the converse also holds.
  if (d.arity() >= 1 && kind == ClassFunctionKind::neither && power_map_invariant(t.group(), d.counts()))
    throw OracleDisagreement("distribution of " + d.word_text + " on " + t.group().name() +
                             " is power-map invariant but not a generalized character");
  return kind;
}

TwoDegreeCounts closed_form_wk_two_degree(std::uint64_t order, std::uint64_t derived_order, std::uint64_t m,
                                          std::size_t k) {
  if (m < 2) throw DomainError("closed form needs m >= 2");
  if (k < 1) throw DomainError("closed form needs k >= 1");
  if (derived_order == 0 || order % derived_order != 0) throw DomainError("|G'| must divide |G|");
  const BigInt total = big_pow(BigInt(order), 2 * k);
  const BigInt m2k = big_pow(BigInt(m), 2 * k);
  const BigInt num = total * (m2k - 1);
  const BigInt den = BigInt(derived_order) * m2k;
  if (num % den != 0) throw DomainError("closed form is not integral for these parameters");
  TwoDegreeCounts out;
  out.nontrivial = num / den;
  out.identity = total - BigInt(derived_order - 1) * out.nontrivial;
  return out;
}

FiberDistribution frobenius_count_wk(const CharacterTable& t, std::size_t k) {
  if (k < 1) throw DomainError("frobenius_count_wk needs k >= 1");
  const FiniteGroup& g = t.group();
  const ConjugacyClasses& cc = g.conjugacy_classes();
  const auto degrees = t.degree_set();

  // Characters of one degree form a Galois-stable set, so their sum is
  // integer-valued; round per degree, then combine exactly.
  std::vector<BigInt> per_class(cc.count());
  long double residual = 0;
  for (auto d : degrees) {
    const BigInt weight = big_pow(BigInt(g.order() / d), 2 * k - 1);
    for (std::size_t c = 0; c < cc.count(); ++c) {
      Complex s = 0;
      for (std::size_t chi = 0; chi < t.size(); ++chi)
        if (t.degrees()[chi] == d) s += t.precise_[chi][c];
      const long double rounded = std::round(s.real());
      residual = std::max({residual, std::abs(s.real() - rounded), std::abs(s.imag())});
      per_class[c] += weight * BigInt(static_cast<long long>(rounded));
    }
  }
  if (residual > 1e-6L)
    throw NumericFailure("frobenius sum on " + g.name() + " is not integral (residual " +
                         std::to_string(static_cast<double>(residual)) + ")");
  std::vector<BigInt> counts(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) counts[x] = per_class[cc.class_of[x]];
  FiberDistribution out(g, 2 * k, std::move(counts));
  out.word_text = render(build_named_word(NamedWord::wk, k));
  out.method = "frobenius";
  return out;
}

bool is_central_type(const CharacterTable& t) {
  const std::uint64_t index = t.group().order() / t.group().center().size();
  return std::any_of(t.degrees().begin(), t.degrees().end(), [&](std::uint64_t d) { return d * d == index; });
}

nlohmann::ordered_json export_table_json(const CharacterTable& t) {
  nlohmann::ordered_json doc;
  doc["group"] = t.group().name();
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (auto r : t.representatives()) classes.push_back(t.group().label(r));
  doc["classes"] = std::move(classes);
  doc["sizes"] = t.class_sizes();
  doc["degrees"] = t.degrees();
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const auto& row : t.values())
    for (const auto& v : row) {
      // fixed rounding keeps output byte-stable across platforms
      const double re = std::round(v.real() * 1e12) / 1e12 + 0.0;
      const double im = std::round(v.imag() * 1e12) / 1e12 + 0.0;
      values.push_back({re, im});
    }
  doc["values"] = std::move(values);
  return doc;
}

}  // namespace wordlab
