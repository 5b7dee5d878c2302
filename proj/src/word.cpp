#include "wordlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (l.exponent == 0) return;
  if (!out.empty() && out.back().generator == l.generator) {
    out.back().exponent += l.exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

std::vector<Letter> reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) push_reduced(out, l);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse_all() {
    skip_ws();
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  BigInt digits() {
    std::size_t start = pos_;
    BigInt v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected digits");
    return v;
  }

  Word parse_word() {
    Word acc;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != 'x' && c != '(' && c != '[') break;
      acc = acc * parse_factor();
    }
    return acc;
  }

  Word parse_factor() {
    Word base = parse_base();
    if (!at('^')) return base;
    ++pos_;
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t exp_pos = pos_;
    BigInt e = digits();
    if (e == 0) throw ParseError("zero exponent", exp_pos);
    return word_power(base, negative ? BigInt(-e) : e);
  }

  Word parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      std::size_t idx_pos = pos_;
      BigInt idx = digits();
      if (idx == 0) throw ParseError("generator index must be >= 1", idx_pos);
      if (idx > BigInt(1'000'000)) throw ParseError("generator index too large", idx_pos);
      auto g = idx.convert_to<std::size_t>();
      max_index_ = std::max(max_index_, g);
      return Word(g, {Letter{g, 1}});
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      if (!at(',')) fail("expected ','");
      ++pos_;
      Word v = parse_word();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      return commutator(u, v);
    }
    fail("expected 'x', '(' or '['");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

}  // namespace

Word::Word(std::size_t arity, std::vector<Letter> letters) : arity_(arity) {
  for (const auto& l : letters) {
    if (l.generator < 1 || l.generator > arity)
      throw DomainError("generator index " + std::to_string(l.generator) + " outside arity " +
                        std::to_string(arity));
  }
  letters_ = reduce(letters);
}

Word Word::with_arity(std::size_t arity) const {
  if (arity < arity_) {
    for (const auto& l : letters_)
      if (l.generator > arity) throw DomainError("arity smaller than a used generator");
  }
  Word w = *this;
  w.arity_ = arity;
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w;
  w.arity_ = std::max(arity_, rhs.arity_);
  w.letters_ = letters_;
  for (const auto& l : rhs.letters_) push_reduced(w.letters_, l);
  return w;
}

Word parse_word(std::string_view text, std::optional<std::size_t> arity_hint) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);

  Word w;
  std::size_t max_index = 0;
  if (!trimmed.empty() && trimmed != "1") {
    Parser p(text);
    w = p.parse_all();
    max_index = p.max_index();
  }
  std::size_t arity = max_index;
  if (arity_hint) {
    if (*arity_hint < max_index)
      throw DomainError("arity hint " + std::to_string(*arity_hint) + " smaller than used index " +
                        std::to_string(max_index));
    arity = *arity_hint;
  }
  return Word(arity, w.letters());
}

std::string render(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.generator);
    if (l.exponent != 1) {
      out += '^';
      out += l.exponent.str();
    }
  }
  return out;
}

Word invert_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(Letter{it->generator, -it->exponent});
  return Word(w.arity(), std::move(out));
}

Word commutator(const Word& u, const Word& v) {
  return invert_word(u) * invert_word(v) * u * v;
}

Word word_power(const Word& w, const BigInt& e) {
  if (e == 0 || w.is_identity()) return Word::identity(w.arity());
  if (w.letters().size() == 1) {
    const auto& l = w.letters().front();
    return Word(w.arity(), {Letter{l.generator, l.exponent * e}});
  }
  Word base = e < 0 ? invert_word(w) : w;
  BigInt n = e < 0 ? BigInt(-e) : e;
  if (n * base.letters().size() > kMaxExpandedLetters)
    throw DomainError("power expansion exceeds " + std::to_string(kMaxExpandedLetters) +
                      " letters");
  std::vector<Letter> letters;
  auto count = n.convert_to<std::size_t>();
  for (std::size_t i = 0; i < count; ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return Word(w.arity(), std::move(letters));
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  if (images.size() < w.arity())
    throw DomainError("substitution needs one image per variable");
  std::size_t arity = 0;
  for (const auto& img : images) arity = std::max(arity, img.arity());
  Word acc = Word::identity(arity);
  for (const auto& l : w.letters()) acc = acc * word_power(images[l.generator - 1], l.exponent);
  return acc.with_arity(arity);
}

bool Class2Signature::a_is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v == 0; });
}

bool Class2Signature::b_is_zero() const {
  for (const auto& row : b)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

Class2Signature class2_signature(const Word& w) {
  const std::size_t k = w.arity();
  Class2Signature sig(k);
  // Collect letters into sorted order. Moving x_i^e left past x_j^f (j > i)
  // costs [x_j^f, x_i^e] = [x_i, x_j]^{-ef}.
  std::vector<BigInt> seen(k);
  for (const auto& l : w.letters()) {
    const std::size_t i = l.generator - 1;
    for (std::size_t j = i + 1; j < k; ++j)
      if (seen[j] != 0) sig.b[i][j] -= seen[j] * l.exponent;
    seen[i] += l.exponent;
  }
  sig.a = std::move(seen);
  return sig;
}

Word signature_word(const Class2Signature& sig) {
  const std::size_t k = sig.arity;
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < k; ++i)
    if (sig.a[i] != 0) letters.push_back(Letter{i + 1, sig.a[i]});
  Word w(k, std::move(letters));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (sig.b[i][j] == 0) continue;
      Word xi(k, {Letter{i + 1, 1}});
      Word xj(k, {Letter{j + 1, 1}});
      w = w * word_power(commutator(xi, xj), sig.b[i][j]);
    }
  }
  return w;
}

std::vector<std::size_t> used_generators(const Word& w) {
  std::set<std::size_t> s;
  for (const auto& l : w.letters()) s.insert(l.generator);
  return {s.begin(), s.end()};
}

Word build_named_word(NamedWord kind, std::size_t n) {
  if (n == 0) throw DomainError("named word needs n >= 1");
  auto x = [](std::size_t arity, std::size_t i) { return Word(arity, {Letter{i, 1}}); };
  switch (kind) {
    case NamedWord::wk: {
      const std::size_t k = 2 * n;
      Word w = Word::identity(k);
      for (std::size_t i = 0; i < n; ++i) w = w * commutator(x(k, 2 * i + 1), x(k, 2 * i + 2));
      return w;
    }
    case NamedWord::left_normed: {
      Word w = x(n, 1);
      for (std::size_t i = 2; i <= n; ++i) w = commutator(w, x(n, i));
      return w;
    }
    case NamedWord::vn: {
      std::vector<Letter> letters;
      for (std::size_t i = 1; i <= n; ++i) letters.push_back(Letter{i, 1});
      for (std::size_t i = 1; i <= n; ++i) letters.push_back(Letter{i, -1});
      return Word(n, std::move(letters));
    }
  }
  throw DomainError("unknown named word");
}

std::string render_signature(const Class2Signature& sig) {
  std::string out;
  auto term = [&](const std::string& base, const BigInt& e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += base;
    if (e != 1) out += "^" + to_decimal(e);
  };
  for (std::size_t i = 0; i < sig.arity; ++i) term("x" + std::to_string(i + 1), sig.a[i]);
  for (std::size_t i = 0; i < sig.arity; ++i)
    for (std::size_t j = i + 1; j < sig.arity; ++j)
      term("[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]", sig.b[i][j]);
  return out.empty() ? "1" : out;
}

}  // namespace wordlab
