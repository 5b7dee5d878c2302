#include "wordlab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "wordlab/errors.hpp"
#include "wordlab/normal_form.hpp"

namespace wordlab {

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError(what + ": expected a non-negative integer, got '" + s + "'");
  if (s.size() > 12) throw DomainError(what + ": value too large");
  return std::stoull(s);
}

std::uint64_t require_prime(const std::string& s, const std::string& what) {
  const auto p = parse_uint(s, what);
  if (!is_prime(p)) throw DomainError(what + ": " + s + " is not prime");
  return p;
}

void require_arity(const std::vector<std::string>& params, std::size_t n, const std::string& name) {
  if (params.size() != n)
    throw DomainError(name + " takes " + std::to_string(n) + " parameter(s), got " +
                      std::to_string(params.size()));
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > kMaxGroupOrder) break;
    r *= base;
  }
  if (r > kMaxGroupOrder)
    throw DomainError("group order exceeds supported size " + std::to_string(kMaxGroupOrder));
  return r;
}

std::vector<std::uint32_t> unit(std::size_t n, std::size_t i) {
  std::vector<std::uint32_t> v(n, 0);
  v[i] = 1;
  return v;
}

FiniteGroup make_cyclic(std::uint64_t n) {
  const std::string name = "cyclic(" + std::to_string(n) + ")";
  if (n == 0) throw DomainError("cyclic(0) is not a group");
  if (n > kMaxGroupOrder) throw DomainError("group order exceeds supported size");
  PcPresentation p(name, n == 1 ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{static_cast<std::uint32_t>(n)});
  return FiniteGroup(PcClass2Group(std::move(p)))
      .renamed(name, [](ElementIndex i) { return std::to_string(i); });
}

FiniteGroup make_q8() {
  PcPresentation p("q8", {2, 2, 2});
  p.set_power(0, unit(3, 2));
  p.set_power(1, unit(3, 2));
  p.set_commutator(0, 1, unit(3, 2));
  static const char* labels[] = {"1", "-1", "j", "-j", "i", "-i", "k", "-k"};
  return FiniteGroup(PcClass2Group(std::move(p))).renamed("q8", [](ElementIndex i) {
    return std::string(labels[i]);
  });
}

FiniteGroup make_d4() {
  // a = reflection, b = rotation by a quarter turn, c = b^2.
  PcPresentation p("d4", {2, 2, 2});
  p.set_power(1, unit(3, 2));
  p.set_commutator(0, 1, unit(3, 2));
  return FiniteGroup(PcClass2Group(std::move(p)));
}

FiniteGroup make_extraspecial(std::uint64_t prime, std::uint64_t n, bool plus, std::string name) {
  if (n == 0) throw DomainError("extraspecial groups need n >= 1");
  checked_power(prime, 2 * n + 1);
  const std::size_t gens = 2 * n + 1;
  const std::size_t z = 2 * n;
  PcPresentation p(std::move(name), std::vector<std::uint32_t>(gens, static_cast<std::uint32_t>(prime)));
  for (std::size_t i = 0; i < n; ++i) p.set_commutator(2 * i, 2 * i + 1, unit(gens, z));
  if (!plus) {
    p.set_power(0, unit(gens, z));
    if (prime == 2) p.set_power(1, unit(gens, z));
  }
  return FiniteGroup(PcClass2Group(std::move(p)));
}

FiniteGroup make_modular16() {
  // g1 = a, g2 = b, g3 = a^2, g4 = a^4 with b^-1 a b = a^5.
  PcPresentation p("modular16", {2, 2, 2, 2});
  p.set_power(0, unit(4, 2));
  p.set_power(2, unit(4, 3));
  p.set_commutator(0, 1, unit(4, 3));
  return FiniteGroup(PcClass2Group(std::move(p)));
}

FiniteGroup make_free_class2(std::uint64_t d, std::uint64_t prime, std::string name) {
  if (d == 0) throw DomainError("free_class2_exp_p needs d >= 1");
  const std::size_t gens = d + d * (d - 1) / 2;
  checked_power(prime, gens);
  PcPresentation p(std::move(name), std::vector<std::uint32_t>(gens, static_cast<std::uint32_t>(prime)));
  std::size_t c = d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) p.set_commutator(i, j, unit(gens, c++));
  return FiniteGroup(PcClass2Group(std::move(p)));
}

FiniteGroup build(const std::string& name, const std::vector<std::string>& params) {
  if (name == "cyclic") {
    require_arity(params, 1, name);
    return make_cyclic(parse_uint(params[0], "cyclic"));
  }
  if (name == "q8") {
    require_arity(params, 0, name);
    return make_q8();
  }
  if (name == "d4") {
    require_arity(params, 0, name);
    return make_d4();
  }
  if (name == "heisenberg") {
    require_arity(params, 1, name);
    const auto p = require_prime(params[0], "heisenberg");
    return make_extraspecial(p, 1, true, "heisenberg(" + params[0] + ")");
  }
  if (name == "extraspecial") {
    require_arity(params, 3, name);
    const auto p = require_prime(params[0], "extraspecial");
    const auto n = parse_uint(params[1], "extraspecial");
    if (params[2] != "+" && params[2] != "-") throw DomainError("extraspecial sign must be + or -");
    return make_extraspecial(p, n, params[2] == "+",
                             "extraspecial(" + params[0] + "," + params[1] + "," + params[2] + ")");
  }
  if (name == "modular16") {
    require_arity(params, 0, name);
    return make_modular16();
  }
  if (name == "free_class2_exp_p") {
    require_arity(params, 2, name);
    const auto d = parse_uint(params[0], "free_class2_exp_p");
    const auto p = require_prime(params[1], "free_class2_exp_p");
    return make_free_class2(d, p, "free_class2_exp_p(" + params[0] + "," + params[1] + ")");
  }
  throw DomainError("unknown catalog group '" + name + "'");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup catalog(const std::string& name, const std::vector<std::string>& params) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::vector<std::string>>, FiniteGroup> cache;
  std::vector<std::string> clean;
  for (const auto& p : params) clean.push_back(trim(p));
  const auto key = std::make_pair(name, clean);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  FiniteGroup g = build(name, clean);
  std::lock_guard lock(mu);
  return cache.emplace(key, g).first->second;
}

FiniteGroup catalog_by_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  const auto open = spec.find('(');
  if (open == std::string::npos) return catalog(spec);
  if (spec.back() != ')') throw DomainError("catalog spec '" + spec + "' is missing ')'");
  std::vector<std::string> params;
  const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    params.push_back(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (params.size() == 1 && trim(params[0]).empty()) params.clear();
  return catalog(trim(spec.substr(0, open)), params);
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
  return {
      {"cyclic(n)", "cyclic group of order n"},
      {"q8", "quaternion group of order 8"},
      {"d4", "dihedral group of order 8"},
      {"heisenberg(p)", "Heisenberg group mod p, order p^3"},
      {"extraspecial(p,n,+|-)", "extraspecial group of order p^(1+2n)"},
      {"modular16", "modular group M16 = <a,b | a^8, b^2, b^-1 a b = a^5>"},
      {"free_class2_exp_p(d,p)", "d-generator class-2 group with generators of order p, order p^(d+d(d-1)/2)"},
  };
}

std::vector<std::string> standard_instances(std::uint64_t max_order) {
  static const std::vector<std::pair<std::uint64_t, std::string>> all = {
      {1, "cyclic(1)"},
      {2, "cyclic(2)"},
      {3, "cyclic(3)"},
      {4, "cyclic(4)"},
      {6, "cyclic(6)"},
      {8, "cyclic(8)"},
      {8, "q8"},
      {8, "d4"},
      {9, "cyclic(9)"},
      {16, "modular16"},
      {27, "heisenberg(3)"},
      {27, "extraspecial(3,1,-)"},
      {32, "extraspecial(2,2,+)"},
      {32, "extraspecial(2,2,-)"},
      {64, "free_class2_exp_p(3,2)"},
      {125, "heisenberg(5)"},
      {243, "extraspecial(3,2,+)"},
      {729, "free_class2_exp_p(3,3)"},
  };
  std::vector<std::string> out;
  for (const auto& [order, spec] : all)
    if (order <= max_order) out.push_back(spec);
  return out;
}

}  // namespace wordlab
