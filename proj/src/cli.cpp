#include "wordlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "wordlab/catalog.hpp"
#include "wordlab/character.hpp"
#include "wordlab/errors.hpp"
#include "wordlab/fiber.hpp"
#include "wordlab/group_io.hpp"
#include "wordlab/normal_form.hpp"
#include "wordlab/verify.hpp"

namespace wordlab {

namespace {

struct RunConfig {
  std::string group;
  std::string other;
  std::string word;
  std::string method = "auto";
  std::string format = "json";
  unsigned workers = 0;
  std::uint64_t budget = 0;  // 0 = unset
  std::uint64_t prime = 0;
  std::size_t k = 1;
  std::vector<std::string> groups;
  std::string words_file;
  std::vector<std::string> claims;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

FiniteGroup load_source(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return catalog_by_spec(source.substr(8));
  if (source.rfind("file:", 0) == 0) return load_group_file(source.substr(5));
  throw UsageError("group source must be catalog:NAME(args) or file:PATH, got '" + source + "'");
}

// "wk(2)", "left_normed(3)", "vn(2)" or plain word text.
Word load_word(const std::string& text) {
  static const std::regex named(R"(\s*(wk|left_normed|vn)\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, named)) {
    const NamedWord kind = m[1] == "wk" ? NamedWord::wk : m[1] == "vn" ? NamedWord::vn : NamedWord::left_normed;
    return build_named_word(kind, std::stoul(m[2]));
  }
  return parse_word(text);
}

CountOptions count_options(const RunConfig& cfg) {
  CountOptions o;
  o.workers = cfg.workers;
  o.budget = kDefaultBudget;
  if (const char* env = std::getenv("WORDLAB_BUDGET")) {
    try {
      std::size_t used = 0;
      o.budget = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("WORDLAB_BUDGET is not a positive integer: '") + env + "'");
    }
  }
  if (cfg.budget != 0) o.budget = cfg.budget;
  if (o.budget == 0) throw UsageError("budget must be positive");
  return o;
}

void header(std::ostream& err, const CountOptions& o) {
  err << "# workers=" << (o.workers == 0 ? static_cast<unsigned>(omp_get_max_threads()) : o.workers)
      << " budget=" << o.budget << "\n";
}

FiberDistribution count_with_method(const FiniteGroup& g, const Word& w, CountMethod method, const CountOptions& o) {
  switch (method) {
    case CountMethod::automatic:
      return count_auto(g, w, o);
    case CountMethod::brute:
      return count_brute_force(g, w, o);
    case CountMethod::central:
      return count_central_quotient(g, w, o);
    case CountMethod::convolve: {
      auto parts = split_disjoint(w);
      if (!parts) throw UsageError("word does not split into blocks on disjoint variables");
      FiberDistribution d = convolve_disjoint(count_auto(g, parts->first, o), count_auto(g, parts->second, o));
      if (d.arity() != w.arity()) {
        // unused variables multiply every count by |G|
        const BigInt f = big_pow(BigInt(g.order()), w.arity() - d.arity());
        std::vector<BigInt> counts = d.counts();
        for (auto& c : counts) c *= f;
        FiberDistribution padded(g, w.arity(), std::move(counts));
        padded.method = d.method;
        d = std::move(padded);
      }
      d.word_text = render(w);
      return d;
    }
    case CountMethod::frobenius: {
      const std::size_t k = w.arity() / 2;
      if (k == 0 || w.arity() % 2 != 0 || !(w == build_named_word(NamedWord::wk, k)))
        throw UsageError("method frobenius applies only to products of commutators [x1,x2]...[x_{2k-1},x_{2k}]");
      FiberDistribution d = frobenius_count_wk(cached_character_table(g), k);
      d.word_text = render(w);
      return d;
    }
  }
  throw UsageError("unknown method");
}

void write_distribution(std::ostream& out, const FiberDistribution& d, const std::string& format) {
  if (format == "json")
    out << export_json(d).dump(2) << "\n";
  else if (format == "csv")
    out << export_csv(d);
  else
    out << export_table(d);
}

std::string tuple_text(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_catalog(std::ostream& out) {
  for (const auto& [name, description] : catalog_entries()) out << name << "\t" << description << "\n";
  return kExitOk;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CountMethod method = parse_count_method(cfg.method);
  const CountOptions o = count_options(cfg);
  const FiniteGroup g = load_source(cfg.group);
  const Word w = load_word(cfg.word);
  header(err, o);
  write_distribution(out, count_with_method(g, w, method, o), cfg.format);
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  const Word w = load_word(cfg.word);
  const NormalForm nf = normalize(w, cfg.prime);
  nlohmann::ordered_json doc;
  doc["word"] = render(w);
  doc["prime"] = cfg.prime;
  doc["canonical"] = canonical_text(nf);
  if (const auto* t1 = std::get_if<Type1Form>(&nf.form)) {
    doc["type"] = 1;
    doc["s"] = t1->s;
    std::vector<std::string> divs;
    for (const auto& d : t1->divisors) divs.push_back(to_decimal(d));
    doc["divisors"] = divs;
  } else {
    const auto& t2 = std::get<Type2PartialForm>(nf.form);
    doc["type"] = 2;
    doc["s1"] = t2.s1;
    doc["d"] = to_decimal(t2.d);
  }
  std::vector<std::vector<std::string>> witness;
  for (std::size_t i = 0; i < nf.witness.rows(); ++i) {
    witness.emplace_back();
    for (std::size_t j = 0; j < nf.witness.cols(); ++j) witness.back().push_back(to_decimal(nf.witness(i, j)));
  }
  doc["witness"] = witness;

  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "key,value\n";
    for (const auto& [key, value] : doc.items())
      out << key << ",\"" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\"\n";
  } else {
    out << doc["canonical"].get<std::string>();
    if (const auto* t1 = std::get_if<Type1Form>(&nf.form))
      out << "  s=" << tuple_text(t1->s);
    else
      out << "  s1=" << std::get<Type2PartialForm>(nf.form).s1;
    out << "\n";
  }
  return kExitOk;
}

int cmd_chartable(const RunConfig& cfg, std::ostream& out) {
  const FiniteGroup g = load_source(cfg.group);
  const CharacterTable& t = cached_character_table(g);
  if (cfg.format == "json") {
    out << export_table_json(t).dump(2) << "\n";
    return kExitOk;
  }
  auto cell = [](std::complex<double> v) {
    const double re = std::round(v.real() * 1e6) / 1e6 + 0.0;
    const double im = std::round(v.imag() * 1e6) / 1e6 + 0.0;
    std::ostringstream os;
    os << re;
    if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
    return os.str();
  };
  const std::string sep = cfg.format == "csv" ? "," : "\t";
  out << "character" << sep << "degree";
  for (auto r : t.representatives()) out << sep << g.label(r);
  out << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << "chi" << i + 1 << sep << t.degrees()[i];
    for (const auto& v : t.values()[i]) out << sep << cell(v);
    out << "\n";
  }
  return kExitOk;
}

VerificationReport verify_one(const std::string& claim, const FiniteGroup& g, const RunConfig& cfg,
                              const std::optional<Word>& word, const CountOptions& o) {
  auto need_word = [&]() -> const Word& {
    if (!word) throw UsageError("verify " + claim + " needs --word");
    return *word;
  };
  if (claim == "thmC") return verify_theorem_C(g, cfg.k, o);
  if (claim == "corD") return verify_corollary_D(g, cfg.k, o);
  if (claim == "rational") return check_rationality(g, need_word(), o);
  if (claim == "chiral") return check_chirality(g, need_word(), o);
  if (claim == "uniform") return check_uniformity_surjective(g, need_word(), o);
  if (claim == "product") {
    if (cfg.other.empty()) throw UsageError("verify product needs --other");
    return check_product_multiplicativity(g, load_source(cfg.other), need_word(), o);
  }
  return verify_bounds(g, need_word(), parse_bound_mode(claim), o);
}

void write_report(std::ostream& out, const VerificationReport& r, const std::string& format) {
  if (format == "json") {
    out << export_report_line(r) << "\n";
    return;
  }
  const std::string sep = format == "csv" ? "," : "\t";
  out << r.claim << sep << r.group << sep << r.word << sep << to_string(r.verdict);
  if (r.counterexample) out << sep << "counterexample " << r.counterexample->label << " N=" << to_decimal(r.counterexample->count) << " bound=" << to_decimal(r.counterexample->bound);
  if (!r.hypothesis.empty()) out << sep << r.hypothesis;
  out << "\n";
}

int cmd_verify(const std::string& claim, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CountOptions o = count_options(cfg);
  const FiniteGroup g = load_source(cfg.group);
  std::optional<Word> word;
  if (!cfg.word.empty()) word = load_word(cfg.word);
  header(err, o);
  const VerificationReport r = verify_one(claim, g, cfg, word, o);
  write_report(out, r, cfg.format);
  return r.verdict == Verdict::fails ? kExitClaimFailed : kExitOk;
}

std::vector<std::string> read_words_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open words file '" + path + "'");
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  return words;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CountOptions o = count_options(cfg);
  std::vector<std::string> claims = cfg.claims;
  if (claims.empty()) claims = {"amit", "gamit", "thmA", "thmB", "rational", "chiral", "uniform"};
  for (const auto& c : claims) {
    static const std::vector<std::string> known = {"amit", "gamit", "thmA", "thmB", "solomon",
                                                   "rational", "chiral", "uniform"};
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw UsageError("sweep claim must be one of amit, gamit, thmA, thmB, solomon, rational, chiral, uniform; got '" +
                       c + "'");
  }
  std::vector<FiniteGroup> groups;
  for (const auto& s : cfg.groups) groups.push_back(load_source(s));
  std::vector<Word> words;
  for (const auto& text : read_words_file(cfg.words_file)) words.push_back(load_word(text));
  header(err, o);

  int code = kExitOk;
  for (const auto& g : groups)
    for (const auto& w : words)
      for (const auto& c : claims) {
        const VerificationReport r = verify_one(c, g, cfg, w, o);
        write_report(out, r, cfg.format);
        if (r.verdict == Verdict::fails) code = kExitClaimFailed;
      }
  return code;
}

int fail(std::ostream& err, const char* kind, const std::string& what, int code) {
  std::string line = what;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << kind << ": " << line << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact word-map fiber counting on finite groups", "wordlab"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats = {"json", "csv", "table"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "OpenMP threads (0 = available parallelism)");
    sub->add_option("--budget", cfg.budget, "maximum word evaluations (default 1e9 or WORDLAB_BUDGET)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember(formats));
  };

  auto* cat = app.add_subcommand("catalog", "catalog inspection");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog groups");

  auto* count = app.add_subcommand("count", "fiber distribution of a word");
  count->add_option("--group", cfg.group, "catalog:NAME(args) or file:PATH")->required();
  count->add_option("--word", cfg.word, "word text or wk(n) / left_normed(n) / vn(n)")->required();
  count->add_option("--method", cfg.method, "auto, brute, central, convolve, frobenius");
  add_common(count);

  auto* reduce = app.add_subcommand("reduce", "canonical class-2 representative of a word");
  reduce->add_option("--word", cfg.word, "word text")->required();
  reduce->add_option("--prime", cfg.prime, "prime p")->required();
  reduce->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember(formats));

  auto* chartable = app.add_subcommand("chartable", "character table");
  chartable->add_option("--group", cfg.group, "catalog:NAME(args) or file:PATH")->required();
  chartable->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "check one claim on one group");
  std::string claim;
  verify->add_option("claim", claim, "amit|gamit|thmA|thmB|solomon|thmC|corD|rational|chiral|product|uniform")
      ->required()
      ->check(CLI::IsMember({"amit", "gamit", "thmA", "thmB", "solomon", "thmC", "corD", "rational", "chiral",
                             "product", "uniform"}));
  verify->add_option("--group", cfg.group, "catalog:NAME(args) or file:PATH")->required();
  verify->add_option("--word", cfg.word, "word text or named word");
  verify->add_option("--k", cfg.k, "number of commutators for thmC / corD")->check(CLI::PositiveNumber);
  verify->add_option("--other", cfg.other, "second factor for product");
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "verify claims over groups x words, one JSON report per line");
  sweep->add_option("--groups", cfg.groups, "group sources")->required();
  sweep->add_option("--words-file", cfg.words_file, "one word per line, # comments")->required();
  sweep->add_option("--claims", cfg.claims, "claims to check (default amit gamit thmA thmB rational chiral uniform)");
  add_common(sweep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, "usage", e.what(), kExitUsage);
  }

  try {
    if (*cat) return cmd_catalog(out);
    if (*count) return cmd_count(cfg, out, err);
    if (*reduce) return cmd_reduce(cfg, out);
    if (*chartable) return cmd_chartable(cfg, out);
    if (*verify) return cmd_verify(claim, cfg, out, err);
    if (*sweep) return cmd_sweep(cfg, out, err);
  } catch (const BudgetExceeded& e) {
    return fail(err, "budget", e.what(), kExitBudget);
  } catch (const OracleDisagreement& e) {
    return fail(err, "oracle", e.what(), kExitOracle);
  } catch (const NumericFailure& e) {
    return fail(err, "numeric", e.what(), kExitOracle);
  } catch (const ParseError& e) {
    return fail(err, "parse", e.what(), kExitUsage);
  } catch (const InvalidGroup& e) {
    return fail(err, "group", e.what(), kExitUsage);
  } catch (const Error& e) {
    return fail(err, "input", e.what(), kExitUsage);
  } catch (const nlohmann::json::exception& e) {
    return fail(err, "input", e.what(), kExitUsage);
  }
  return fail(err, "usage", "no subcommand", kExitUsage);
}

}  // namespace wordlab
