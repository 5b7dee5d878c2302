#include "wordlab/group_io.hpp"

#include <fstream>

#include "wordlab/errors.hpp"

namespace wordlab {

using nlohmann::json;

namespace {

std::vector<std::uint32_t> exponent_vector(const json& v, std::size_t n, const std::string& what) {
  if (!v.is_array() || v.size() != n) throw InvalidGroup(what + ": expected " + std::to_string(n) + " exponents");
  std::vector<std::uint32_t> out;
  for (const auto& e : v) {
    if (!e.is_number_integer() || e.get<long long>() < 0) throw InvalidGroup(what + ": bad exponent");
    out.push_back(e.get<std::uint32_t>());
  }
  return out;
}

std::size_t parse_index(const std::string& s, std::size_t n, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw InvalidGroup(what + ": bad generator index '" + s + "'");
  }
  if (pos != s.size() || v < 1 || v > n) throw InvalidGroup(what + ": bad generator index '" + s + "'");
  return v - 1;
}

}  // namespace

CayleyGroup load_cayley(const json& doc, ValidationOptions options) {
  try {
    if (doc.value("format", "") != "cayley-v1") throw InvalidGroup("expected format cayley-v1");
    const auto n = doc.at("order").get<std::uint64_t>();
    if (n == 0 || n > kMaxGroupOrder) throw InvalidGroup("unsupported order");
    const auto& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != n) throw InvalidGroup("table must have `order` rows");
    std::vector<ElementIndex> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) throw InvalidGroup("table rows must have `order` entries");
      for (const auto& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0) throw InvalidGroup("table entries must be indices");
        table.push_back(v.get<ElementIndex>());
      }
    }
    return CayleyGroup(doc.value("name", "cayley"), static_cast<std::uint32_t>(n), std::move(table), options);
  } catch (const json::exception& e) {
    throw InvalidGroup(std::string("malformed Cayley document: ") + e.what());
  }
}

json save_cayley(const FiniteGroup& g) {
  CayleyGroup c = g.cayley() ? *g.cayley() : to_cayley(g);
  const std::uint32_t n = c.order();
  json rows = json::array();
  for (std::uint32_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::uint32_t j = 0; j < n; ++j) row.push_back(c.table()[std::size_t{i} * n + j]);
    rows.push_back(std::move(row));
  }
  return json{{"format", "cayley-v1"}, {"name", g.name()}, {"order", n}, {"table", std::move(rows)}};
}

PcPresentation load_pc(const json& doc) {
  try {
    if (doc.value("format", "") != "pc2-v1") throw InvalidGroup("expected format pc2-v1");
    std::vector<std::uint32_t> orders;
    for (const auto& r : doc.at("orders")) orders.push_back(r.get<std::uint32_t>());
    const std::size_t n = orders.size();
    PcPresentation p(doc.value("name", "pc"), std::move(orders));
    if (doc.contains("powers")) {
      for (const auto& [key, value] : doc.at("powers").items()) {
        const std::size_t i = parse_index(key, n, "powers");
        p.powers[i] = exponent_vector(value, n, "powers[" + key + "]");
      }
    }
    if (doc.contains("commutators")) {
      for (const auto& [key, value] : doc.at("commutators").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw InvalidGroup("commutator key must be \"i,j\"");
        const std::size_t i = parse_index(key.substr(0, comma), n, "commutators");
        const std::size_t j = parse_index(key.substr(comma + 1), n, "commutators");
        if (i >= j) throw InvalidGroup("commutator keys need i < j");
        p.commutators[i][j] = exponent_vector(value, n, "commutators[" + key + "]");
      }
    }
    return p;
  } catch (const json::exception& e) {
    throw InvalidGroup(std::string("malformed PC document: ") + e.what());
  }
}

json save_pc(const PcPresentation& p) {
  json powers = json::object();
  json comms = json::object();
  const std::size_t n = p.size();
  auto nontrivial = [](const std::vector<std::uint32_t>& v) {
    return std::any_of(v.begin(), v.end(), [](std::uint32_t e) { return e != 0; });
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (nontrivial(p.powers[i])) powers[std::to_string(i + 1)] = p.powers[i];
    for (std::size_t j = i + 1; j < n; ++j)
      if (nontrivial(p.commutators[i][j]))
        comms[std::to_string(i + 1) + "," + std::to_string(j + 1)] = p.commutators[i][j];
  }
  return json{{"format", "pc2-v1"}, {"name", p.name}, {"orders", p.orders}, {"powers", powers},
              {"commutators", comms}};
}

FiniteGroup load_group(const json& doc, ValidationOptions options) {
  const std::string format = doc.is_object() ? doc.value("format", "") : "";
  if (format == "cayley-v1") return FiniteGroup(load_cayley(doc, options));
  if (format == "pc2-v1") return FiniteGroup(PcClass2Group(load_pc(doc)), options);
  throw InvalidGroup("unknown group document format '" + format + "'");
}

FiniteGroup load_group_file(const std::string& path, ValidationOptions options) {
  std::ifstream in(path);
  if (!in) throw InvalidGroup("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidGroup("malformed JSON in " + path + ": " + e.what());
  }
  return load_group(doc, options);
}

json group_document(const FiniteGroup& g) {
  if (g.pc() == nullptr) return save_cayley(g);
  json doc = save_pc(g.pc()->presentation());
  doc["name"] = g.name();
  return doc;
}

}  // namespace wordlab
