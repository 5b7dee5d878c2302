#pragma once

#include <string>

#include <json.hpp>

#include "wordlab/group.hpp"

namespace wordlab {

/// {"format":"cayley-v1","name":str,"order":n,"table":[[...]...]}
CayleyGroup load_cayley(const nlohmann::json& doc, ValidationOptions options = {});
nlohmann::json save_cayley(const FiniteGroup& g);

/// {"format":"pc2-v1","name":str,"orders":[...],"powers":{"i":[...]},"commutators":{"i,j":[...]}}
PcPresentation load_pc(const nlohmann::json& doc);
nlohmann::json save_pc(const PcPresentation& p);

/// pc2-v1 for presentation-backed groups, cayley-v1 otherwise.
nlohmann::json group_document(const FiniteGroup& g);

/// Dispatches on "format".
FiniteGroup load_group(const nlohmann::json& doc, ValidationOptions options = {});
FiniteGroup load_group_file(const std::string& path, ValidationOptions options = {});

}  // namespace wordlab
