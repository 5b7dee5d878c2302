#pragma once

#include <mutex>
#include <vector>

#include "wordlab/group.hpp"

namespace wordlab::detail {

struct StructureCache {
  std::once_flag generators_once, center_once, derived_once, classes_once, orders_once,
      nilpotent_once;
  std::vector<ElementIndex> generators;
  Subgroup center;
  Subgroup derived;
  ConjugacyClasses classes;
  std::vector<std::uint64_t> orders;
  bool nilpotent = false;
};

std::vector<ElementIndex> compute_generators(const FiniteGroup& g);
Subgroup compute_center(const FiniteGroup& g);
Subgroup compute_derived(const FiniteGroup& g);
ConjugacyClasses compute_classes(const FiniteGroup& g);
std::vector<std::uint64_t> compute_element_orders(const FiniteGroup& g);

}  // namespace wordlab::detail
