#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/group.hpp"

namespace wordlab {

/// Named groups. Accepted names (params in parentheses):
///   cyclic(n), q8, d4, heisenberg(p), extraspecial(p,n,+|-), modular16,
///   free_class2_exp_p(d,p)
/// Extraspecial groups are central products of n two-generator pieces
/// [x_i,y_i] = z. The + type has x_i^p = y_i^p = 1; the - type sets x_1^p = z
/// (and y_1^2 = z when p = 2, giving Q8 as the first factor).
/// free_class2_exp_p(d,p) is generated by d elements of order p with
/// independent central commutators; it has order p^{d + d(d-1)/2} and exponent
/// p for odd p (exponent 4 when p = 2).
FiniteGroup catalog(const std::string& name, const std::vector<std::string>& params = {});

/// Parses "name(arg,arg,...)" or bare "name".
FiniteGroup catalog_by_spec(const std::string& spec);

/// Fixed list of concrete catalog specs used by sweeps, ascending by order,
/// restricted to order <= max_order.
std::vector<std::string> standard_instances(std::uint64_t max_order = 1000);

/// Catalog names with a one-line description, for `catalog list`.
std::vector<std::pair<std::string, std::string>> catalog_entries();

}  // namespace wordlab
