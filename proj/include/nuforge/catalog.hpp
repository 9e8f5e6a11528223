#pragma once

#include <string>
#include <vector>

#include "nuforge/cayley.hpp"

namespace nuforge {

// Built-in group constructors keyed by name. Fixed names: trivial, S3, D8,
// Q8, A4, C2xC2, C2xC4; parametric families: C<n> (cyclic) and D<2m>
// (dihedral of that order). Throws UnknownGroup.
FiniteGroupInput make_catalog_group(const std::string& name);

bool catalog_has(const std::string& name);

// The default verification corpus, in report order.
const std::vector<std::string>& default_corpus();

FiniteGroupInput make_cyclic(std::uint32_t n);
FiniteGroupInput make_dihedral(std::uint32_t order);  // order = 2m, m >= 2
FiniteGroupInput make_quaternion8();
FiniteGroupInput make_symmetric3();
FiniteGroupInput make_alternating4();
FiniteGroupInput direct_product(const FiniteGroupInput& a,
                                const FiniteGroupInput& b, std::string label);

}  // namespace nuforge
