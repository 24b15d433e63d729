#ifndef HAMGRAPH_EXPR_HPP
#define HAMGRAPH_EXPR_HPP

#include <string>
#include <vector>

#include "localization.hpp"

namespace hamgraph {

// Linear class expressions over the generators, e.g.
//   "tauinf - s(1,1)", "2*s(1,1) + tauh", "-(s(2,1) - s(2,2))".
CohClass2 parse_class(const std::string& text);

// Products of linear expressions separated by top-level '*', e.g.
//   "tauh*tauh", "(s(1,1)+s(2,1))*tauinf*s(2,1)".
std::vector<CohClass2> parse_class_product(const std::string& text);

}  // namespace hamgraph

#endif
