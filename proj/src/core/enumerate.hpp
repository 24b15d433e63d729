#ifndef HAMGRAPH_ENUMERATE_HPP
#define HAMGRAPH_ENUMERATE_HPP

#include <vector>

#include "graph.hpp"

namespace hamgraph {

struct EnumerateBounds {
  size_t max_edges = 4;
  long long max_label = 2;
  long long max_denominator = 1;
  // non-spec caps that keep the stream finite; documented defaults
  long long max_genus = 2;
  long long grid_span = 2;  // heights and areas range over {k/den : 1 <= k <= span*den}
};

// Every realizable graph within the bounds, canonical, deduplicated,
// deterministically ordered.  Realizability means validate() passes and the
// graph reduces to a minimal model.
std::vector<ExtendedGraph> enumerate_graphs(const EnumerateBounds& b);

}  // namespace hamgraph

#endif
