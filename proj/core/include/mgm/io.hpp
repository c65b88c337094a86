#pragma once

#include <string>

#include "mgm/multigraph.hpp"

namespace mgm {

// Canonical interchange format.
//
// Nodes CSV (header required):  id,labels,properties
//   labels      ';'-separated label strings; empty means unlabeled and the
//               loader substitutes the reserved label "_unlabeled"
//   properties  a JSON object literal (may be "{}" or empty)
// Edges CSV (header required):  id,src,dst,type,properties
//
// UTF-8, comma-delimited, RFC-4180 double-quote escaping. Sparse external ids
// are remapped to dense internal ids by ascending external id; the external id
// is retained in the "_orig_id" metadata property.
auto load_graph(const std::string & nodes_path, const std::string & edges_path) -> multigraph;

auto save_graph(const multigraph & g, const std::string & nodes_path,
                const std::string & edges_path) -> void;

}
