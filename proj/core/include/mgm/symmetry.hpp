#pragma once

#include "mgm/query_graph.hpp"

namespace mgm {

// A structure-, label-, type- and property-preserving permutation of query
// nodes together with a consistent permutation of query edges.
struct automorphism {
    std::vector<node_id> node_perm;
    std::vector<edge_id> edge_perm;

    friend auto operator==(const automorphism &, const automorphism &) -> bool = default;
};

auto compose(const automorphism & a, const automorphism & b) -> automorphism;  // a after b
auto inverse(const automorphism & a) -> automorphism;

// Order constraints a ≺ b between same-orbit elements; enforced during
// matching as id(image of a) < id(image of b).
struct breaking_conditions {
    std::vector<std::pair<node_id, node_id>> node_conds;
    std::vector<std::pair<edge_id, edge_id>> edge_conds;

    auto empty() const -> bool { return node_conds.empty() && edge_conds.empty(); }
};

// The complete automorphism group, identity included, by backtracking over
// label/degree-compatible node images; every consistent way of matching
// parallel edge groups yields a distinct automorphism.
auto enumerate_automorphisms(const query_graph & q, unsigned max_query_nodes = 12)
    -> std::vector<automorphism>;

// Stabilizer-chain extraction: repeatedly take the orbit holding the smallest
// unfixed id, emit min ≺ x for its other members, and restrict the group to
// automorphisms fixing that min. Node orbits first, then edge orbits under
// the node-fixing subgroup.
auto derive_conditions(const std::vector<automorphism> & auts) -> breaking_conditions;

}
