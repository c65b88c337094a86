#pragma once

#include "mgm/domains.hpp"

namespace mgm {

enum class ordering_kind { full, random, domain_cardinality, edge_label_frequency, degree_only };

auto ordering_kind_from_name(const std::string & name) -> ordering_kind;
auto ordering_kind_name(ordering_kind kind) -> const char *;

// Processing sequence of query edges; edges of one pair are contiguous, in
// ascending edge id.
struct edge_ordering {
    std::vector<edge_id> sequence;
};

// Fraction of common neighbours; never 0/0 for a connected pair because each
// endpoint neighbours the other.
auto jaccard(const query_graph & q, node_id a, node_id b) -> double;

// The Sc score for one pair at a given constraint factor.
//   cf=0: totDeg(a) * totDeg(b) * Jacc / |Dom|
//   cf=1: totDeg(free node) * Jacc / |Dom|
//   cf=2: 1 / |Dom|
auto pair_score(const query_graph & q, node_id a, node_id b, int cf, node_id free_node,
                std::size_t domain_size) -> double;

// Greedy (CF, Sc) priority ordering: higher CF wins, ties by higher Sc, then
// by smallest (a, b). All edges of the chosen pair enter together.
auto build_ordering(const query_graph & q, const domain_map & domains) -> edge_ordering;

// Simplified orderings used as engine switches; all keep pair edges
// contiguous and skip the CF promotion (only `full` uses it).
//   random               seeded shuffle of pairs
//   domain_cardinality   ascending |Dom|
//   edge_label_frequency ascending target frequency of the pair's rarest type
//   degree_only          descending totDeg(a) * totDeg(b) * Jacc
auto ablation_ordering(ordering_kind kind, const query_graph & q, const domain_map & domains,
                       const multigraph & target, const target_index & idx, std::uint64_t seed)
    -> edge_ordering;

}
