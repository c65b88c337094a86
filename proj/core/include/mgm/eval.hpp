#pragma once

#include <limits>
#include <span>

#include "mgm/cypher.hpp"
#include "mgm/multigraph.hpp"
#include "mgm/query_graph.hpp"

namespace mgm {

inline constexpr node_id unbound = std::numeric_limits<std::uint32_t>::max();

// Partial bindings during evaluation; `unbound` marks missing entries.
struct binding_view {
    const query_graph & q;
    const multigraph & target;
    std::span<const node_id> f;
    std::span<const edge_id> g;
};

// Three-valued: nullopt when a referenced property is absent or an entity is
// unbound. Cross-kind ordering throws eval_error.
auto eval_atom(const atomic_condition & atom, const binding_view & bindings)
    -> std::optional<bool>;

// Kleene conjunction over atoms; a match requires definite truth.
auto eval_conjunction(const std::vector<atomic_condition> & atoms, const binding_view & bindings)
    -> std::optional<bool>;

}
