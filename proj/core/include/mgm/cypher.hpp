#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgm/property.hpp"

namespace mgm {

enum class pattern_dir { left_to_right, right_to_left, undirected };

struct node_pattern {
    std::string name;  // synthesized "#n<k>" for anonymous nodes
    std::vector<std::string> labels;
    property_map inline_props;
};

struct edge_pattern {
    std::string name;  // synthesized "#e<k>" for anonymous edges
    std::optional<std::string> etype;
    property_map inline_props;
    std::string left;
    std::string right;
    pattern_dir dir;
};

enum class cmp_op { lt, le, gt, ge, eq, ne, starts_with, ends_with, contains };

auto cmp_op_name(cmp_op op) -> const char *;

// Complementary operator under NOT for the relational family; string
// operators have no complement and keep an explicit negation flag instead.
auto complement(cmp_op op) -> std::optional<cmp_op>;

enum class accessor_kind { property, labels_fn, type_fn, id_fn };

struct entity_ref {
    std::string name;
    accessor_kind accessor;
    std::string key;  // property key when accessor == property

    friend auto operator==(const entity_ref &, const entity_ref &) -> bool = default;
};

struct operand {
    std::optional<property_value> constant;
    std::optional<entity_ref> entity;

    auto is_constant() const -> bool { return constant.has_value(); }
};

struct atomic_condition {
    entity_ref lhs;  // parser normalizes constants to the right-hand side
    cmp_op op;
    operand rhs;
    bool negated = false;
};

// Tree of AND / OR / NOT over atomic conditions.
struct proposition {
    enum class node_kind { atom, negation, conjunction, disjunction };
    node_kind kind;
    std::optional<atomic_condition> atom;
    std::vector<proposition> children;

    static auto make_atom(atomic_condition c) -> proposition
    {
        return {node_kind::atom, std::move(c), {}};
    }
};

enum class return_item_kind { entity_id, property, labels_fn, type_fn, nodes_fn, relationships_fn };

struct return_item {
    return_item_kind kind;
    std::string name;  // entity name, empty for nodes()/relationships()
    std::string key;   // property key

    auto header() const -> std::string;
};

struct return_spec {
    bool count = false;
    std::vector<return_item> items;
    std::optional<std::uint64_t> limit;
};

struct query_ast {
    std::vector<node_pattern> nodes;
    std::vector<edge_pattern> edges;
    std::optional<proposition> where;
    return_spec ret;
};

// Parses the MATCH / WHERE / RETURN subset documented in docs/cypher_grammar.ebnf.
// Throws parse_error with a 1-based position. Queries without at least one
// edge pattern are rejected: the matching pipeline is edge-driven.
auto parse_query(const std::string & text) -> query_ast;

// A conjunction of (possibly negated) atoms: one DNF term.
using conjunction = std::vector<atomic_condition>;

// Logically equivalent DNF. NOT is pushed to the leaves: negated relational
// atoms rewrite to the complementary operator, negated string atoms keep
// their negation flag.
auto to_dnf(const proposition & p) -> std::vector<conjunction>;

// One conjunctive-WHERE query per DNF term; identical MATCH and RETURN.
// Queries without WHERE pass through as a singleton.
auto split_on_or(const query_ast & q) -> std::vector<query_ast>;

enum class condition_class { domain_time, match_time };

// `A.x op constant` can be pushed into domain construction / candidate
// filtering; `A.x op B.y` must wait until matching binds the entities.
auto classify_condition(const atomic_condition & c) -> condition_class;

}
