#include "mgm/eval.hpp"

#include "mgm/errors.hpp"

namespace mgm {

namespace {

    struct resolved {
        // exactly one engaged: scalar value, or a node's label set
        std::optional<property_value> scalar;
        const std::vector<label_id> * labels = nullptr;
        const multigraph * target = nullptr;
        bool missing = false;
    };

    auto resolve(const entity_ref & ref, const binding_view & bv) -> resolved
    {
        resolved out;
        auto node_it = bv.q.node_ids.find(ref.name);
        if (node_it != bv.q.node_ids.end()) {
            auto t = bv.f[node_it->second];
            if (t == unbound) {
                out.missing = true;
                return out;
            }
            switch (ref.accessor) {
                case accessor_kind::property: {
                    auto & props = bv.target.node(t).props;
                    auto it = props.find(ref.key);
                    if (it == props.end())
                        out.missing = true;
                    else
                        out.scalar = it->second;
                    return out;
                }
                case accessor_kind::labels_fn:
                    out.labels = &bv.target.node(t).labels;
                    out.target = &bv.target;
                    return out;
                case accessor_kind::id_fn:
                    out.scalar = property_value(bv.target.orig_node_id(t));
                    return out;
                case accessor_kind::type_fn:
                    throw eval_error("type() applies to edges, '" + ref.name + "' is a node");
            }
        }
        auto edge_it = bv.q.edge_ids.find(ref.name);
        if (edge_it == bv.q.edge_ids.end())
            throw eval_error("unknown entity '" + ref.name + "'");
        auto t = bv.g[edge_it->second];
        if (t == unbound) {
            out.missing = true;
            return out;
        }
        switch (ref.accessor) {
            case accessor_kind::property: {
                auto & props = bv.target.edge(t).props;
                auto it = props.find(ref.key);
                if (it == props.end())
                    out.missing = true;
                else
                    out.scalar = it->second;
                return out;
            }
            case accessor_kind::type_fn:
                out.scalar = property_value(bv.target.type_name(bv.target.edge(t).type));
                return out;
            case accessor_kind::id_fn:
                out.scalar = property_value(bv.target.orig_edge_id(t));
                return out;
            case accessor_kind::labels_fn:
                throw eval_error("labels() applies to nodes, '" + ref.name + "' is an edge");
        }
        return out;
    }

    auto text_of(const property_value & v, const char * op) -> const std::string &
    {
        if (!v.is_text())
            throw eval_error(std::string(op) + " requires text operands, got " + v.to_display());
        return v.as_text();
    }

    auto compare_scalars(const property_value & a, cmp_op op, const property_value & b) -> bool
    {
        switch (op) {
            case cmp_op::eq: return a == b;
            case cmp_op::ne: return a != b;
            case cmp_op::lt: return a.compare(b) < 0;
            case cmp_op::le: return a.compare(b) <= 0;
            case cmp_op::gt: return a.compare(b) > 0;
            case cmp_op::ge: return a.compare(b) >= 0;
            case cmp_op::starts_with: {
                const auto & s = text_of(a, "STARTS WITH");
                const auto & p = text_of(b, "STARTS WITH");
                return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
            }
            case cmp_op::ends_with: {
                const auto & s = text_of(a, "ENDS WITH");
                const auto & p = text_of(b, "ENDS WITH");
                return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
            }
            case cmp_op::contains: {
                const auto & s = text_of(a, "CONTAINS");
                const auto & p = text_of(b, "CONTAINS");
                return s.find(p) != std::string::npos;
            }
        }
        return false;
    }

}

auto eval_atom(const atomic_condition & atom, const binding_view & bv) -> std::optional<bool>
{
    auto lhs = resolve(atom.lhs, bv);
    if (lhs.missing) return std::nullopt;

    resolved rhs;
    if (atom.rhs.is_constant())
        rhs.scalar = *atom.rhs.constant;
    else {
        rhs = resolve(*atom.rhs.entity, bv);
        if (rhs.missing) return std::nullopt;
    }

    bool value;
    if (lhs.labels) {
        // label sets compare by membership: labels(a) = "x" / CONTAINS "x"
        // hold iff x ∈ σ(a); != holds iff x ∉ σ(a)
        if (!rhs.scalar || !rhs.scalar->is_text())
            throw eval_error("labels() compares against a label string");
        auto found = lhs.target->find_label(rhs.scalar->as_text());
        bool member =
            found && std::binary_search(lhs.labels->begin(), lhs.labels->end(), *found);
        switch (atom.op) {
            case cmp_op::eq:
            case cmp_op::contains: value = member; break;
            case cmp_op::ne: value = !member; break;
            default:
                throw eval_error("labels() supports only =, != and CONTAINS");
        }
    }
    else if (rhs.labels) {
        throw eval_error("labels() must appear on the left of a condition");
    }
    else {
        value = compare_scalars(*lhs.scalar, atom.op, *rhs.scalar);
    }

    return atom.negated ? !value : value;
}

auto eval_conjunction(const std::vector<atomic_condition> & atoms, const binding_view & bv)
    -> std::optional<bool>
{
    bool unknown = false;
    for (const auto & atom : atoms) {
        auto v = eval_atom(atom, bv);
        if (!v)
            unknown = true;
        else if (!*v)
            return false;
    }
    if (unknown) return std::nullopt;
    return true;
}

}
