#include "mgm/cypher.hpp"
#include "mgm/errors.hpp"

namespace mgm {

auto cmp_op_name(cmp_op op) -> const char *
{
    switch (op) {
        case cmp_op::lt: return "<";
        case cmp_op::le: return "<=";
        case cmp_op::gt: return ">";
        case cmp_op::ge: return ">=";
        case cmp_op::eq: return "=";
        case cmp_op::ne: return "!=";
        case cmp_op::starts_with: return "STARTS WITH";
        case cmp_op::ends_with: return "ENDS WITH";
        case cmp_op::contains: return "CONTAINS";
    }
    return "?";
}

auto complement(cmp_op op) -> std::optional<cmp_op>
{
    switch (op) {
        case cmp_op::lt: return cmp_op::ge;
        case cmp_op::le: return cmp_op::gt;
        case cmp_op::gt: return cmp_op::le;
        case cmp_op::ge: return cmp_op::lt;
        case cmp_op::eq: return cmp_op::ne;
        case cmp_op::ne: return cmp_op::eq;
        default: return std::nullopt;
    }
}

namespace {

    auto negate_atom(atomic_condition c) -> atomic_condition
    {
        if (c.negated) {
            c.negated = false;
            return c;
        }
        if (auto comp = complement(c.op)) {
            c.op = *comp;
            return c;
        }
        c.negated = true;
        return c;
    }

    // negation-normal form: NOT pushed onto the atoms
    auto to_nnf(const proposition & p, bool negate) -> proposition
    {
        using k = proposition::node_kind;
        switch (p.kind) {
            case k::atom:
                return proposition::make_atom(negate ? negate_atom(*p.atom) : *p.atom);
            case k::negation: return to_nnf(p.children.front(), !negate);
            case k::conjunction:
            case k::disjunction: {
                bool is_and = (p.kind == k::conjunction) != negate;
                proposition out{is_and ? k::conjunction : k::disjunction, std::nullopt, {}};
                for (const auto & ch : p.children) out.children.push_back(to_nnf(ch, negate));
                return out;
            }
        }
        throw std::logic_error("to_nnf: bad proposition node");
    }

    auto dnf_of_nnf(const proposition & p) -> std::vector<conjunction>
    {
        using k = proposition::node_kind;
        switch (p.kind) {
            case k::atom: return {{*p.atom}};
            case k::disjunction: {
                std::vector<conjunction> out;
                for (const auto & ch : p.children) {
                    auto terms = dnf_of_nnf(ch);
                    out.insert(out.end(), std::make_move_iterator(terms.begin()),
                               std::make_move_iterator(terms.end()));
                }
                return out;
            }
            case k::conjunction: {
                std::vector<conjunction> out = {{}};
                for (const auto & ch : p.children) {
                    auto terms = dnf_of_nnf(ch);
                    std::vector<conjunction> next;
                    next.reserve(out.size() * terms.size());
                    for (const auto & left : out)
                        for (const auto & right : terms) {
                            conjunction merged = left;
                            merged.insert(merged.end(), right.begin(), right.end());
                            next.push_back(std::move(merged));
                        }
                    out = std::move(next);
                }
                return out;
            }
            case k::negation: break;
        }
        throw std::logic_error("dnf_of_nnf: negation not pushed down");
    }

    auto conjunction_to_tree(const conjunction & term) -> proposition
    {
        if (term.size() == 1) return proposition::make_atom(term.front());
        proposition p{proposition::node_kind::conjunction, std::nullopt, {}};
        for (const auto & a : term) p.children.push_back(proposition::make_atom(a));
        return p;
    }

}

auto to_dnf(const proposition & p) -> std::vector<conjunction>
{
    return dnf_of_nnf(to_nnf(p, false));
}

auto split_on_or(const query_ast & q) -> std::vector<query_ast>
{
    if (!q.where) return {q};
    auto terms = to_dnf(*q.where);
    std::vector<query_ast> out;
    out.reserve(terms.size());
    for (const auto & term : terms) {
        query_ast branch = q;
        branch.where = conjunction_to_tree(term);
        out.push_back(std::move(branch));
    }
    return out;
}

auto classify_condition(const atomic_condition & c) -> condition_class
{
    return c.rhs.is_constant() ? condition_class::domain_time : condition_class::match_time;
}

}
