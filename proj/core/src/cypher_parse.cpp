#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "mgm/cypher.hpp"
#include "mgm/errors.hpp"

namespace mgm {

namespace {

    enum class tok {
        identifier, string_lit, number_lit,
        lparen, rparen, lbracket, rbracket, lbrace, rbrace,
        colon, semicolon, comma, dot,
        dash, arrow_right, arrow_left,   // -  ->  <-
        lt, le, gt, ge, eq, ne,
        end
    };

    struct token {
        tok kind;
        std::string text;
        int line;
        int column;
    };

    auto upper(std::string s) -> std::string
    {
        for (auto & c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return s;
    }

    struct lexer {
        const std::string & text;
        std::size_t pos = 0;
        int line = 1, column = 1;

        explicit lexer(const std::string & t) : text(t) {}

        auto error(const std::string & what, int l, int c) -> void { throw parse_error(what, l, c); }

        auto peek_char() const -> char { return pos < text.size() ? text[pos] : '\0'; }

        auto advance() -> char
        {
            char c = text[pos++];
            if (c == '\n') {
                ++line;
                column = 1;
            }
            else
                ++column;
            return c;
        }

        auto next() -> token
        {
            while (pos < text.size() &&
                   std::isspace(static_cast<unsigned char>(text[pos])))
                advance();
            int l = line, c = column;
            if (pos >= text.size()) return {tok::end, "", l, c};

            char ch = advance();
            switch (ch) {
                case '(': return {tok::lparen, "(", l, c};
                case ')': return {tok::rparen, ")", l, c};
                case '[': return {tok::lbracket, "[", l, c};
                case ']': return {tok::rbracket, "]", l, c};
                case '{': return {tok::lbrace, "{", l, c};
                case '}': return {tok::rbrace, "}", l, c};
                case ':': return {tok::colon, ":", l, c};
                case ';': return {tok::semicolon, ";", l, c};
                case ',': return {tok::comma, ",", l, c};
                case '.': return {tok::dot, ".", l, c};
                case '=': return {tok::eq, "=", l, c};
                case '-':
                    if (peek_char() == '>') {
                        advance();
                        return {tok::arrow_right, "->", l, c};
                    }
                    if (std::isdigit(static_cast<unsigned char>(peek_char()))) {
                        auto t = lex_number(l, c);
                        t.text = "-" + t.text;
                        return t;
                    }
                    return {tok::dash, "-", l, c};
                case '<':
                    if (peek_char() == '-') {
                        advance();
                        return {tok::arrow_left, "<-", l, c};
                    }
                    if (peek_char() == '=') {
                        advance();
                        return {tok::le, "<=", l, c};
                    }
                    if (peek_char() == '>') {  // <> accepted as !=
                        advance();
                        return {tok::ne, "<>", l, c};
                    }
                    return {tok::lt, "<", l, c};
                case '>':
                    if (peek_char() == '=') {
                        advance();
                        return {tok::ge, ">=", l, c};
                    }
                    return {tok::gt, ">", l, c};
                case '!':
                    if (peek_char() == '=') {
                        advance();
                        return {tok::ne, "!=", l, c};
                    }
                    error("unexpected '!'", l, c);
                    break;
                case '\'':
                case '"': return lex_string(ch, l, c);
                default: break;
            }

            if (std::isdigit(static_cast<unsigned char>(ch))) {
                --pos;  // number lexer re-reads; column bookkeeping is close enough
                --column;
                return lex_number(l, c);
            }
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string s(1, ch);
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    s += advance();
                return {tok::identifier, s, l, c};
            }
            error(std::string("unexpected character '") + ch + "'", l, c);
            return {tok::end, "", l, c};
        }

        auto lex_number(int l, int c) -> token
        {
            std::string s;
            bool is_float = false;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                s += advance();
            if (pos + 1 < text.size() && text[pos] == '.' &&
                std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
                is_float = true;
                s += advance();
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    s += advance();
            }
            return {tok::number_lit, (is_float ? "f" : "i") + s, l, c};
        }

        auto lex_string(char quote, int l, int c) -> token
        {
            std::string s;
            while (true) {
                if (pos >= text.size()) error("unterminated string literal", l, c);
                char ch = advance();
                if (ch == quote) break;
                if (ch == '\\' && pos < text.size())
                    ch = advance();
                s += ch;
            }
            return {tok::string_lit, s, l, c};
        }
    };

    const std::unordered_set<std::string> reserved = {
        "MATCH", "WHERE", "RETURN", "AND", "OR", "NOT", "LIMIT",
        "STARTS", "ENDS", "CONTAINS", "WITH", "TRUE", "FALSE"};

    struct parser {
        lexer lex;
        token cur;
        int anon_nodes = 0, anon_edges = 0;

        explicit parser(const std::string & text) : lex(text) { cur = this->lex.next(); }

        [[noreturn]] auto error(const std::string & what) -> void
        {
            throw parse_error(what, cur.line, cur.column);
        }

        auto advance() -> token
        {
            auto t = cur;
            cur = lex.next();
            return t;
        }

        auto accept(tok k) -> bool
        {
            if (cur.kind != k) return false;
            advance();
            return true;
        }

        auto expect(tok k, const std::string & what) -> token
        {
            if (cur.kind != k) error("expected " + what);
            return advance();
        }

        auto keyword(const std::string & kw) const -> bool
        {
            return cur.kind == tok::identifier && upper(cur.text) == kw;
        }

        auto accept_keyword(const std::string & kw) -> bool
        {
            if (!keyword(kw)) return false;
            advance();
            return true;
        }

        auto identifier(const std::string & what) -> std::string
        {
            if (cur.kind != tok::identifier) error("expected " + what);
            if (reserved.count(upper(cur.text)))
                error("'" + cur.text + "' is a reserved word, expected " + what);
            return advance().text;
        }

        // ---- literals -------------------------------------------------

        auto constant() -> property_value
        {
            if (cur.kind == tok::string_lit) return property_value(advance().text);
            if (cur.kind == tok::number_lit) {
                auto t = advance();
                if (t.text[0] == 'f') return property_value(std::stod(t.text.substr(1)));
                return property_value(static_cast<std::int64_t>(std::stoll(t.text.substr(1))));
            }
            if (accept_keyword("TRUE")) return property_value(true);
            if (accept_keyword("FALSE")) return property_value(false);
            error("expected a constant (string, number or boolean)");
        }

        auto property_block() -> property_map
        {
            property_map props;
            expect(tok::lbrace, "'{'");
            if (!accept(tok::rbrace)) {
                while (true) {
                    auto key = identifier("a property name");
                    expect(tok::colon, "':'");
                    property_value v = (cur.kind == tok::identifier && !keyword("TRUE") &&
                                        !keyword("FALSE"))
                                           ? property_value(advance().text)  // bareword string
                                           : constant();
                    if (auto [it, inserted] = props.emplace(key, v); !inserted && !(it->second == v))
                        error("conflicting values for inline property '" + key + "'");
                    if (accept(tok::rbrace)) break;
                    expect(tok::comma, "',' or '}'");
                }
            }
            return props;
        }

        // ---- MATCH ----------------------------------------------------

        auto label_list() -> std::vector<std::string>
        {
            // (a:director;actor) and (a:director:actor) both work
            std::vector<std::string> labels;
            labels.push_back(identifier("a label"));
            while (accept(tok::semicolon) || accept(tok::colon))
                labels.push_back(identifier("a label"));
            return labels;
        }

        auto node_pat(query_ast & ast, std::unordered_map<std::string, std::size_t> & by_name)
            -> std::string
        {
            expect(tok::lparen, "'('");
            node_pattern pat;
            if (cur.kind == tok::identifier && !reserved.count(upper(cur.text)))
                pat.name = advance().text;
            if (accept(tok::colon)) pat.labels = label_list();
            if (cur.kind == tok::lbrace) pat.inline_props = property_block();
            expect(tok::rparen, "')'");

            if (pat.name.empty()) pat.name = "#n" + std::to_string(anon_nodes++);

            auto it = by_name.find(pat.name);
            if (it == by_name.end()) {
                by_name.emplace(pat.name, ast.nodes.size());
                ast.nodes.push_back(pat);
            }
            else {
                // re-mention refers to the same query node; constraints merge
                auto & existing = ast.nodes[it->second];
                for (const auto & l : pat.labels)
                    if (std::find(existing.labels.begin(), existing.labels.end(), l) ==
                        existing.labels.end())
                        existing.labels.push_back(l);
                for (const auto & [k, v] : pat.inline_props)
                    if (auto [jt, ins] = existing.inline_props.emplace(k, v);
                        !ins && !(jt->second == v))
                        error("conflicting values for inline property '" + k + "' of '" +
                              pat.name + "'");
            }
            return pat.name;
        }

        auto edge_body(edge_pattern & pat, std::unordered_set<std::string> & edge_names) -> void
        {
            expect(tok::lbracket, "'['");
            if (cur.kind == tok::identifier && !reserved.count(upper(cur.text)))
                pat.name = advance().text;
            if (accept(tok::colon)) pat.etype = identifier("an edge type");
            if (cur.kind == tok::lbrace) pat.inline_props = property_block();
            expect(tok::rbracket, "']'");
            if (pat.name.empty()) pat.name = "#e" + std::to_string(anon_edges++);
            if (!edge_names.insert(pat.name).second)
                error("edge name '" + pat.name + "' is used twice");
        }

        auto match_clause(query_ast & ast) -> void
        {
            std::unordered_map<std::string, std::size_t> nodes_by_name;
            std::unordered_set<std::string> edge_names;
            do {
                auto left = node_pat(ast, nodes_by_name);
                while (cur.kind == tok::dash || cur.kind == tok::arrow_left) {
                    edge_pattern pat;
                    if (accept(tok::arrow_left)) {
                        edge_body(pat, edge_names);
                        expect(tok::dash, "'-'");
                        pat.dir = pattern_dir::right_to_left;
                    }
                    else {
                        advance();  // '-'
                        edge_body(pat, edge_names);
                        if (accept(tok::arrow_right))
                            pat.dir = pattern_dir::left_to_right;
                        else if (accept(tok::dash))
                            pat.dir = pattern_dir::undirected;
                        else
                            error("expected '->' or '-' after ']'");
                    }
                    auto right = node_pat(ast, nodes_by_name);
                    pat.left = left;
                    pat.right = right;
                    ast.edges.push_back(std::move(pat));
                    left = right;
                }
            } while (accept(tok::comma));
        }

        // ---- WHERE ----------------------------------------------------

        auto entity_operand() -> operand
        {
            if (keyword("LABELS") || keyword("TYPE") || keyword("ID")) {
                auto fn = upper(advance().text);
                expect(tok::lparen, "'('");
                auto name = identifier("an entity name");
                expect(tok::rparen, "')'");
                auto acc = fn == "LABELS" ? accessor_kind::labels_fn
                         : fn == "TYPE"   ? accessor_kind::type_fn
                                          : accessor_kind::id_fn;
                return {std::nullopt, entity_ref{name, acc, ""}};
            }
            auto name = identifier("an entity name");
            expect(tok::dot, "'.' (conditions use entity.property)");
            auto key = identifier("a property name");
            return {std::nullopt, entity_ref{name, accessor_kind::property, key}};
        }

        auto operand_any() -> operand
        {
            if (cur.kind == tok::string_lit || cur.kind == tok::number_lit || keyword("TRUE") ||
                keyword("FALSE"))
                return {constant(), std::nullopt};
            return entity_operand();
        }

        auto comparison_op() -> std::optional<cmp_op>
        {
            switch (cur.kind) {
                case tok::lt: advance(); return cmp_op::lt;
                case tok::le: advance(); return cmp_op::le;
                case tok::gt: advance(); return cmp_op::gt;
                case tok::ge: advance(); return cmp_op::ge;
                case tok::eq: advance(); return cmp_op::eq;
                case tok::ne: advance(); return cmp_op::ne;
                default: break;
            }
            if (accept_keyword("STARTS")) {
                if (!accept_keyword("WITH")) error("expected WITH after STARTS");
                return cmp_op::starts_with;
            }
            if (accept_keyword("ENDS")) {
                if (!accept_keyword("WITH")) error("expected WITH after ENDS");
                return cmp_op::ends_with;
            }
            if (accept_keyword("CONTAINS")) return cmp_op::contains;
            return std::nullopt;
        }

        auto atom() -> atomic_condition
        {
            int l = cur.line, c = cur.column;
            auto lhs = operand_any();
            auto op = comparison_op();
            if (!op) error("expected a comparison operator");
            auto rhs = operand_any();

            if (lhs.is_constant() && rhs.is_constant())
                throw parse_error("condition must reference at least one MATCH entity", l, c);
            if (lhs.is_constant()) {
                // normalize constants to the right: mirror relational operators
                static const std::unordered_map<cmp_op, cmp_op> mirror = {
                    {cmp_op::lt, cmp_op::gt}, {cmp_op::le, cmp_op::ge},
                    {cmp_op::gt, cmp_op::lt}, {cmp_op::ge, cmp_op::le},
                    {cmp_op::eq, cmp_op::eq}, {cmp_op::ne, cmp_op::ne}};
                auto it = mirror.find(*op);
                if (it == mirror.end())
                    throw parse_error("string operators need the entity on the left", l, c);
                return {*rhs.entity, it->second, std::move(lhs), false};
            }
            return {*lhs.entity, *op, std::move(rhs), false};
        }

        auto where_unary() -> proposition
        {
            if (accept_keyword("NOT")) {
                proposition p{proposition::node_kind::negation, std::nullopt, {}};
                p.children.push_back(where_unary());
                return p;
            }
            if (cur.kind == tok::lparen) {
                // lookahead: '(' starts a parenthesized proposition here (atoms
                // never start with '(' in this grammar)
                advance();
                auto p = where_or();
                expect(tok::rparen, "')'");
                return p;
            }
            return proposition::make_atom(atom());
        }

        auto where_and() -> proposition
        {
            auto p = where_unary();
            while (accept_keyword("AND")) {
                proposition conj{proposition::node_kind::conjunction, std::nullopt, {}};
                conj.children.push_back(std::move(p));
                conj.children.push_back(where_unary());
                p = std::move(conj);
            }
            return p;
        }

        auto where_or() -> proposition
        {
            auto p = where_and();
            while (accept_keyword("OR")) {
                proposition disj{proposition::node_kind::disjunction, std::nullopt, {}};
                disj.children.push_back(std::move(p));
                disj.children.push_back(where_and());
                p = std::move(disj);
            }
            return p;
        }

        // ---- RETURN ---------------------------------------------------

        auto return_one() -> return_item
        {
            if (accept_keyword("NODES")) {
                expect(tok::lparen, "'('");
                expect(tok::rparen, "')'");
                return {return_item_kind::nodes_fn, "", ""};
            }
            if (accept_keyword("RELATIONSHIPS")) {
                expect(tok::lparen, "'('");
                expect(tok::rparen, "')'");
                return {return_item_kind::relationships_fn, "", ""};
            }
            if (accept_keyword("LABELS")) {
                expect(tok::lparen, "'('");
                auto name = identifier("an entity name");
                expect(tok::rparen, "')'");
                return {return_item_kind::labels_fn, name, ""};
            }
            if (accept_keyword("TYPE")) {
                expect(tok::lparen, "'('");
                auto name = identifier("an entity name");
                expect(tok::rparen, "')'");
                return {return_item_kind::type_fn, name, ""};
            }
            auto name = identifier("an entity name");
            if (accept(tok::dot)) {
                auto key = identifier("a property name");
                return {return_item_kind::property, name, key};
            }
            return {return_item_kind::entity_id, name, ""};
        }

        auto return_clause(query_ast & ast) -> void
        {
            if (keyword("COUNT")) {
                advance();
                expect(tok::lparen, "'('");
                expect(tok::rparen, "')'");
                ast.ret.count = true;
            }
            else {
                do {
                    ast.ret.items.push_back(return_one());
                } while (accept(tok::comma));
            }
            if (accept_keyword("LIMIT")) {
                if (cur.kind != tok::number_lit || cur.text[0] != 'i')
                    error("LIMIT expects a positive integer");
                auto n = std::stoll(advance().text.substr(1));
                if (n < 1) error("LIMIT expects a positive integer");
                ast.ret.limit = static_cast<std::uint64_t>(n);
            }
        }

        // ---- top level ------------------------------------------------

        auto parse() -> query_ast
        {
            query_ast ast;
            if (!accept_keyword("MATCH")) error("query must start with MATCH");
            match_clause(ast);
            if (ast.edges.empty())
                error("MATCH must contain at least one edge pattern; node-only queries are not supported");
            if (accept_keyword("WHERE")) ast.where = where_or();
            if (!accept_keyword("RETURN")) error("RETURN clause is mandatory");
            return_clause(ast);
            if (cur.kind != tok::end) error("unexpected trailing input");
            validate(ast);
            return ast;
        }

        auto validate(const query_ast & ast) -> void
        {
            std::unordered_map<std::string, char> names;  // 'n' or 'e'
            for (const auto & n : ast.nodes) names.emplace(n.name, 'n');
            for (const auto & e : ast.edges) names.emplace(e.name, 'e');

            auto check_ref = [&](const entity_ref & ref) {
                auto it = names.find(ref.name);
                if (it == names.end())
                    throw parse_error("'" + ref.name + "' is not declared in MATCH", 1, 1);
                if (ref.accessor == accessor_kind::labels_fn && it->second != 'n')
                    throw parse_error("labels() expects a node, '" + ref.name + "' is an edge", 1, 1);
                if (ref.accessor == accessor_kind::type_fn && it->second != 'e')
                    throw parse_error("type() expects an edge, '" + ref.name + "' is a node", 1, 1);
            };

            if (ast.where) {
                auto walk = [&](auto && self, const proposition & p) -> void {
                    if (p.kind == proposition::node_kind::atom) {
                        check_ref(p.atom->lhs);
                        if (p.atom->rhs.entity) check_ref(*p.atom->rhs.entity);
                        if (p.atom->op == cmp_op::starts_with || p.atom->op == cmp_op::ends_with ||
                            p.atom->op == cmp_op::contains) {
                            if (p.atom->rhs.constant && !p.atom->rhs.constant->is_text())
                                throw parse_error("string operators require text operands", 1, 1);
                        }
                    }
                    for (const auto & ch : p.children) self(self, ch);
                };
                walk(walk, *ast.where);
            }
            for (const auto & item : ast.ret.items)
                if (!item.name.empty()) {
                    auto it = names.find(item.name);
                    if (it == names.end())
                        throw parse_error("'" + item.name + "' is not declared in MATCH", 1, 1);
                    if (item.kind == return_item_kind::labels_fn && it->second != 'n')
                        throw parse_error("labels() expects a node", 1, 1);
                    if (item.kind == return_item_kind::type_fn && it->second != 'e')
                        throw parse_error("type() expects an edge", 1, 1);
                }
        }
    };

}

auto parse_query(const std::string & text) -> query_ast
{
    parser p(text);
    return p.parse();
}

auto return_item::header() const -> std::string
{
    switch (kind) {
        case return_item_kind::entity_id: return name;
        case return_item_kind::property: return name + "." + key;
        case return_item_kind::labels_fn: return "labels(" + name + ")";
        case return_item_kind::type_fn: return "type(" + name + ")";
        case return_item_kind::nodes_fn: return "nodes()";
        case return_item_kind::relationships_fn: return "relationships()";
    }
    return "?";
}

}
