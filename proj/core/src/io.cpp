#include "mgm/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace mgm {

namespace {

    struct csv_record {
        std::vector<std::string> fields;
        int line;  // 1-based line the record starts on
    };

    // RFC-4180 style reader: quoted fields may contain commas, doubled quotes
    // and newlines.
    auto read_csv(const std::string & path) -> std::vector<csv_record>
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw load_error("cannot open file: " + path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

        std::vector<csv_record> records;
        std::vector<std::string> fields;
        std::string field;
        bool in_quotes = false, field_started = false;
        int line = 1, record_line = 1;

        auto end_field = [&] {
            fields.push_back(std::move(field));
            field.clear();
            field_started = false;
        };
        auto end_record = [&] {
            end_field();
            if (fields.size() != 1 || !fields[0].empty())
                records.push_back({std::move(fields), record_line});
            fields.clear();
            record_line = line;
        };

        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (in_quotes) {
                if (c == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field += '"';
                        ++i;
                    }
                    else
                        in_quotes = false;
                }
                else {
                    if (c == '\n') ++line;
                    field += c;
                }
            }
            else if (c == '"' && !field_started) {
                in_quotes = true;
                field_started = true;
            }
            else if (c == ',') {
                end_field();
            }
            else if (c == '\r') {
                // swallowed; \r\n and bare \n both end the record at the \n
            }
            else if (c == '\n') {
                ++line;
                end_record();
            }
            else {
                field += c;
                field_started = true;
            }
        }
        if (in_quotes)
            throw load_error(path + ": unterminated quoted field starting near line " +
                             std::to_string(record_line));
        if (field_started || !fields.empty()) end_record();
        return records;
    }

    auto fail(const std::string & path, int line, const std::string & what) -> void
    {
        throw load_error(path + ":" + std::to_string(line) + ": " + what);
    }

    auto parse_id(const std::string & path, int line, const std::string & s) -> std::int64_t
    {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
            fail(path, line, "expected a non-negative integer id, got '" + s + "'");
        return value;
    }

    auto split_labels(const std::string & s) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ';') {
                if (!cur.empty()) out.push_back(std::move(cur));
                cur.clear();
            }
            else
                cur += c;
        }
        if (!cur.empty()) out.push_back(std::move(cur));
        return out;
    }

    auto parse_props(const std::string & path, int line, const std::string & s) -> property_map
    {
        if (s.empty()) return {};
        try {
            return parse_property_json(s);
        }
        catch (const load_error & e) {
            fail(path, line, e.what());
        }
        return {};
    }

    auto check_header(const std::string & path, const std::vector<csv_record> & records,
                      const std::vector<std::string> & expected) -> void
    {
        if (records.empty())
            throw load_error(path + ": missing header row");
        if (records.front().fields != expected) {
            std::string want;
            for (const auto & f : expected) want += (want.empty() ? "" : ",") + f;
            fail(path, records.front().line, "bad header, expected '" + want + "'");
        }
    }

    auto csv_quote(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            out += c;
        }
        out += '"';
        return out;
    }

}

auto load_graph(const std::string & nodes_path, const std::string & edges_path) -> multigraph
{
    auto node_records = read_csv(nodes_path);
    check_header(nodes_path, node_records, {"id", "labels", "properties"});

    struct raw_node {
        std::int64_t orig_id;
        std::vector<std::string> labels;
        property_map props;
        int line;
    };
    std::vector<raw_node> raw_nodes;
    std::map<std::int64_t, int> node_lines;  // orig id -> defining line, for duplicates
    for (std::size_t i = 1; i < node_records.size(); ++i) {
        const auto & r = node_records[i];
        if (r.fields.size() != 3)
            fail(nodes_path, r.line, "expected 3 columns, got " + std::to_string(r.fields.size()));
        auto id = parse_id(nodes_path, r.line, r.fields[0]);
        if (auto [it, inserted] = node_lines.emplace(id, r.line); !inserted)
            fail(nodes_path, r.line,
                 "duplicate node id " + std::to_string(id) + " (first seen at line " +
                     std::to_string(it->second) + ")");
        auto labels = split_labels(r.fields[1]);
        if (labels.empty()) labels.push_back("_unlabeled");
        raw_nodes.push_back({id, std::move(labels), parse_props(nodes_path, r.line, r.fields[2]), r.line});
    }

    std::sort(raw_nodes.begin(), raw_nodes.end(),
              [](const raw_node & a, const raw_node & b) { return a.orig_id < b.orig_id; });
    std::map<std::int64_t, node_id> node_remap;
    graph_builder builder;
    for (auto & rn : raw_nodes) {
        rn.props.insert_or_assign("_orig_id", property_value(rn.orig_id));
        node_remap.emplace(rn.orig_id, builder.add_node(std::move(rn.labels), std::move(rn.props)));
    }

    auto edge_records = read_csv(edges_path);
    check_header(edges_path, edge_records, {"id", "src", "dst", "type", "properties"});

    struct raw_edge {
        std::int64_t orig_id;
        node_id src, dst;
        std::string type;
        property_map props;
    };
    std::vector<raw_edge> raw_edges;
    std::map<std::int64_t, int> edge_lines;
    for (std::size_t i = 1; i < edge_records.size(); ++i) {
        const auto & r = edge_records[i];
        if (r.fields.size() != 5)
            fail(edges_path, r.line, "expected 5 columns, got " + std::to_string(r.fields.size()));
        auto id = parse_id(edges_path, r.line, r.fields[0]);
        if (auto [it, inserted] = edge_lines.emplace(id, r.line); !inserted)
            fail(edges_path, r.line,
                 "duplicate edge id " + std::to_string(id) + " (first seen at line " +
                     std::to_string(it->second) + ")");
        auto src = parse_id(edges_path, r.line, r.fields[1]);
        auto dst = parse_id(edges_path, r.line, r.fields[2]);
        auto src_it = node_remap.find(src);
        auto dst_it = node_remap.find(dst);
        if (src_it == node_remap.end())
            fail(edges_path, r.line, "edge endpoint " + std::to_string(src) + " is not a node");
        if (dst_it == node_remap.end())
            fail(edges_path, r.line, "edge endpoint " + std::to_string(dst) + " is not a node");
        if (r.fields[3].empty())
            fail(edges_path, r.line, "edge type must be non-empty");
        raw_edges.push_back({id, src_it->second, dst_it->second, r.fields[3],
                             parse_props(edges_path, r.line, r.fields[4])});
    }

    std::sort(raw_edges.begin(), raw_edges.end(),
              [](const raw_edge & a, const raw_edge & b) { return a.orig_id < b.orig_id; });
    for (auto & re : raw_edges) {
        re.props.insert_or_assign("_orig_id", property_value(re.orig_id));
        builder.add_edge(re.src, re.dst, std::move(re.type), std::move(re.props));
    }

    return std::move(builder).build();
}

auto save_graph(const multigraph & g, const std::string & nodes_path,
                const std::string & edges_path) -> void
{
    std::ofstream nout(nodes_path, std::ios::binary);
    if (!nout) throw load_error("cannot write file: " + nodes_path);
    nout << "id,labels,properties\n";
    for (node_id u = 0; u < g.n_nodes(); ++u) {
        std::string labels;
        for (label_id l : g.node(u).labels) {
            if (!labels.empty()) labels += ';';
            labels += g.label_name(l);
        }
        auto props = g.node(u).props;
        props.erase("_orig_id");
        nout << g.orig_node_id(u) << ',' << csv_quote(labels) << ','
             << csv_quote(property_map_to_json(props).dump()) << '\n';
    }

    std::ofstream eout(edges_path, std::ios::binary);
    if (!eout) throw load_error("cannot write file: " + edges_path);
    eout << "id,src,dst,type,properties\n";
    for (edge_id e = 0; e < g.n_edges(); ++e) {
        const auto & ed = g.edge(e);
        auto props = ed.props;
        props.erase("_orig_id");
        eout << g.orig_edge_id(e) << ',' << g.orig_node_id(ed.src) << ',' << g.orig_node_id(ed.dst)
             << ',' << csv_quote(g.type_name(ed.type)) << ','
             << csv_quote(property_map_to_json(props).dump()) << '\n';
    }
}

}
