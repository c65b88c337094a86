#include <cstring>
#include <fstream>

#include "mgm/index.hpp"

namespace mgm {

namespace {

    constexpr char magic[8] = {'M', 'G', 'M', 'I', 'D', 'X', '0', '1'};

    struct writer {
        std::ofstream out;
        explicit writer(const std::string & path) : out(path, std::ios::binary)
        {
            if (!out) throw load_error("cannot write snapshot: " + path);
        }
        auto u32(std::uint32_t v) -> void { out.write(reinterpret_cast<const char *>(&v), 4); }
        auto u64(std::uint64_t v) -> void { out.write(reinterpret_cast<const char *>(&v), 8); }
        auto str(const std::string & s) -> void
        {
            u64(s.size());
            out.write(s.data(), static_cast<std::streamsize>(s.size()));
        }
    };

    struct reader {
        std::ifstream in;
        std::string path;
        explicit reader(const std::string & p) : in(p, std::ios::binary), path(p)
        {
            if (!in) throw load_error("cannot open snapshot: " + p);
        }
        auto fail() -> void { throw load_error("truncated or corrupt snapshot: " + path); }
        auto u32() -> std::uint32_t
        {
            std::uint32_t v;
            if (!in.read(reinterpret_cast<char *>(&v), 4)) fail();
            return v;
        }
        auto u64() -> std::uint64_t
        {
            std::uint64_t v;
            if (!in.read(reinterpret_cast<char *>(&v), 8)) fail();
            return v;
        }
        auto str() -> std::string
        {
            auto n = u64();
            std::string s(n, '\0');
            if (n && !in.read(s.data(), static_cast<std::streamsize>(n))) fail();
            return s;
        }
    };

}

auto save_index_snapshot(const std::string & path, const multigraph & g, const target_index & idx)
    -> void
{
    writer w(path);
    w.out.write(magic, sizeof magic);

    w.u64(g.label_alphabet().size());
    for (const auto & s : g.label_alphabet()) w.str(s);
    w.u64(g.type_alphabet().size());
    for (const auto & s : g.type_alphabet()) w.str(s);

    w.u64(g.n_nodes());
    for (node_id u = 0; u < g.n_nodes(); ++u) {
        const auto & n = g.node(u);
        w.u64(n.labels.size());
        for (label_id l : n.labels) w.u32(l);
        w.str(property_map_to_json(n.props).dump());
    }

    w.u64(g.n_edges());
    for (edge_id e = 0; e < g.n_edges(); ++e) {
        const auto & ed = g.edge(e);
        w.u32(ed.src);
        w.u32(ed.dst);
        w.u32(ed.type);
        w.str(property_map_to_json(ed.props).dump());
    }

    w.u64(idx.rows.size());
    for (const auto & row : idx.rows) {
        w.u32(row.first);
        w.u32(row.second);
        w.u64(row.bits.words().size());
        for (auto word : row.bits.words()) w.u64(word);
    }

    w.u64(idx.type_degrees.size());
    for (const auto & [out_deg, in_deg] : idx.type_degrees) {
        w.u32(out_deg);
        w.u32(in_deg);
    }
}

auto load_index_snapshot(const std::string & path) -> std::pair<multigraph, target_index>
{
    reader r(path);
    char found[8];
    if (!r.in.read(found, sizeof found) || std::memcmp(found, magic, sizeof magic) != 0)
        throw load_error("not an index snapshot (bad magic): " + path);

    std::vector<std::string> labels(r.u64());
    for (auto & s : labels) s = r.str();
    std::vector<std::string> types(r.u64());
    for (auto & s : types) s = r.str();

    graph_builder builder;
    auto n_nodes = r.u64();
    for (std::uint64_t u = 0; u < n_nodes; ++u) {
        std::vector<std::string> node_labels(r.u64());
        for (auto & l : node_labels) l = labels.at(r.u32());
        builder.add_node(std::move(node_labels), parse_property_json(r.str()));
    }
    auto n_edges = r.u64();
    for (std::uint64_t e = 0; e < n_edges; ++e) {
        auto src = r.u32();
        auto dst = r.u32();
        auto type = r.u32();
        builder.add_edge(src, dst, types.at(type), parse_property_json(r.str()));
    }
    auto g = std::move(builder).build();

    // hash structures are rebuilt; rows and degree cache come from the file
    auto idx = build_target_index(g, true);

    auto n_rows = r.u64();
    std::vector<bit_signature_row> rows;
    rows.reserve(n_rows);
    for (std::uint64_t i = 0; i < n_rows; ++i) {
        bit_signature_row row;
        row.first = r.u32();
        row.second = r.u32();
        row.bits = bit_string(idx.layout.width());
        auto n_words = r.u64();
        if (n_words != row.bits.words().size()) r.fail();
        for (auto & word : row.bits.words()) word = r.u64();
        rows.push_back(std::move(row));
    }
    idx.rows = std::move(rows);

    auto n_deg = r.u64();
    if (n_deg != idx.type_degrees.size()) r.fail();
    for (auto & [out_deg, in_deg] : idx.type_degrees) {
        out_deg = r.u32();
        in_deg = r.u32();
    }

    return {std::move(g), std::move(idx)};
}

}
