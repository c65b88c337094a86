#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgm/multigraph.hpp"

namespace mgm {

// Fixed-width packed bit string.
class bit_string {
public:
    bit_string() = default;
    explicit bit_string(std::uint32_t width) :
        width_(width), words_((width + 63) / 64, 0) {}

    auto width() const -> std::uint32_t { return width_; }

    auto set(std::uint32_t pos) -> void { words_[pos / 64] |= std::uint64_t{1} << (pos % 64); }

    auto test(std::uint32_t pos) const -> bool
    {
        return (words_[pos / 64] >> (pos % 64)) & 1;
    }

    auto words() const -> const std::vector<std::uint64_t> & { return words_; }
    auto words() -> std::vector<std::uint64_t> & { return words_; }

    friend auto operator==(const bit_string & a, const bit_string & b) -> bool
    {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

    auto to_string() const -> std::string
    {
        std::string s;
        for (std::uint32_t i = 0; i < width_; ++i) s += test(i) ? '1' : '0';
        return s;
    }

private:
    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

// True iff every set bit of `contained` is set in `container`, i.e.
// (container AND contained) == contained. Widths must agree.
auto signature_contains(const bit_string & container, const bit_string & contained) -> bool;

// Column layout of a signature: L_first (h bits) . T_in (p bits) . T_out
// (p bits) . L_second (h bits), with h/p the sizes of the target alphabets.
struct signature_layout {
    std::uint32_t n_labels = 0;
    std::uint32_t n_types = 0;

    auto width() const -> std::uint32_t { return 2 * n_labels + 2 * n_types; }
    auto l_first(label_id l) const -> std::uint32_t { return l; }
    auto t_in(type_id t) const -> std::uint32_t { return n_labels + t; }
    auto t_out(type_id t) const -> std::uint32_t { return n_labels + n_types + t; }
    auto l_second(label_id l) const -> std::uint32_t { return n_labels + 2 * n_types + l; }

    friend auto operator==(const signature_layout &, const signature_layout &) -> bool = default;
};

struct bit_signature_row {
    node_id first;
    node_id second;
    bit_string bits;
};

// For a target: one row per connected unordered pair, keyed (first, second)
// with first <= second (self-loops give first == second). For a query: two
// rows per connected pair, one per orientation.
struct bit_signature_matrix {
    signature_layout layout;
    std::vector<bit_signature_row> rows;
};

// Exchanges the two label halves and the two type halves; the query row for
// the reversed orientation is exactly the swap of the forward row.
auto swap_signature(const bit_string & bits, const signature_layout & layout) -> bit_string;

// Assembles one row from per-half content; type lists hold the types with at
// least one edge in that direction (presence only, never multiplicity).
auto make_signature(const signature_layout & layout, const std::vector<label_id> & labels_first,
                    const std::vector<label_id> & labels_second,
                    const std::vector<type_id> & types_out,
                    const std::vector<type_id> & types_in) -> bit_string;

}
