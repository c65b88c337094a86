#include "mgm/bitsignature.hpp"

#include <cassert>
#include <stdexcept>

namespace mgm {

auto signature_contains(const bit_string & container, const bit_string & contained) -> bool
{
    if (container.width() != contained.width())
        throw std::logic_error("signature_contains: width mismatch (" +
                               std::to_string(container.width()) + " vs " +
                               std::to_string(contained.width()) + ")");
    const auto & a = container.words();
    const auto & b = contained.words();
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & b[i]) != b[i]) return false;
    return true;
}

auto swap_signature(const bit_string & bits, const signature_layout & layout) -> bit_string
{
    bit_string out(layout.width());
    for (label_id l = 0; l < layout.n_labels; ++l) {
        if (bits.test(layout.l_first(l))) out.set(layout.l_second(l));
        if (bits.test(layout.l_second(l))) out.set(layout.l_first(l));
    }
    for (type_id t = 0; t < layout.n_types; ++t) {
        if (bits.test(layout.t_in(t))) out.set(layout.t_out(t));
        if (bits.test(layout.t_out(t))) out.set(layout.t_in(t));
    }
    return out;
}

auto make_signature(const signature_layout & layout, const std::vector<label_id> & labels_first,
                    const std::vector<label_id> & labels_second,
                    const std::vector<type_id> & types_out,
                    const std::vector<type_id> & types_in) -> bit_string
{
    bit_string bits(layout.width());
    for (label_id l : labels_first) bits.set(layout.l_first(l));
    for (label_id l : labels_second) bits.set(layout.l_second(l));
    for (type_id t : types_out) bits.set(layout.t_out(t));
    for (type_id t : types_in) bits.set(layout.t_in(t));
    return bits;
}

}
