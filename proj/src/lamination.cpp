#include "cscl/lamination.hpp"

#include <algorithm>

namespace cscl {

std::optional<std::pair<Chord, Chord>> find_crossing(std::span<const Chord> chords)
{
    // A chord (a, b) is the interval [a, b] of [0,1); chords cross exactly when their intervals
    // interleave. Sorting by (start asc, end desc) leaves a stack of nested intervals.
    std::vector<const Chord*> order;
    order.reserve(chords.size());
    for (const Chord& ch : chords)
        if (!ch.degenerate())
            order.push_back(&ch);
    std::sort(order.begin(), order.end(), [](const Chord* l, const Chord* r) {
        if (l->a() != r->a())
            return l->a() < r->a();
        return r->b() < l->b();
    });
    std::vector<const Chord*> stack;
    for (const Chord* ch : order) {
        while (!stack.empty() && stack.back()->b() <= ch->a())
            stack.pop_back();
        if (!stack.empty() && stack.back()->b() < ch->b())
            return std::make_pair(*stack.back(), *ch);
        stack.push_back(ch);
    }
    return std::nullopt;
}

std::vector<Chord> canonical_set(std::span<const Chord> chords)
{
    std::vector<Chord> out(chords.begin(), chords.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Chord> find_antipode_gap(std::span<const Chord> sorted_chords)
{
    for (const Chord& ch : sorted_chords)
        if (!std::binary_search(sorted_chords.begin(), sorted_chords.end(), antipode(ch)))
            return ch;
    return std::nullopt;
}

} // namespace cscl
