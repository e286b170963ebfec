#pragma once

#include <utility>
#include <vector>

#include "k4/diagram.hpp"

namespace k4::detail {

// Local rewrite of a diagram. Ends are numbered: old darts 4c+s, then new crossing
// slots, then the two ends of each opened free loop. Kept darts and new slots are
// terminals (one link each); removed darts and loop ends are pass-through (two links)
// unless their edge is dropped.
struct Surgery {
    const LinkDiagram& d;
    int added = 0;
    std::vector<int> removed;    // crossings deleted outright
    std::vector<int> dissolved;  // crossings deleted with both strands passing straight through
    std::vector<int> dropped;    // edge labels deleted with their crossings
    std::vector<int> cut;        // edge labels severed at both darts
    std::vector<std::pair<int, int>> opened;  // (free loop, side)
    std::vector<std::pair<int, int>> links;

    explicit Surgery(const LinkDiagram& base) : d(base) {}

    int dart(int c, int s) const { return 4 * c + (s & 3); }
    int dart(Dart x) const { return dart(x.c, x.s); }
    int slot(int k, int s) const { return 4 * d.size() + 4 * k + (s & 3); }
    int loop_end(int i, int e) const { return 4 * d.size() + 4 * added + 2 * i + e; }
    void link(int a, int b) { links.emplace_back(a, b); }

    // Opens an edge-side for insertion. Returns the end at the side's dart and the end
    // at the far dart; the edge runs from the first to the second with the face on its right.
    std::pair<int, int> open_side(Dart side, const Occurrences& occ);
};

struct SurgeryResult {
    LinkDiagram d;
    Orientation o;
};

// Pass an orientation to have it carried across; otherwise the result orientation is empty.
SurgeryResult perform(const Surgery& s, const Orientation* o);

}  // namespace k4::detail
