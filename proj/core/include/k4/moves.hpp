#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k4/diagram.hpp"

namespace k4 {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, NAdd, NRemove };

std::string kind_name(MoveKind k);
MoveKind parse_kind(const std::string& s);
bool is_addition(MoveKind k);

// Additions name edge-sides (a dart, or a free loop side) and the face they border.
// In portable form an addition names edge labels (free loop i is label arc_count + i)
// plus the face of the first side, and `faces` when the second side lies elsewhere.
// Removals name crossings; NRemove also names the two edge labels of the bigon
// between its first two crossings, which fixes the twist axis.
struct MoveSite {
    int face = -1;
    std::vector<Dart> sides;
    std::vector<int> crossings;
    std::vector<int> arcs;
    std::vector<int> faces;
    bool operator==(const MoveSite&) const = default;
};

// sign: R1Add kink type, R2Add which strand goes over (+1 the first), NAdd twist handedness.
struct Move {
    MoveKind kind = MoveKind::R1Add;
    int n = 0;
    int sign = 0;
    MoveSite site;
    bool operator==(const Move&) const = default;
};

struct TwistRegion {
    std::vector<int> crossings;
    std::vector<std::array<int, 2>> bigons;  // edge labels of the bigon after each crossing
    bool cyclic = false;
};

std::vector<TwistRegion> twist_regions(const LinkDiagram& d);

std::vector<MoveSite> enumerate_sites(const LinkDiagram& d, MoveKind kind, int n = 4);

struct MoveSet {
    bool r1 = true, r2 = true, r3 = true;
    int n = 4;            // n-move order; 0 disables n-moves
    bool additions = true;
};

// Every applicable move with all parameter choices, in a fixed order.
std::vector<Move> enumerate_moves(const LinkDiagram& d, const MoveSet& set = {});

// Fills the edge-sides of a portable addition from its labels and faces.
Move resolve(const LinkDiagram& d, const Move& m);
// Label/face form of an addition; keeps explicit sides only when labels are ambiguous.
Move portable(const LinkDiagram& d, const Move& m);

LinkDiagram apply(const LinkDiagram& d, const Move& m);
std::pair<LinkDiagram, Orientation> apply(const LinkDiagram& d, const Orientation& o, const Move& m);

enum class NMoveType { Parallel, Antiparallel };
NMoveType classify_nmove_orientation(const LinkDiagram& d, const Orientation& o, const Move& m);

std::string describe(const Move& m);

}  // namespace k4
