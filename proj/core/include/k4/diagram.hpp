#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k4 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p);
};

// Slots run counterclockwise from the incoming under-strand: 0/2 under, 1/3 over.
struct Crossing {
    std::array<int, 4> slots{};
    int id = 0;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;  // PD edge labels; free loops are not labelled
    int free_loops = 0;

    int size() const { return static_cast<int>(crossings.size()); }
    int label(int c, int s) const { return crossings[c].slots[s & 3]; }
};

// A slot occurrence. With c < 0 it names side s of free loop -(c+1).
struct Dart {
    int c = 0;
    int s = 0;
    auto operator<=>(const Dart&) const = default;
    bool is_loop() const { return c < 0; }
    int loop() const { return -(c + 1); }
};

inline Dart loop_side(int loop, int side) { return Dart{-(loop + 1), side}; }

class Occurrences {
public:
    explicit Occurrences(const LinkDiagram& d);
    const std::array<Dart, 2>& of(int label) const { return occ_[label]; }
    Dart other(Dart x) const;
    Dart next_in_face(Dart x) const { Dart o = other(x); return {o.c, (o.s + 1) & 3}; }

private:
    const LinkDiagram* d_;
    std::vector<std::array<Dart, 2>> occ_;
};

void validate(const LinkDiagram& d);

LinkDiagram parse_pd(std::string_view text);
std::string to_pd(const LinkDiagram& d);

// Relabels edges densely in order of first appearance and resets crossing ids.
void normalize(LinkDiagram& d);

struct Components {
    int count = 0;         // link components including free loops
    int strand_count = 0;  // components that pass through a crossing
    std::vector<int> of_label;
    // Reference traversal per strand component: each entry is the dart where the
    // strand enters a crossing, in travel order.
    std::vector<std::vector<Dart>> arrivals;
};

Components components(const LinkDiagram& d);

// One flag per component (free loops last); true means reversed against the reference.
struct Orientation {
    std::vector<bool> reversed;
    static Orientation reference(const LinkDiagram& d);
};

struct OrientedView {
    std::vector<int> under_in;  // entry slot of the under-strand at each crossing (0 or 2)
    std::vector<int> over_in;   // entry slot of the over-strand (1 or 3)
    std::vector<int> under_comp, over_comp;
    Components comps;
    // Does the strand leave its crossing through this dart (so the edge runs away from it)?
    bool leaves(Dart x) const;
};

OrientedView oriented(const LinkDiagram& d, const Orientation& o);
int crossing_sign(const OrientedView& v, int c);
int writhe(const LinkDiagram& d, const Orientation& o);
// Sum of signs of crossings between a component and itself; independent of orientation.
int self_writhe(const LinkDiagram& d);

// Parallel 2-cable with the blackboard framing: each crossing becomes a 2x2 grid.
LinkDiagram parallel_2cable(const LinkDiagram& d);

struct LinkingData {
    std::vector<std::vector<long long>> m;  // enhanced matrix M_L
    long long lk(int i, int j) const { return m[i][j]; }
    int size() const { return static_cast<int>(m.size()); }
};

LinkingData linking_matrix(const LinkDiagram& d, const Orientation& o);

struct Face {
    std::vector<Dart> sides;  // each side is an edge traversed with the face on its right
    bool is_loop() const { return sides.size() == 1 && sides[0].is_loop(); }
};

// Throws Error when the Euler count fails.
std::vector<Face> faces(const LinkDiagram& d);
bool is_planar(const LinkDiagram& d);

// Connected pieces of the crossing graph; free loops get their own piece ids after these.
struct Pieces {
    int count = 0;
    std::vector<int> of_crossing;
    int of(Dart x) const { return x.is_loop() ? count + x.loop() : of_crossing[x.c]; }
};
Pieces pieces(const LinkDiagram& d);

std::string canonical_code(const LinkDiagram& d);
// Code that also fixes crossing `root` and its slot numbering; diagrams agree on it
// only through an isomorphism sending root to root with slot 0 to slot 0.
std::string canonical_code(const LinkDiagram& d, int root);

}  // namespace k4
