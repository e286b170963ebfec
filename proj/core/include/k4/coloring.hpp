#pragma once

#include <string>
#include <vector>

#include "k4/diagram.hpp"
#include "k4/smith.hpp"

namespace k4 {

// Invariant factors d1 | d2 | ... (each >= 2) plus a free part.
struct AbelianGroup {
    std::vector<long long> factors;
    int free_rank = 0;

    static AbelianGroup from_cyclic(const std::vector<long long>& orders, int free_rank = 0);
    long long order() const;  // -1 when infinite
    std::string str() const;  // e.g. "Z4 + Z2", "Z + Z3", "0"
    bool operator==(const AbelianGroup&) const = default;
};

// Over-arcs: maximal strands running from undercrossing to undercrossing.
struct Arcs {
    int count = 0;
    std::vector<int> of_label;  // PD edge label -> arc
};
Arcs arcs(const LinkDiagram& d);

IntMatrix coloring_matrix(const LinkDiagram& d);
AbelianGroup col_group(const LinkDiagram& d, int k);
AbelianGroup col4_from_linking(const LinkingData& ld);

struct Letter {
    int gen;
    int exp;  // +1 or -1
    bool operator==(const Letter&) const = default;
};

struct GroupPresentation {
    int generators = 0;
    std::vector<std::vector<Letter>> relators;
};

GroupPresentation core_group_presentation(const LinkDiagram& d);
GroupPresentation reduced_presentation(const GroupPresentation& p);
// n == 0 abelianizes over Z; otherwise x^n = 1 is adjoined for every generator.
AbelianGroup abelianization(const GroupPresentation& p, int n);
std::string export_presentation(const GroupPresentation& p, int exponent);

}  // namespace k4
