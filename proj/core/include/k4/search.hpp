#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k4/certificate.hpp"

namespace k4 {

struct SearchBudget {
    int max_crossings = 0;  // 0: start crossings + 6
    int max_depth = 12;
    long long max_states = 2'000'000;
};

struct SearchOptions {
    int n = 4;  // n-move order; 0 restricts the search to Reidemeister moves
    int jobs = 1;
    bool self_check = true;
    // Crossing that no move may involve; states are then compared by codes rooted there.
    // Moves never renumber kept crossings, so a frozen crossing 0 stays crossing 0.
    int frozen = -1;
};

struct LayerStats {
    int side = 0;  // 0 forward, 1 backward
    int depth = 0;
    long long frontier = 0;
    long long visited = 0;
};

struct SearchResult {
    enum class Outcome { Reduced, Exhausted, Obstruction } outcome = Outcome::Exhausted;
    std::optional<Certificate> certificate;
    std::string target;       // name of the goal class that was reached
    std::string obstruction;  // invariant that differs, for Obstruction
    std::string exhausted;    // budget that ran out, for Exhausted
    long long visited = 0;
    std::vector<LayerStats> layers;
};

// Diagram for the two-component goal of the reduction.
LinkDiagram standard_hopf();
LinkDiagram trivial_link(int components);

SearchResult reduce_to_trivial(const LinkDiagram& d, const SearchBudget& b, const SearchOptions& opt = {});
SearchResult bidirectional_check(const LinkDiagram& d1, const LinkDiagram& d2, const SearchBudget& b,
                                 const SearchOptions& opt = {});

}  // namespace k4
