#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k4/coloring.hpp"
#include "k4/moves.hpp"
#include "k4/polynomials.hpp"

namespace k4 {

struct Certificate {
    std::string label;
    LinkDiagram start;
    std::optional<Orientation> orientation;  // of start; reference orientation when absent
    std::vector<Move> steps;
    LinkDiagram claimed_end;
};

std::string to_json(const Certificate& c);
Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& c, const std::string& path);

struct ReplayError : Error {
    int step;  // failing step index; steps.size() for an end mismatch
    ReplayError(const std::string& msg, int s) : Error(msg), step(s) {}
};

struct StepAudit {
    int index = -1;  // -1 for the start diagram
    std::string move;
    int crossings = 0;
    int components = 0;
    std::vector<std::vector<int>> lk_mod2;
    std::vector<std::pair<int, AbelianGroup>> col;  // (k, Col_k)
    std::optional<CycloInt> v_at_i;                 // absent above the bracket cap
    std::optional<NMoveType> nmove_type;            // for n-move steps
};

struct ReplayOptions {
    bool jones = true;
    int cap = default_bracket_cap;
};

struct ReplayReport {
    LinkDiagram end;
    Orientation end_orientation;
    std::vector<StepAudit> audits;
};

// Throws ReplayError on a failed step, an end mismatch, or an audit violation.
ReplayReport replay(const Certificate& c, const ReplayOptions& opt = {});
std::string audit_table(const ReplayReport& r);

struct ArfAudit {
    ArfValue start, end;
    int parallel_moves = 0;
    int antiparallel_moves = 0;
    bool parity_ok = false;
    bool sign_pattern_ok = false;
    std::vector<std::string> notes;
    bool ok() const { return parity_ok && sign_pattern_ok; }
};

// Counts parallel 4-moves and checks them against the Arf difference and the V(i) signs.
ArfAudit arf_parity_audit(const Certificate& c, const Orientation& o, int cap = default_bracket_cap);

// Linking numbers mod 2 compared up to a relabelling of components.
bool same_lk_mod2(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);
std::vector<std::vector<int>> lk_mod2(const LinkDiagram& d, const Orientation& o);

}  // namespace k4
