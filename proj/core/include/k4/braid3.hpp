#pragma once

#include <array>
#include <string>
#include <vector>

#include "k4/diagram.hpp"

namespace k4 {

// Letters +-1, +-2 stand for s1^(+-1), s2^(+-1); kept freely reduced.
struct BraidWord {
    std::vector<int> letters;

    BraidWord() = default;
    explicit BraidWord(std::vector<int> ls);
    static BraidWord parse(const std::string& text);  // "s1 s1 s2^-1"
    std::string str() const;
    BraidWord operator*(const BraidWord& o) const { return BraidWord(cat(o)); }
    bool operator==(const BraidWord&) const = default;

private:
    std::vector<int> cat(const BraidWord& o) const;
};

// B3 modulo fourth powers of the generators, as a regular permutation group.
struct QuotientGroup {
    int order = 0;
    std::vector<std::array<int, 4>> act;  // element * (a, A, b, B), A = a^-1
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    std::vector<BraidWord> word;  // a shortest word for each element
    int identity = 0;
    int gen_a = 0, gen_b = 0;

    int element(const BraidWord& w) const;
};

// Todd-Coxeter enumeration of <a,b | aba = bab, a^4> over the trivial subgroup.
QuotientGroup coset_enumeration(int max_cosets = 100000);

struct ConjugacyClass {
    std::vector<int> elements;
    int representative = 0;  // least element id
};
std::vector<ConjugacyClass> conjugacy_classes(const QuotientGroup& g);

enum class ClassLabel { Trivial1, Trivial2, Trivial3, Hopf, HopfPlusTrivial, ConnectedSumTwoHopf, Torus33, Borromean };
std::string label_name(ClassLabel l);
int label_components(ClassLabel l);

struct ClassificationEntry {
    std::string word;  // representative word as listed
    ClassLabel label;
};
// The sixteen class representatives with their 4-move labels.
const std::vector<ClassificationEntry>& classification_table();

struct Classification {
    ClassLabel label;
    int class_index = -1;     // index into conjugacy_classes(g)
    std::string representative;
};
Classification classify_closure(const BraidWord& w);

int closure_components(const BraidWord& w);
LinkDiagram braid_closure_diagram(const BraidWord& w);

}  // namespace k4
