#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k4/diagram.hpp"

namespace k4 {

// A PD file with `# key: value` header lines: name, source (required), and optionally
// tangle (a closed tangle expression for the same link) and orientation (one 0/1
// reversal flag per component).
struct CorpusEntry {
    std::string name;
    std::string path;
    std::string source;
    LinkDiagram diagram;
    std::optional<Orientation> orientation;
    std::optional<std::string> tangle;

    Orientation orient() const { return orientation ? *orientation : Orientation::reference(diagram); }
};

CorpusEntry parse_corpus_entry(const std::string& text, const std::string& path = "");
CorpusEntry load_corpus_entry(const std::string& path);
// Every *.pd file in the directory, sorted by file name.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

std::string read_file(const std::string& path);

}  // namespace k4
