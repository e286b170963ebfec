#include "k4/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace k4 {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::string trim(std::string s) {
    auto sp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && sp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && sp(s[i])) ++i;
    return s.substr(i);
}

}  // namespace

CorpusEntry parse_corpus_entry(const std::string& text, const std::string& path) {
    CorpusEntry e;
    e.path = path;
    std::istringstream is(text);
    std::string line;
    std::vector<int> flags;
    bool has_orientation = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] != '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = trim(line.substr(1, colon - 1)), value = trim(line.substr(colon + 1));
        if (key == "name") e.name = value;
        else if (key == "source") e.source = value;
        else if (key == "tangle") e.tangle = value;
        else if (key == "orientation") {
            has_orientation = true;
            std::istringstream vs(value);
            int f;
            while (vs >> f) flags.push_back(f);
        }
    }
    e.diagram = parse_pd(text);
    if (e.name.empty()) e.name = std::filesystem::path(path).stem().string();
    if (e.source.empty()) throw Error(path + ": corpus entry has no source line");
    if (has_orientation) {
        int n = components(e.diagram).count;
        if (static_cast<int>(flags.size()) != n)
            throw Error(path + ": orientation needs " + std::to_string(n) + " flags");
        Orientation o;
        for (int f : flags) o.reversed.push_back(f != 0);
        e.orientation = o;
    }
    return e;
}

CorpusEntry load_corpus_entry(const std::string& path) { return parse_corpus_entry(read_file(path), path); }

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".pd") paths.push_back(f.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<CorpusEntry> out;
    for (const auto& p : paths) out.push_back(load_corpus_entry(p));
    return out;
}

}  // namespace k4
