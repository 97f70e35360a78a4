#include "xasp/corpus.hpp"

#include <sstream>

#include "xasp/corpus_data.hpp"

namespace xasp {

namespace {

std::string leadingCommentBlock(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string description;
    while (std::getline(in, line)) {
        if (line.rfind('%', 0) != 0) break;
        std::size_t start = line.find_first_not_of("% ");
        if (start == std::string::npos) continue;
        if (!description.empty()) description += " ";
        description += line.substr(start);
    }
    return description;
}

std::vector<CorpusEntry> loadCorpus() {
    std::vector<CorpusEntry> entries;
    for (std::size_t i = 0; i < detail::kCorpusFileCount; ++i) {
        const auto& raw = detail::kCorpusFiles[i];
        entries.push_back({raw.name, leadingCommentBlock(raw.text), raw.text});
    }
    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = loadCorpus();
    return entries;
}

const CorpusEntry* findCorpusEntry(std::string_view name) {
    std::string wanted(name);
    if (wanted.size() < 3 || wanted.substr(wanted.size() - 3) != ".lp") wanted += ".lp";
    for (const CorpusEntry& entry : corpus()) {
        if (entry.name == wanted) return &entry;
    }
    return nullptr;
}

}  // namespace xasp
