#ifndef XASP_CORPUS_HPP
#define XASP_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace xasp {

// A bundled example program. The description is the program's leading
// comment block.
struct CorpusEntry {
    std::string name;
    std::string description;
    std::string text;
};

const std::vector<CorpusEntry>& corpus();

// nullptr when the name (with or without ".lp") is not bundled.
const CorpusEntry* findCorpusEntry(std::string_view name);

}  // namespace xasp

#endif
