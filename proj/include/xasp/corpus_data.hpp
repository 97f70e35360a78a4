#ifndef XASP_CORPUS_DATA_HPP
#define XASP_CORPUS_DATA_HPP

#include <cstddef>

namespace xasp::detail {

struct RawCorpusFile {
    const char* name;
    const char* text;
};

// Defined in the generated corpus_data.cpp.
extern const RawCorpusFile kCorpusFiles[];
extern const std::size_t kCorpusFileCount;

}  // namespace xasp::detail

#endif
