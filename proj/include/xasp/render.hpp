#ifndef XASP_RENDER_HPP
#define XASP_RENDER_HPP

#include <span>
#include <string>
#include <vector>

#include "xasp/ast.hpp"
#include "xasp/engine.hpp"
#include "xasp/explain.hpp"

namespace xasp {

enum class OutputFormat { Text, Json, Dot };

struct RenderOptions {
    OutputFormat format = OutputFormat::Text;
    bool showTestLeaves = true;
    std::optional<int> maxWidth;  // wrap width for explanation text
};

// Compact forms: no spaces, as atoms appear in answer sets and explanations.
std::string toText(const GroundTerm& term);
std::string toText(const Term& term);
std::string toText(const GroundAtom& atom);
std::string toText(const Atom& atom);
std::string toText(const Literal& lit);

// Source form: parseable by parseProgram, one statement per line, single
// spaces after argument commas.
std::string ruleToSource(const Rule& rule);
std::string programToSource(const Program& program);

// HEAD-is_supported_by-([HEAD]-[POS,...]-[TEST,...])
std::string explanationToText(const Explanation& explanation, const RenderOptions& options = {});

// Dependency-graph view of a set of explanations: solid edges to positive
// body atoms, dashed edges to tested literals.
std::string explanationsToDot(std::span<const Explanation> explanations,
                              const RenderOptions& options = {});

std::string treeToText(const JustificationTree& tree, const RenderOptions& options = {});

// One digraph; node ids are preorder indices, solid edges lead to positive
// children and dashed edges to test leaves.
std::string treeToDot(const JustificationTree& tree, const RenderOptions& options = {});

// Deterministic JSON text (fixed key order, stable array orders).
std::string toJson(const AnswerSet& answerSet);
std::string toJson(const Explanation& explanation);
std::string toJson(std::span<const Explanation> explanations);
std::string toJson(const JustificationTree& tree);

}  // namespace xasp

#endif
