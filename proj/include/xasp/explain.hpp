#ifndef XASP_EXPLAIN_HPP
#define XASP_EXPLAIN_HPP

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "xasp/ast.hpp"
#include "xasp/engine.hpp"
#include "xasp/errors.hpp"
#include "xasp/instrument.hpp"

namespace xasp {

// One fired ground instance of an original rule: head = rule(ruleId).head
// under theta, bodies are the partitioned rule body under theta. Count
// literals keep their local variables unbound.
struct Explanation {
    GroundAtom head;
    int ruleId = 0;
    Substitution theta;
    std::vector<GroundAtom> positiveBody;
    std::vector<Literal> testBody;
};

// Removes every recording-predicate atom; metadata of the rest is kept.
AnswerSet stripExtension(const AnswerSet& extended, const std::string& recordingPredicate);

// Reads rule_fired(j, x1, ..., xk) back into (j, {Xi -> xi}). Throws
// ArityMismatchError when the atom does not fit rule j's projected variables.
std::pair<int, Substitution> extractSubstitution(const GroundAtom& recordingAtom,
                                                 const std::map<int, Rule>& ruleIdMap);

// One explanation per recording atom in the extended answer set, ordered by
// rule id and then by the substitution images.
std::vector<Explanation> buildExplanations(const AnswerSet& extended,
                                           const InstrumentedProgram& instrumented);

struct ExplanationFilter {
    std::optional<std::set<Predicate>> predicates;
    std::optional<GroundAtom> atom;
};

// Explanations whose head matches the filter; input order is kept.
std::vector<Explanation> selectExplanations(const std::vector<Explanation>& explanations,
                                            const ExplanationFilter& filter);

// Every explanation with the given head, for exhaustive presentation.
std::vector<Explanation> allSupports(const GroundAtom& atom,
                                     const std::vector<Explanation>& explanations);

struct FactSupport {};
struct RuleSupport {
    int ruleId = 0;
    Substitution theta;
};

// Finite justification: internal nodes are derived atoms, leaves are facts
// or tested literals, and (stratum, round) strictly decreases along every
// root-to-leaf path.
struct JustificationTree {
    GroundAtom root;
    std::variant<FactSupport, RuleSupport> support;
    std::vector<JustificationTree> children;  // one per positive body atom
    std::vector<Literal> testLeaves;

    bool isFact() const { return std::holds_alternative<FactSupport>(support); }
};

// Builds the canonical tree for an answer-set atom: the support with the
// smallest rule id (then lexicographically smallest theta) among those whose
// positive body atoms all have strictly smaller (stratum, round) than the
// atom. Throws NotInAnswerSetError, and DepthExceededError if maxDepth is
// given and exceeded.
JustificationTree buildJustificationTree(const GroundAtom& atom,
                                         const std::vector<Explanation>& explanations,
                                         const AnswerSet& answerSet,
                                         std::optional<int> maxDepth = std::nullopt);

}  // namespace xasp

#endif
