#ifndef XASP_ENGINE_HPP
#define XASP_ENGINE_HPP

#include <map>
#include <set>
#include <vector>

#include "xasp/ast.hpp"
#include "xasp/errors.hpp"

namespace xasp {

struct DependencyEdge {
    bool positive = false;
    bool test = false;
    auto operator<=>(const DependencyEdge&) const = default;
};

// Edges point from a rule's head predicate to its body predicates. Positive
// literals contribute positive edges; negation and count conditions
// contribute test edges; comparisons contribute nothing.
struct DependencyGraph {
    std::set<Predicate> nodes;
    std::map<Predicate, std::map<Predicate, DependencyEdge>> edges;
};

DependencyGraph dependencyGraph(const Program& program);

// Least stratum assignment: stratum(head) >= stratum(p) for positive body
// predicates, stratum(head) > stratum(q) for tested predicates.
struct StratificationResult {
    std::map<Predicate, int> strata;
    std::vector<std::vector<Predicate>> order;  // ascending strata, sorted within

    int stratumOf(const Predicate& pred) const;
};

// Throws UnstratifiableError with an offending cycle through a test edge.
StratificationResult stratify(const Program& program);

// Replaces every interval fact by one fact per integer, in lo..hi order.
Program expandIntervals(const Program& program);

struct DerivationInfo {
    int stratum = 0;
    int round = 0;  // 0 for facts
    bool isFact = false;
    auto operator<=>(const DerivationInfo&) const = default;
};

struct AnswerSet {
    std::set<GroundAtom> atoms;
    std::map<GroundAtom, DerivationInfo> meta;

    bool contains(const GroundAtom& atom) const { return atoms.contains(atom); }
};

// Computes the unique answer set of a safe, stratifiable program whose
// intervals have been expanded. Count bounds that are still symbolic are
// resolved through the program's #const table; an unresolvable bound raises
// UnknownConstError. Deterministic, including the per-atom (stratum, round)
// metadata.
AnswerSet evaluate(const Program& program);

// True iff the number of distinct local-variable tuples satisfying the
// instantiated condition in `atoms` equals `bound`.
bool evalCount(long long bound, const std::vector<Variable>& locals, const Atom& condition,
               const Substitution& outer, const std::set<GroundAtom>& atoms);

// Evaluates one test literal under `binding` against `atoms`. Symbolic count
// bounds are resolved through `consts`.
bool literalHolds(const Literal& lit, const Substitution& binding,
                  const std::set<GroundAtom>& atoms,
                  const std::map<std::string, long long>& consts);

// Atoms selected by the program's #show directives; every atom if there are
// no directives.
std::set<GroundAtom> filterShown(const AnswerSet& answerSet, const Program& program);

}  // namespace xasp

#endif
