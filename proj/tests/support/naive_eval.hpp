#ifndef XASP_TESTS_NAIVE_EVAL_HPP
#define XASP_TESTS_NAIVE_EVAL_HPP

#include <set>
#include <vector>

#include "xasp/ast.hpp"

// Independent evaluation oracles. These deliberately avoid the engine's
// join/semi-naive machinery: grounding enumerates total substitutions over
// the Herbrand universe, and stable models are checked via the reduct.
namespace xasp::test {

// Every constant occurring anywhere in the program.
std::vector<GroundTerm> herbrandUniverse(const Program& program);

// Stratified evaluation with full re-derivation until fixpoint per stratum.
// Requires a safe, stratifiable program with intervals expanded.
std::set<GroundAtom> naiveEvaluate(const Program& program);

// All stable models found by enumerating every interpretation over the
// Herbrand base and checking I == leastModel(reduct(ground(P), I)).
// The base must not exceed maxBaseSize (throws std::length_error).
std::vector<std::set<GroundAtom>> stableModelsByEnumeration(const Program& program,
                                                            std::size_t maxBaseSize);

// Number of distinct local tuples satisfying the condition, by direct
// enumeration of local assignments over `universe`.
long long countByEnumeration(const std::vector<Variable>& locals, const Atom& condition,
                             const Substitution& outer, const std::set<GroundAtom>& atoms,
                             const std::vector<GroundTerm>& universe);

}  // namespace xasp::test

#endif
