#ifndef XASP_TESTS_TESTGEN_HPP
#define XASP_TESTS_TESTGEN_HPP

#include <map>
#include <random>

#include "xasp/ast.hpp"

namespace xasp::test {

struct GeneratorOptions {
    int maxPredicates = 5;
    int maxConstants = 4;
    int maxRules = 10;  // non-fact rules
    int maxArity = 2;
    int maxFactsPerPredicate = 3;
    int maxPositiveAtoms = 3;
    int levels = 3;
    bool allowCounts = true;
};

// Safe and stratifiable by construction: every predicate gets a level,
// positive bodies stay at or below the head's level, tests stay strictly
// below, and head/test variables are drawn from the positive body.
Program randomStratifiedProgram(std::mt19937& rng, const GeneratorOptions& options = {});

// Applies a constant bijection to every atom argument and comparison term.
// #const names and count bounds are left alone.
Program renameConstants(const Program& program, const std::map<GroundTerm, GroundTerm>& bijection);

// Random type-preserving permutation of the constants occurring in the
// program.
std::map<GroundTerm, GroundTerm> randomConstantBijection(std::mt19937& rng,
                                                         const Program& program);

// The bundled link-comparison rules over a fresh random bipartite instance:
// 5 students, 13 student-company interaction edges, 8 student-attribute
// edges.
Program randomLinkComparisonInstance(std::mt19937& rng);

}  // namespace xasp::test

#endif
