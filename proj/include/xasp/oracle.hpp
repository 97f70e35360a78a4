#ifndef XASP_ORACLE_HPP
#define XASP_ORACLE_HPP

#include <set>
#include <string>

#include "xasp/ast.hpp"
#include "xasp/errors.hpp"
#include "xasp/instrument.hpp"

namespace xasp {

struct OracleOptions {
    std::string solverPath;
    bool instrumented = false;  // cross-check the extended program instead
    int timeoutSeconds = 30;
    InstrumentOptions instrument;
};

struct OracleReport {
    bool match = false;
    std::set<GroundAtom> missingInOurs;  // printed by the solver, absent here
    std::set<GroundAtom> extraInOurs;    // computed here, absent in the solver output
};

// Runs an external solver on the (optionally instrumented) program and
// compares its model against our shown atoms. The solver is expected to
// accept a program file argument and print one whitespace-separated line of
// ground atoms; anything else raises SolverOutputParseError. Spawn failures
// and timeouts raise SolverSpawnError.
OracleReport runOracle(const Program& program, const OracleOptions& options);

}  // namespace xasp

#endif
