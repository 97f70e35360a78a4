#ifndef XASP_INSTRUMENT_HPP
#define XASP_INSTRUMENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xasp/ast.hpp"
#include "xasp/errors.hpp"

namespace xasp {

struct InstrumentOptions {
    std::string recordingPredicate = "rule_fired";
    // Facts are leaves in justifications and are skipped by default; this
    // numbers and instruments them too (interval facts are expanded first).
    bool numberFacts = false;
};

// Assigns consecutive ids 1,2,3,... in source order. By default only
// non-fact rules are numbered.
Program numberRules(const Program& program, bool numberFacts = false);

// Splits a rule body into positive atoms and test literals, preserving the
// relative order within each class.
std::pair<std::vector<Atom>, std::vector<Literal>> partitionBody(const Rule& rule);

// Distinct variables of the head and the positive body in first-occurrence
// order. Variables that occur only in test literals are excluded.
std::vector<Variable> projectedVars(const Rule& rule);

// For rule j with projected variables X1..Xk builds
//   recording(j, X1, ..., Xk) :- head, body...
// so that the head of the original rule becomes part of the body.
Rule instrumentRule(const Rule& rule, const std::string& recordingPredicate);

struct InstrumentedProgram {
    Program original;               // numbered
    std::vector<Rule> firedRules;   // one per numbered rule, in id order
    Program extended;               // original statements followed by firedRules
    std::map<int, Rule> ruleIdMap;  // id -> original rule
    std::string recordingPredicate;
};

// Builds the extended program that records fired rule instances. Throws
// ReservedPredicateError if the recording predicate already occurs in the
// input. When the input has #show directives the extension also shows the
// recording predicate at every arity it uses.
InstrumentedProgram instrumentProgram(const Program& program, const InstrumentOptions& options = {});

}  // namespace xasp

#endif
