#include "xasp/instrument.hpp"

#include <algorithm>

#include "xasp/engine.hpp"

namespace xasp {

Program numberRules(const Program& program, bool numberFacts) {
    Program out = program;
    int nextId = 1;
    for (Rule& rule : out.statements) {
        if (rule.isFact() && !numberFacts) {
            rule.ruleId.reset();
            continue;
        }
        rule.ruleId = nextId++;
    }
    return out;
}

std::pair<std::vector<Atom>, std::vector<Literal>> partitionBody(const Rule& rule) {
    std::vector<Atom> positive;
    std::vector<Literal> test;
    for (const Literal& lit : rule.body) {
        if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
            positive.push_back(p->atom);
        } else {
            test.push_back(lit);
        }
    }
    return {std::move(positive), std::move(test)};
}

std::vector<Variable> projectedVars(const Rule& rule) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    appendVariables(rule.head, names, seen);
    for (const Literal& lit : rule.body) {
        if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
            appendVariables(p->atom, names, seen);
        }
    }
    std::vector<Variable> vars;
    vars.reserve(names.size());
    for (auto& name : names) vars.push_back(Variable{std::move(name)});
    return vars;
}

Rule instrumentRule(const Rule& rule, const std::string& recordingPredicate) {
    if (!rule.ruleId) {
        throw std::invalid_argument("instrumentRule requires a numbered rule");
    }
    Rule fired;
    fired.head.predicate = recordingPredicate;
    fired.head.args.push_back(IntegerConstant{*rule.ruleId});
    for (const Variable& var : projectedVars(rule)) fired.head.args.push_back(var);
    fired.body.push_back(PositiveLiteral{rule.head});
    for (const Literal& lit : rule.body) fired.body.push_back(lit);
    return fired;
}

InstrumentedProgram instrumentProgram(const Program& program, const InstrumentOptions& options) {
    for (const Predicate& pred : programPredicates(program)) {
        if (pred.name == options.recordingPredicate) {
            throw ReservedPredicateError("recording predicate '" + options.recordingPredicate +
                                         "' already occurs in the program (as " + pred.name + "/" +
                                         std::to_string(pred.arity) + ")");
        }
    }

    InstrumentedProgram out;
    out.recordingPredicate = options.recordingPredicate;
    out.original = options.numberFacts ? numberRules(expandIntervals(program), true)
                                       : numberRules(program, false);

    int nextSourceIndex = 0;
    for (const Rule& rule : out.original.statements) {
        nextSourceIndex = std::max(nextSourceIndex, rule.sourceIndex + 1);
    }
    for (const Rule& rule : out.original.statements) {
        if (!rule.ruleId) continue;
        Rule fired = instrumentRule(rule, options.recordingPredicate);
        fired.sourceIndex = nextSourceIndex++;
        out.firedRules.push_back(fired);
        out.ruleIdMap.emplace(*rule.ruleId, rule);
    }

    out.extended = out.original;
    out.extended.statements.insert(out.extended.statements.end(), out.firedRules.begin(),
                                   out.firedRules.end());

    // A program with no #show directives shows everything, including the
    // recording atoms; only explicit directives need extending.
    if (!out.extended.shows.empty() && !out.firedRules.empty()) {
        std::set<int> arities;
        for (const Rule& fired : out.firedRules) {
            arities.insert(static_cast<int>(fired.head.args.size()));
        }
        for (int arity : arities) {
            out.extended.shows.push_back({options.recordingPredicate, arity});
        }
    }
    return out;
}

}  // namespace xasp
