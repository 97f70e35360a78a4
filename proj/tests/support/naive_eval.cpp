#include "support/naive_eval.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace xasp::test {

namespace {

void collectTerm(const Term& term, std::set<GroundTerm>& out) {
    if (auto ground = toGroundTerm(term)) out.insert(*ground);
}

void collectAtom(const Atom& atom, std::set<GroundTerm>& out) {
    for (const Term& arg : atom.args) collectTerm(arg, out);
}

std::vector<std::string> ruleVariables(const Rule& rule) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    auto addAtom = [&](const Atom& atom) { appendVariables(atom, names, seen); };
    addAtom(rule.head);
    for (const Literal& lit : rule.body) {
        if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
            addAtom(p->atom);
        } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
            addAtom(n->atom);
        } else if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
            appendVariables(cmp->lhs, names, seen);
            appendVariables(cmp->rhs, names, seen);
        } else if (const auto* count = std::get_if<CountLiteral>(&lit)) {
            appendVariables(count->bound, names, seen);
            std::set<std::string> locals;
            for (const Variable& local : count->locals) locals.insert(local.name);
            for (const Term& arg : count->condition.args) {
                if (const auto* v = std::get_if<Variable>(&arg)) {
                    if (!locals.contains(v->name) && seen.insert(v->name).second) {
                        names.push_back(v->name);
                    }
                }
            }
        }
    }
    // Count locals never take part in the outer grounding.
    for (const Literal& lit : rule.body) {
        if (const auto* count = std::get_if<CountLiteral>(&lit)) {
            for (const Variable& local : count->locals) {
                names.erase(std::remove(names.begin(), names.end(), local.name), names.end());
            }
        }
    }
    return names;
}

// Total assignments of `names` over `universe`, odometer order.
void forEachAssignment(const std::vector<std::string>& names,
                       const std::vector<GroundTerm>& universe,
                       const std::function<void(const Substitution&)>& fn) {
    if (names.empty()) {
        fn(Substitution{});
        return;
    }
    if (universe.empty()) return;
    std::vector<std::size_t> odometer(names.size(), 0);
    for (;;) {
        Substitution sigma;
        for (std::size_t i = 0; i < names.size(); ++i) {
            sigma.emplace(names[i], universe[odometer[i]]);
        }
        fn(sigma);
        std::size_t digit = 0;
        while (digit < odometer.size() && ++odometer[digit] == universe.size()) {
            odometer[digit] = 0;
            ++digit;
        }
        if (digit == odometer.size()) break;
    }
}

bool compareGround(const ComparisonLiteral& cmp, const Substitution& sigma) {
    auto lhs = toGroundTerm(applyToTerm(cmp.lhs, sigma));
    auto rhs = toGroundTerm(applyToTerm(cmp.rhs, sigma));
    if (!lhs || !rhs) throw std::logic_error("comparison not ground in oracle");
    if (cmp.op == CompareOp::Eq) return *lhs == *rhs;
    if (cmp.op == CompareOp::Ne) return *lhs != *rhs;
    const auto* li = std::get_if<IntegerConstant>(&*lhs);
    const auto* ri = std::get_if<IntegerConstant>(&*rhs);
    if (!li || !ri) return false;
    switch (cmp.op) {
        case CompareOp::Lt: return li->value < ri->value;
        case CompareOp::Le: return li->value <= ri->value;
        case CompareOp::Gt: return li->value > ri->value;
        case CompareOp::Ge: return li->value >= ri->value;
        default: return false;
    }
}

long long resolveBound(const Term& bound, const Substitution& sigma,
                       const std::map<std::string, long long>& consts) {
    if (const auto* i = std::get_if<IntegerConstant>(&bound)) return i->value;
    if (const auto* s = std::get_if<SymbolicConstant>(&bound)) {
        auto it = consts.find(s->name);
        if (it == consts.end()) throw std::runtime_error("oracle: unresolved count bound");
        return it->second;
    }
    if (const auto* v = std::get_if<Variable>(&bound)) {
        auto it = sigma.find(v->name);
        if (it == sigma.end() || !std::holds_alternative<IntegerConstant>(it->second)) {
            throw std::runtime_error("oracle: count bound variable not integer");
        }
        return std::get<IntegerConstant>(it->second).value;
    }
    throw std::runtime_error("oracle: bad count bound");
}

// Predicate -> stratum by iterated max updates; assumes stratifiability.
std::map<Predicate, int> oracleStrata(const Program& program) {
    std::map<Predicate, int> strata;
    auto touch = [&](const Predicate& pred) { strata.emplace(pred, 0); };
    for (const Rule& rule : program.statements) {
        touch(rule.head.pred());
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) touch(p->atom.pred());
            if (const auto* n = std::get_if<NegatedLiteral>(&lit)) touch(n->atom.pred());
            if (const auto* c = std::get_if<CountLiteral>(&lit)) touch(c->condition.pred());
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& rule : program.statements) {
            int& head = strata[rule.head.pred()];
            for (const Literal& lit : rule.body) {
                int needed = head;
                if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
                    needed = strata[p->atom.pred()];
                } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
                    needed = strata[n->atom.pred()] + 1;
                } else if (const auto* c = std::get_if<CountLiteral>(&lit)) {
                    needed = strata[c->condition.pred()] + 1;
                }
                if (needed > head) {
                    head = needed;
                    changed = true;
                }
            }
        }
    }
    return strata;
}

bool bodyHolds(const Rule& rule, const Substitution& sigma, const std::set<GroundAtom>& atoms,
               const std::map<std::string, long long>& consts,
               const std::vector<GroundTerm>& universe) {
    for (const Literal& lit : rule.body) {
        if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
            auto ground = toGroundAtom(applyToAtom(p->atom, sigma));
            if (!ground || !atoms.contains(*ground)) return false;
        } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
            auto ground = toGroundAtom(applyToAtom(n->atom, sigma));
            if (!ground) throw std::logic_error("negated atom not ground in oracle");
            if (atoms.contains(*ground)) return false;
        } else if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
            if (!compareGround(*cmp, sigma)) return false;
        } else if (const auto* count = std::get_if<CountLiteral>(&lit)) {
            long long bound = resolveBound(count->bound, sigma, consts);
            if (countByEnumeration(count->locals, count->condition, sigma, atoms, universe) !=
                bound) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<GroundTerm> herbrandUniverse(const Program& program) {
    std::set<GroundTerm> constants;
    for (const Rule& rule : program.statements) {
        collectAtom(rule.head, constants);
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
                collectAtom(p->atom, constants);
            } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
                collectAtom(n->atom, constants);
            } else if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
                collectTerm(cmp->lhs, constants);
                collectTerm(cmp->rhs, constants);
            } else if (const auto* count = std::get_if<CountLiteral>(&lit)) {
                collectAtom(count->condition, constants);
            }
        }
    }
    return {constants.begin(), constants.end()};
}

long long countByEnumeration(const std::vector<Variable>& locals, const Atom& condition,
                             const Substitution& outer, const std::set<GroundAtom>& atoms,
                             const std::vector<GroundTerm>& universe) {
    Substitution scoped = outer;
    std::vector<std::string> names;
    for (const Variable& local : locals) {
        scoped.erase(local.name);
        names.push_back(local.name);
    }
    long long matches = 0;
    forEachAssignment(names, universe, [&](const Substitution& assignment) {
        Substitution sigma = scoped;
        for (const auto& [name, value] : assignment) sigma[name] = value;
        auto ground = toGroundAtom(applyToAtom(condition, sigma));
        if (!ground) throw std::logic_error("count condition not ground in oracle");
        if (atoms.contains(*ground)) ++matches;
    });
    return matches;
}

std::set<GroundAtom> naiveEvaluate(const Program& program) {
    std::vector<GroundTerm> universe = herbrandUniverse(program);
    std::map<Predicate, int> strata = oracleStrata(program);
    int maxStratum = 0;
    for (const auto& [pred, stratum] : strata) maxStratum = std::max(maxStratum, stratum);

    std::set<GroundAtom> atoms;
    for (int stratum = 0; stratum <= maxStratum; ++stratum) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Rule& rule : program.statements) {
                if (strata[rule.head.pred()] != stratum) continue;
                forEachAssignment(ruleVariables(rule), universe, [&](const Substitution& sigma) {
                    if (!bodyHolds(rule, sigma, atoms, program.consts, universe)) return;
                    auto head = toGroundAtom(applyToAtom(rule.head, sigma));
                    if (!head) throw std::logic_error("head not ground in oracle");
                    if (atoms.insert(*head).second) changed = true;
                });
            }
        }
    }
    return atoms;
}

std::vector<std::set<GroundAtom>> stableModelsByEnumeration(const Program& program,
                                                            std::size_t maxBaseSize) {
    std::vector<GroundTerm> universe = herbrandUniverse(program);

    std::vector<GroundAtom> base;
    for (const Predicate& pred : programPredicates(program)) {
        std::vector<std::string> slots;
        for (int i = 0; i < pred.arity; ++i) slots.push_back("A" + std::to_string(i));
        Atom pattern{pred.name, {}};
        for (const auto& slot : slots) pattern.args.push_back(Variable{slot});
        forEachAssignment(slots, universe, [&](const Substitution& sigma) {
            base.push_back(*toGroundAtom(applyToAtom(pattern, sigma)));
        });
    }
    if (base.size() > maxBaseSize) {
        throw std::length_error("Herbrand base too large for enumeration: " +
                                std::to_string(base.size()));
    }

    struct GroundCount {
        long long bound;
        std::vector<Variable> locals;
        Atom pattern;  // locals still free
    };
    struct GroundRule {
        GroundAtom head;
        std::vector<GroundAtom> positive;
        std::vector<GroundAtom> negative;
        std::vector<GroundCount> counts;
    };

    std::vector<GroundRule> groundRules;
    for (const Rule& rule : program.statements) {
        forEachAssignment(ruleVariables(rule), universe, [&](const Substitution& sigma) {
            GroundRule ground;
            auto head = toGroundAtom(applyToAtom(rule.head, sigma));
            if (!head) throw std::logic_error("head not ground in oracle");
            ground.head = *head;
            for (const Literal& lit : rule.body) {
                if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
                    auto atom = toGroundAtom(applyToAtom(p->atom, sigma));
                    if (!atom) throw std::logic_error("positive atom not ground in oracle");
                    ground.positive.push_back(*atom);
                } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
                    auto atom = toGroundAtom(applyToAtom(n->atom, sigma));
                    if (!atom) throw std::logic_error("negated atom not ground in oracle");
                    ground.negative.push_back(*atom);
                } else if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
                    // Interpretation-independent: drop the instance when false.
                    if (!compareGround(*cmp, sigma)) {
                        ground.positive.push_back(GroundAtom{"__false__", {}});
                    }
                } else if (const auto* count = std::get_if<CountLiteral>(&lit)) {
                    Substitution scoped = sigma;
                    for (const Variable& local : count->locals) scoped.erase(local.name);
                    ground.counts.push_back({resolveBound(count->bound, sigma, program.consts),
                                             count->locals,
                                             applyToAtom(count->condition, scoped)});
                }
            }
            groundRules.push_back(std::move(ground));
        });
    }

    std::vector<std::set<GroundAtom>> models;
    const std::size_t combinations = static_cast<std::size_t>(1) << base.size();
    for (std::size_t mask = 0; mask < combinations; ++mask) {
        std::set<GroundAtom> interp;
        for (std::size_t bit = 0; bit < base.size(); ++bit) {
            if (mask & (static_cast<std::size_t>(1) << bit)) interp.insert(base[bit]);
        }

        // Reduct relative to interp: keep instances whose tests hold, strip
        // the tests, then take the least model.
        std::vector<const GroundRule*> reduct;
        for (const GroundRule& rule : groundRules) {
            bool keep = std::none_of(rule.negative.begin(), rule.negative.end(),
                                     [&](const GroundAtom& atom) {
                                         return interp.contains(atom);
                                     });
            for (const GroundCount& count : rule.counts) {
                if (!keep) break;
                keep = countByEnumeration(count.locals, count.pattern, {}, interp, universe) ==
                       count.bound;
            }
            if (keep) reduct.push_back(&rule);
        }
        std::set<GroundAtom> least;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const GroundRule* rule : reduct) {
                if (least.contains(rule->head)) continue;
                bool supported = std::all_of(rule->positive.begin(), rule->positive.end(),
                                             [&](const GroundAtom& atom) {
                                                 return least.contains(atom);
                                             });
                if (supported) {
                    least.insert(rule->head);
                    changed = true;
                }
            }
        }
        if (least == interp) models.push_back(std::move(interp));
    }
    return models;
}

}  // namespace xasp::test
