#include "xasp/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace xasp {

namespace {

std::string predText(const Predicate& pred) {
    return pred.name + "/" + std::to_string(pred.arity);
}

}  // namespace

DependencyGraph dependencyGraph(const Program& program) {
    DependencyGraph graph;
    graph.nodes = programPredicates(program);
    for (const Rule& rule : program.statements) {
        Predicate head = rule.head.pred();
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
                graph.edges[head][p->atom.pred()].positive = true;
            } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
                graph.edges[head][n->atom.pred()].test = true;
            } else if (const auto* c = std::get_if<CountLiteral>(&lit)) {
                graph.edges[head][c->condition.pred()].test = true;
            }
        }
    }
    return graph;
}

int StratificationResult::stratumOf(const Predicate& pred) const {
    auto it = strata.find(pred);
    return it == strata.end() ? 0 : it->second;
}

namespace {

// Tarjan strongly connected components over the dependency graph.
class SccFinder {
public:
    explicit SccFinder(const DependencyGraph& graph) : graph_(graph) {
        for (const Predicate& node : graph.nodes) {
            if (!index_.contains(node)) visit(node);
        }
    }

    int componentOf(const Predicate& node) const { return component_.at(node); }

private:
    const DependencyGraph& graph_;
    std::map<Predicate, int> index_;
    std::map<Predicate, int> low_;
    std::map<Predicate, bool> onStack_;
    std::map<Predicate, int> component_;
    std::vector<Predicate> stack_;
    int counter_ = 0;
    int components_ = 0;

    void visit(const Predicate& node) {
        index_[node] = low_[node] = counter_++;
        stack_.push_back(node);
        onStack_[node] = true;
        auto edges = graph_.edges.find(node);
        if (edges != graph_.edges.end()) {
            for (const auto& [next, label] : edges->second) {
                if (!index_.contains(next)) {
                    visit(next);
                    low_[node] = std::min(low_[node], low_[next]);
                } else if (onStack_[next]) {
                    low_[node] = std::min(low_[node], index_[next]);
                }
            }
        }
        if (low_[node] == index_[node]) {
            for (;;) {
                Predicate top = stack_.back();
                stack_.pop_back();
                onStack_[top] = false;
                component_[top] = components_;
                if (top == node) break;
            }
            ++components_;
        }
    }
};

// Shortest path from -> to, restricted to one component. Both ends are in
// the component; existence is guaranteed by strong connectivity.
std::vector<Predicate> pathWithinComponent(const DependencyGraph& graph, const SccFinder& scc,
                                           const Predicate& from, const Predicate& to) {
    std::map<Predicate, Predicate> parent;
    std::deque<Predicate> queue{from};
    std::set<Predicate> seen{from};
    while (!queue.empty()) {
        Predicate at = queue.front();
        queue.pop_front();
        if (at == to) break;
        auto edges = graph.edges.find(at);
        if (edges == graph.edges.end()) continue;
        for (const auto& [next, label] : edges->second) {
            if (scc.componentOf(next) != scc.componentOf(from)) continue;
            if (!seen.insert(next).second) continue;
            parent.emplace(next, at);
            queue.push_back(next);
        }
    }
    std::vector<Predicate> path{to};
    Predicate at = to;
    while (at != from) {
        at = parent.at(at);
        path.push_back(at);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

StratificationResult stratify(const Program& program) {
    DependencyGraph graph = dependencyGraph(program);
    SccFinder scc(graph);

    // A test edge inside a strongly connected component is a recursion
    // through a test literal.
    for (const auto& [from, targets] : graph.edges) {
        for (const auto& [to, label] : targets) {
            if (!label.test || scc.componentOf(from) != scc.componentOf(to)) continue;
            std::vector<Predicate> cycle;
            if (from == to) {
                cycle = {from, to};
            } else {
                cycle = pathWithinComponent(graph, scc, to, from);
                cycle.insert(cycle.begin(), from);
            }
            std::vector<std::string> names;
            std::ostringstream oss;
            oss << "program is not stratifiable: cycle through a test literal: ";
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                names.push_back(cycle[i].name);
                if (i) oss << " -> ";
                oss << predText(cycle[i]);
            }
            throw UnstratifiableError(oss.str(), std::move(names));
        }
    }

    StratificationResult result;
    for (const Predicate& node : graph.nodes) result.strata[node] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [head, targets] : graph.edges) {
            int needed = result.strata[head];
            for (const auto& [dep, label] : targets) {
                if (label.test) needed = std::max(needed, result.strata[dep] + 1);
                if (label.positive) needed = std::max(needed, result.strata[dep]);
            }
            if (needed > result.strata[head]) {
                result.strata[head] = needed;
                changed = true;
            }
        }
    }

    int maxStratum = 0;
    for (const auto& [pred, stratum] : result.strata) maxStratum = std::max(maxStratum, stratum);
    result.order.assign(maxStratum + 1, {});
    for (const auto& [pred, stratum] : result.strata) result.order[stratum].push_back(pred);
    return result;
}

Program expandIntervals(const Program& program) {
    Program out;
    out.consts = program.consts;
    out.shows = program.shows;
    for (const Rule& rule : program.statements) {
        bool hasInterval =
            rule.isFact() && std::any_of(rule.head.args.begin(), rule.head.args.end(),
                                         [](const Term& t) {
                                             return std::holds_alternative<Interval>(t);
                                         });
        if (!hasInterval) {
            out.statements.push_back(rule);
            continue;
        }
        // Cross product over interval positions, leftmost slowest.
        std::vector<std::vector<Term>> rows{{}};
        for (const Term& arg : rule.head.args) {
            std::vector<std::vector<Term>> next;
            const auto* range = std::get_if<Interval>(&arg);
            for (const auto& row : rows) {
                if (range) {
                    for (long long v = range->lo; v <= range->hi; ++v) {
                        auto extended = row;
                        extended.push_back(IntegerConstant{v});
                        next.push_back(std::move(extended));
                    }
                } else {
                    auto extended = row;
                    extended.push_back(arg);
                    next.push_back(std::move(extended));
                }
            }
            rows = std::move(next);
        }
        for (auto& args : rows) {
            Rule fact;
            fact.head = Atom{rule.head.predicate, std::move(args)};
            fact.sourceIndex = rule.sourceIndex;
            out.statements.push_back(std::move(fact));
        }
    }
    return out;
}

namespace {

long long resolveCountBound(const Term& bound, const Substitution& binding,
                            const std::map<std::string, long long>& consts) {
    long long value = 0;
    if (const auto* i = std::get_if<IntegerConstant>(&bound)) {
        value = i->value;
    } else if (const auto* s = std::get_if<SymbolicConstant>(&bound)) {
        auto it = consts.find(s->name);
        if (it == consts.end()) {
            throw UnknownConstError("count bound '" + s->name +
                                    "' has no #const definition and is not an integer");
        }
        value = it->second;
    } else if (const auto* v = std::get_if<Variable>(&bound)) {
        auto it = binding.find(v->name);
        if (it == binding.end() || !std::holds_alternative<IntegerConstant>(it->second)) {
            throw UnknownConstError("count bound variable '" + v->name +
                                    "' is not bound to an integer");
        }
        value = std::get<IntegerConstant>(it->second).value;
    } else {
        throw UnknownConstError("count bound must be an integer, a const name, or a variable");
    }
    if (value < 0) {
        throw UnknownConstError("count bound must be nonnegative, got " + std::to_string(value));
    }
    return value;
}

// Iterates the atoms of one predicate inside an ordered atom set.
template <typename Fn>
void forEachOfPredicate(const std::set<GroundAtom>& atoms, const Predicate& pred, Fn&& fn) {
    auto it = atoms.lower_bound(GroundAtom{pred.name, {}});
    for (; it != atoms.end() && it->predicate == pred.name; ++it) {
        if (static_cast<int>(it->args.size()) == pred.arity) fn(*it);
    }
}

// Matches a (partially instantiated) atom pattern against a ground atom,
// binding its remaining variables. Returns the bound names for undoing.
bool matchAtom(const Atom& pattern, const GroundAtom& fact, Substitution& binding,
               std::vector<std::string>& boundHere) {
    if (pattern.predicate != fact.predicate || pattern.args.size() != fact.args.size()) {
        return false;
    }
    auto undo = [&] {
        for (const auto& name : boundHere) binding.erase(name);
        boundHere.clear();
    };
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        const Term& arg = pattern.args[i];
        if (const auto* v = std::get_if<Variable>(&arg)) {
            auto it = binding.find(v->name);
            if (it == binding.end()) {
                binding.emplace(v->name, fact.args[i]);
                boundHere.push_back(v->name);
            } else if (it->second != fact.args[i]) {
                undo();
                return false;
            }
        } else {
            auto ground = toGroundTerm(arg);
            if (!ground || *ground != fact.args[i]) {
                undo();
                return false;
            }
        }
    }
    return true;
}

bool compareHolds(const ComparisonLiteral& cmp, const Substitution& binding) {
    auto lhs = toGroundTerm(applyToTerm(cmp.lhs, binding));
    auto rhs = toGroundTerm(applyToTerm(cmp.rhs, binding));
    if (!lhs || !rhs) {
        throw std::logic_error("comparison literal is not ground during evaluation");
    }
    switch (cmp.op) {
        case CompareOp::Eq: return *lhs == *rhs;
        case CompareOp::Ne: return *lhs != *rhs;
        default: break;
    }
    // The order operators are only defined on integers; anything else fails
    // the test.
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

}  // namespace

bool evalCount(long long bound, const std::vector<Variable>& locals, const Atom& condition,
               const Substitution& outer, const std::set<GroundAtom>& atoms) {
    Substitution scoped = outer;
    for (const Variable& local : locals) scoped.erase(local.name);
    Atom pattern = applyToAtom(condition, scoped);

    std::set<std::vector<GroundTerm>> tuples;
    forEachOfPredicate(atoms, pattern.pred(), [&](const GroundAtom& fact) {
        Substitution match;
        std::vector<std::string> boundHere;
        if (!matchAtom(pattern, fact, match, boundHere)) return;
        std::vector<GroundTerm> tuple;
        tuple.reserve(locals.size());
        for (const Variable& local : locals) {
            auto it = match.find(local.name);
            if (it == match.end()) {
                throw std::logic_error("count local '" + local.name +
                                       "' does not occur in the count condition");
            }
            tuple.push_back(it->second);
        }
        tuples.insert(std::move(tuple));
    });
    return static_cast<long long>(tuples.size()) == bound;
}

bool literalHolds(const Literal& lit, const Substitution& binding,
                  const std::set<GroundAtom>& atoms,
                  const std::map<std::string, long long>& consts) {
    if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
        auto ground = toGroundAtom(applyToAtom(p->atom, binding));
        if (!ground) throw std::logic_error("positive literal is not ground during evaluation");
        return atoms.contains(*ground);
    }
    if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
        auto ground = toGroundAtom(applyToAtom(n->atom, binding));
        if (!ground) throw std::logic_error("negated literal is not ground during evaluation");
        return !atoms.contains(*ground);
    }
    if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
        return compareHolds(*cmp, binding);
    }
    const auto& count = std::get<CountLiteral>(lit);
    long long bound = resolveCountBound(count.bound, binding, consts);
    return evalCount(bound, count.locals, count.condition, binding, atoms);
}

namespace {

class Evaluator {
public:
    explicit Evaluator(const Program& program) : program_(program), strat_(stratify(program)) {}

    AnswerSet run() {
        insertFacts();
        groupRules();
        for (int stratum = 0; stratum < static_cast<int>(strat_.order.size()); ++stratum) {
            evaluateStratum(stratum);
        }
        AnswerSet result;
        result.atoms = std::move(all_);
        result.meta = std::move(meta_);
        return result;
    }

private:
    const Program& program_;
    StratificationResult strat_;
    std::set<GroundAtom> all_;
    std::map<Predicate, std::vector<GroundAtom>> byPred_;
    std::map<GroundAtom, DerivationInfo> meta_;
    std::map<int, std::vector<const Rule*>> rulesByStratum_;

    void add(const GroundAtom& atom, const DerivationInfo& info) {
        if (!all_.insert(atom).second) return;
        byPred_[atom.pred()].push_back(atom);
        meta_.emplace(atom, info);
    }

    void insertFacts() {
        for (const Rule& rule : program_.statements) {
            if (!rule.isFact()) continue;
            auto ground = toGroundAtom(rule.head);
            if (!ground) {
                throw std::invalid_argument(
                    "fact is not ground; expand intervals and run the safety check first");
            }
            add(*ground, {strat_.stratumOf(ground->pred()), 0, true});
        }
    }

    void groupRules() {
        for (const Rule& rule : program_.statements) {
            if (rule.isFact()) continue;
            rulesByStratum_[strat_.stratumOf(rule.head.pred())].push_back(&rule);
        }
    }

    std::vector<Atom> positiveAtoms(const Rule& rule) const {
        std::vector<Atom> positives;
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) positives.push_back(p->atom);
        }
        return positives;
    }

    bool testsHold(const Rule& rule, const Substitution& binding) const {
        for (const Literal& lit : rule.body) {
            if (std::holds_alternative<PositiveLiteral>(lit)) continue;
            if (!literalHolds(lit, binding, all_, program_.consts)) return false;
        }
        return true;
    }

    // Joins the rule's positive body left to right against the current
    // snapshot; position deltaPos (if any) is restricted to delta.
    void joinAndDerive(const Rule& rule, const std::vector<Atom>& positives, std::size_t idx,
                       int deltaPos, const std::map<Predicate, std::vector<GroundAtom>>& delta,
                       Substitution& binding, std::set<GroundAtom>& pending) {
        if (idx == positives.size()) {
            if (!testsHold(rule, binding)) return;
            GroundAtom head = groundAtom(rule.head, binding);
            if (!all_.contains(head)) pending.insert(std::move(head));
            return;
        }
        const Atom& pattern = positives[idx];
        const auto* source = &byPred_;
        if (static_cast<int>(idx) == deltaPos) source = &delta;
        auto it = source->find(pattern.pred());
        if (it == source->end()) return;
        for (const GroundAtom& fact : it->second) {
            std::vector<std::string> boundHere;
            if (!matchAtom(pattern, fact, binding, boundHere)) continue;
            joinAndDerive(rule, positives, idx + 1, deltaPos, delta, binding, pending);
            for (const auto& name : boundHere) binding.erase(name);
        }
    }

    void evaluateStratum(int stratum) {
        auto rules = rulesByStratum_.find(stratum);
        if (rules == rulesByStratum_.end()) return;

        int round = 1;
        std::map<Predicate, std::vector<GroundAtom>> delta;
        std::set<GroundAtom> pending;

        // Full pass against everything known so far.
        for (const Rule* rule : rules->second) {
            Substitution binding;
            joinAndDerive(*rule, positiveAtoms(*rule), 0, -1, {}, binding, pending);
        }

        while (!pending.empty()) {
            delta.clear();
            for (const GroundAtom& atom : pending) {
                add(atom, {stratum, round, false});
                delta[atom.pred()].push_back(atom);
            }
            pending.clear();
            ++round;

            // Semi-naive pass: at least one positive atom must come from the
            // previous round's delta.
            for (const Rule* rule : rules->second) {
                std::vector<Atom> positives = positiveAtoms(*rule);
                for (std::size_t pos = 0; pos < positives.size(); ++pos) {
                    if (!delta.contains(positives[pos].pred())) continue;
                    Substitution binding;
                    joinAndDerive(*rule, positives, 0, static_cast<int>(pos), delta, binding,
                                  pending);
                }
            }
        }
    }
};

}  // namespace

AnswerSet evaluate(const Program& program) { return Evaluator(program).run(); }

std::set<GroundAtom> filterShown(const AnswerSet& answerSet, const Program& program) {
    if (program.shows.empty()) return answerSet.atoms;
    std::set<Predicate> shown;
    for (const ShowDirective& show : program.shows) shown.insert({show.predicate, show.arity});
    std::set<GroundAtom> out;
    for (const GroundAtom& atom : answerSet.atoms) {
        if (shown.contains(atom.pred())) out.insert(atom);
    }
    return out;
}

}  // namespace xasp
