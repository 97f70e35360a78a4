#include "support/testgen.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "xasp/corpus.hpp"
#include "xasp/parser.hpp"

namespace xasp::test {

namespace {

int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double probability) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < probability;
}

struct PredicateInfo {
    std::string name;
    int arity;
    int level;
};

GroundTerm constantFromIndex(int index) {
    if (index % 2 == 0) return IntegerConstant{index / 2 + 1};
    return SymbolicConstant{std::string(1, static_cast<char>('a' + index / 2))};
}

}  // namespace

Program randomStratifiedProgram(std::mt19937& rng, const GeneratorOptions& options) {
    Program program;

    int predCount = pick(rng, 1, options.maxPredicates);
    std::vector<PredicateInfo> preds;
    for (int i = 0; i < predCount; ++i) {
        preds.push_back({"p" + std::to_string(i), pick(rng, 0, options.maxArity),
                         pick(rng, 0, options.levels - 1)});
    }

    int constCount = pick(rng, 1, options.maxConstants);
    std::vector<GroundTerm> constants;
    for (int i = 0; i < constCount; ++i) constants.push_back(constantFromIndex(i));

    if (options.allowCounts && chance(rng, 0.5)) {
        program.consts.emplace("limit", pick(rng, 0, 2));
    }

    int sourceIndex = 0;
    auto randomConstant = [&] { return toTerm(constants[pick(rng, 0, constCount - 1)]); };

    for (const PredicateInfo& pred : preds) {
        int facts = pick(rng, 0, options.maxFactsPerPredicate);
        for (int i = 0; i < facts; ++i) {
            Rule fact;
            fact.sourceIndex = sourceIndex++;
            fact.head.predicate = pred.name;
            for (int a = 0; a < pred.arity; ++a) fact.head.args.push_back(randomConstant());
            program.statements.push_back(std::move(fact));
        }
    }

    const std::vector<std::string> varPool{"V0", "V1", "V2", "V3"};
    int ruleCount = pick(rng, 1, options.maxRules);
    for (int r = 0; r < ruleCount; ++r) {
        const PredicateInfo& head = preds[pick(rng, 0, predCount - 1)];

        std::vector<const PredicateInfo*> positiveCandidates;
        std::vector<const PredicateInfo*> testCandidates;
        for (const PredicateInfo& p : preds) {
            if (p.level <= head.level) positiveCandidates.push_back(&p);
            if (p.level < head.level) testCandidates.push_back(&p);
        }

        Rule rule;
        rule.sourceIndex = sourceIndex++;
        rule.head.predicate = head.name;

        std::set<std::string> bound;
        int positives = pick(rng, 0, options.maxPositiveAtoms);
        for (int i = 0; i < positives && !positiveCandidates.empty(); ++i) {
            const PredicateInfo& p =
                *positiveCandidates[pick(rng, 0, static_cast<int>(positiveCandidates.size()) - 1)];
            Atom atom{p.name, {}};
            for (int a = 0; a < p.arity; ++a) {
                if (chance(rng, 0.6)) {
                    const std::string& var =
                        varPool[pick(rng, 0, static_cast<int>(varPool.size()) - 1)];
                    atom.args.push_back(Variable{var});
                    bound.insert(var);
                } else {
                    atom.args.push_back(randomConstant());
                }
            }
            rule.body.push_back(PositiveLiteral{std::move(atom)});
        }

        std::vector<std::string> boundList(bound.begin(), bound.end());
        auto randomBoundOrConstant = [&]() -> Term {
            if (!boundList.empty() && chance(rng, 0.5)) {
                return Variable{boundList[pick(rng, 0, static_cast<int>(boundList.size()) - 1)]};
            }
            return randomConstant();
        };

        for (int a = 0; a < head.arity; ++a) rule.head.args.push_back(randomBoundOrConstant());

        if (!testCandidates.empty() && chance(rng, 0.5)) {
            const PredicateInfo& t =
                *testCandidates[pick(rng, 0, static_cast<int>(testCandidates.size()) - 1)];
            Atom atom{t.name, {}};
            for (int a = 0; a < t.arity; ++a) atom.args.push_back(randomBoundOrConstant());
            rule.body.push_back(NegatedLiteral{std::move(atom)});
        }

        if (chance(rng, 0.4)) {
            ComparisonLiteral cmp;
            cmp.lhs = randomBoundOrConstant();
            cmp.rhs = randomBoundOrConstant();
            cmp.op = static_cast<CompareOp>(pick(rng, 0, 5));
            rule.body.push_back(cmp);
        }

        if (options.allowCounts && chance(rng, 0.4)) {
            std::vector<const PredicateInfo*> conditions;
            for (const PredicateInfo* t : testCandidates) {
                if (t->arity >= 1) conditions.push_back(t);
            }
            if (!conditions.empty()) {
                const PredicateInfo& t =
                    *conditions[pick(rng, 0, static_cast<int>(conditions.size()) - 1)];
                CountLiteral count;
                int localCount = std::min(t.arity, pick(rng, 1, 2));
                for (int i = 0; i < localCount; ++i) {
                    count.locals.push_back(Variable{"W" + std::to_string(i)});
                }
                Atom condition{t.name, {}};
                for (int a = 0; a < t.arity; ++a) {
                    if (a < localCount) {
                        condition.args.push_back(count.locals[a]);
                    } else {
                        condition.args.push_back(randomBoundOrConstant());
                    }
                }
                count.condition = std::move(condition);
                if (!program.consts.empty() && chance(rng, 0.3)) {
                    count.bound = SymbolicConstant{program.consts.begin()->first};
                } else {
                    count.bound = IntegerConstant{pick(rng, 0, 3)};
                }
                rule.body.push_back(std::move(count));
            }
        }

        program.statements.push_back(std::move(rule));
    }

    if (chance(rng, 0.3)) {
        int shows = pick(rng, 1, 2);
        for (int i = 0; i < shows; ++i) {
            const PredicateInfo& p = preds[pick(rng, 0, predCount - 1)];
            program.shows.push_back({p.name, p.arity});
        }
    }

    assert(safetyCheck(program).empty());
    return program;
}

namespace {

Term renameTerm(const Term& term, const std::map<GroundTerm, GroundTerm>& bijection) {
    auto ground = toGroundTerm(term);
    if (!ground) return term;
    auto it = bijection.find(*ground);
    return it == bijection.end() ? term : toTerm(it->second);
}

Atom renameAtom(const Atom& atom, const std::map<GroundTerm, GroundTerm>& bijection) {
    Atom out{atom.predicate, {}};
    for (const Term& arg : atom.args) out.args.push_back(renameTerm(arg, bijection));
    return out;
}

}  // namespace

Program renameConstants(const Program& program,
                        const std::map<GroundTerm, GroundTerm>& bijection) {
    Program out = program;
    for (Rule& rule : out.statements) {
        rule.head = renameAtom(rule.head, bijection);
        for (Literal& lit : rule.body) {
            if (auto* p = std::get_if<PositiveLiteral>(&lit)) {
                p->atom = renameAtom(p->atom, bijection);
            } else if (auto* n = std::get_if<NegatedLiteral>(&lit)) {
                n->atom = renameAtom(n->atom, bijection);
            } else if (auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
                cmp->lhs = renameTerm(cmp->lhs, bijection);
                cmp->rhs = renameTerm(cmp->rhs, bijection);
            } else if (auto* count = std::get_if<CountLiteral>(&lit)) {
                count->condition = renameAtom(count->condition, bijection);
            }
        }
    }
    return out;
}

std::map<GroundTerm, GroundTerm> randomConstantBijection(std::mt19937& rng,
                                                         const Program& program) {
    std::set<GroundTerm> seen;
    auto collectAtom = [&seen](const Atom& atom) {
        for (const Term& arg : atom.args) {
            if (auto ground = toGroundTerm(arg)) seen.insert(*ground);
        }
    };
    for (const Rule& rule : program.statements) {
        collectAtom(rule.head);
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) collectAtom(p->atom);
            if (const auto* n = std::get_if<NegatedLiteral>(&lit)) collectAtom(n->atom);
            if (const auto* c = std::get_if<CountLiteral>(&lit)) collectAtom(c->condition);
        }
    }
    std::vector<GroundTerm> ints;
    std::vector<GroundTerm> symbols;
    for (const GroundTerm& term : seen) {
        (std::holds_alternative<IntegerConstant>(term) ? ints : symbols).push_back(term);
    }
    std::map<GroundTerm, GroundTerm> bijection;
    for (auto* group : {&ints, &symbols}) {
        std::vector<GroundTerm> shuffled = *group;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t i = 0; i < group->size(); ++i) {
            bijection.emplace((*group)[i], shuffled[i]);
        }
    }
    return bijection;
}

Program randomLinkComparisonInstance(std::mt19937& rng) {
    const CorpusEntry* entry = findCorpusEntry("anomaly_rules.lp");
    if (!entry) throw std::logic_error("anomaly_rules.lp missing from the corpus");
    Program rules = parseProgram(entry->text);

    Program out;
    out.consts = rules.consts;
    out.shows = rules.shows;

    const std::vector<std::string> students{"s1", "s2", "s3", "s4", "s5"};
    const std::vector<std::string> companies{"c1", "c2", "c3", "c4", "c5"};
    const std::vector<std::string> attributes{"f", "m", "csai", "dsbg"};

    int sourceIndex = 0;
    auto addFact = [&](const std::string& pred, std::vector<std::string> args) {
        Rule fact;
        fact.sourceIndex = sourceIndex++;
        fact.head.predicate = pred;
        for (auto& arg : args) fact.head.args.push_back(SymbolicConstant{std::move(arg)});
        out.statements.push_back(std::move(fact));
    };

    for (const auto& s : students) addFact("node_s", {s});
    for (const auto& s : students) addFact("node_s_attrib", {s});
    for (const auto& a : attributes) addFact("node_s_attrib", {a});

    std::vector<std::pair<std::string, std::string>> interactionPairs;
    for (const auto& s : students) {
        for (const auto& c : companies) interactionPairs.emplace_back(s, c);
    }
    std::shuffle(interactionPairs.begin(), interactionPairs.end(), rng);
    for (int i = 0; i < 13; ++i) {
        addFact("edge", {interactionPairs[i].first, interactionPairs[i].second});
    }

    std::vector<std::pair<std::string, std::string>> attributePairs;
    for (const auto& s : students) {
        for (const auto& a : attributes) attributePairs.emplace_back(s, a);
    }
    std::shuffle(attributePairs.begin(), attributePairs.end(), rng);
    for (int i = 0; i < 8; ++i) {
        addFact("edge_attrib", {attributePairs[i].first, attributePairs[i].second});
    }

    for (const Rule& rule : rules.statements) {
        if (rule.isFact()) continue;
        Rule copy = rule;
        copy.sourceIndex = sourceIndex++;
        out.statements.push_back(std::move(copy));
    }
    return out;
}

}  // namespace xasp::test
