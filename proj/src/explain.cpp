#include "xasp/explain.hpp"

#include <algorithm>
#include <sstream>

#include "xasp/render.hpp"

namespace xasp {

AnswerSet stripExtension(const AnswerSet& extended, const std::string& recordingPredicate) {
    AnswerSet out;
    for (const GroundAtom& atom : extended.atoms) {
        if (atom.predicate == recordingPredicate) continue;
        out.atoms.insert(atom);
        auto meta = extended.meta.find(atom);
        if (meta != extended.meta.end()) out.meta.emplace(atom, meta->second);
    }
    return out;
}

std::pair<int, Substitution> extractSubstitution(const GroundAtom& recordingAtom,
                                                 const std::map<int, Rule>& ruleIdMap) {
    if (recordingAtom.args.empty() ||
        !std::holds_alternative<IntegerConstant>(recordingAtom.args.front())) {
        throw ArityMismatchError("recording atom '" + toText(recordingAtom) +
                                 "' does not start with a rule id");
    }
    long long id = std::get<IntegerConstant>(recordingAtom.args.front()).value;
    auto rule = ruleIdMap.find(static_cast<int>(id));
    if (rule == ruleIdMap.end()) {
        throw ArityMismatchError("recording atom '" + toText(recordingAtom) +
                                 "' names unknown rule " + std::to_string(id));
    }
    std::vector<Variable> projected = projectedVars(rule->second);
    if (recordingAtom.args.size() != projected.size() + 1) {
        throw ArityMismatchError("recording atom '" + toText(recordingAtom) + "' has " +
                                 std::to_string(recordingAtom.args.size() - 1) +
                                 " argument(s) but rule " + std::to_string(id) + " projects " +
                                 std::to_string(projected.size()) + " variable(s)");
    }
    Substitution theta;
    for (std::size_t i = 0; i < projected.size(); ++i) {
        theta.emplace(projected[i].name, recordingAtom.args[i + 1]);
    }
    return {static_cast<int>(id), std::move(theta)};
}

std::vector<Explanation> buildExplanations(const AnswerSet& extended,
                                           const InstrumentedProgram& instrumented) {
    // Recording atoms are ordered by (id, substitution images) inside the
    // atom set already, which is exactly the output order we want.
    std::vector<Explanation> out;
    for (const GroundAtom& atom : extended.atoms) {
        if (atom.predicate != instrumented.recordingPredicate) continue;
        auto [ruleId, theta] = extractSubstitution(atom, instrumented.ruleIdMap);
        const Rule& rule = instrumented.ruleIdMap.at(ruleId);
        auto [positive, test] = partitionBody(rule);

        Explanation e;
        e.head = groundAtom(rule.head, theta);
        e.ruleId = ruleId;
        e.theta = std::move(theta);
        e.positiveBody.reserve(positive.size());
        for (const Atom& b : positive) e.positiveBody.push_back(groundAtom(b, e.theta));
        e.testBody.reserve(test.size());
        for (const Literal& t : test) e.testBody.push_back(applyToLiteral(t, e.theta));
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Explanation> selectExplanations(const std::vector<Explanation>& explanations,
                                            const ExplanationFilter& filter) {
    std::vector<Explanation> out;
    for (const Explanation& e : explanations) {
        if (filter.predicates && !filter.predicates->contains(e.head.pred())) continue;
        if (filter.atom && e.head != *filter.atom) continue;
        out.push_back(e);
    }
    return out;
}

std::vector<Explanation> allSupports(const GroundAtom& atom,
                                     const std::vector<Explanation>& explanations) {
    std::vector<Explanation> out;
    for (const Explanation& e : explanations) {
        if (e.head == atom) out.push_back(e);
    }
    return out;
}

namespace {

class TreeBuilder {
public:
    TreeBuilder(const std::vector<Explanation>& explanations, const AnswerSet& answerSet,
                std::optional<int> maxDepth)
        : explanations_(explanations), answerSet_(answerSet), maxDepth_(maxDepth) {}

    JustificationTree build(const GroundAtom& atom, int depth) {
        auto meta = answerSet_.meta.find(atom);
        if (meta == answerSet_.meta.end()) {
            throw NotInAnswerSetError("atom '" + toText(atom) + "' is not in the answer set");
        }
        if (meta->second.isFact) {
            return JustificationTree{atom, FactSupport{}, {}, {}};
        }
        if (maxDepth_ && depth >= *maxDepth_) {
            throw DepthExceededError("justification for '" + toText(atom) +
                                     "' exceeds depth limit " + std::to_string(*maxDepth_));
        }

        const Explanation* support = canonicalSupport(atom, meta->second);
        JustificationTree tree{atom, RuleSupport{support->ruleId, support->theta}, {}, {}};
        tree.children.reserve(support->positiveBody.size());
        for (const GroundAtom& child : support->positiveBody) {
            tree.children.push_back(build(child, depth + 1));
        }
        tree.testLeaves = support->testBody;
        return tree;
    }

private:
    const std::vector<Explanation>& explanations_;
    const AnswerSet& answerSet_;
    std::optional<int> maxDepth_;

    // Supports whose positive body does not strictly precede the atom in the
    // (stratum, round) order would make the tree cyclic and are skipped.
    bool roundRespecting(const Explanation& e, const DerivationInfo& head) const {
        for (const GroundAtom& body : e.positiveBody) {
            auto meta = answerSet_.meta.find(body);
            if (meta == answerSet_.meta.end()) return false;
            const DerivationInfo& info = meta->second;
            if (std::pair(info.stratum, info.round) >= std::pair(head.stratum, head.round)) {
                return false;
            }
        }
        return true;
    }

    const Explanation* canonicalSupport(const GroundAtom& atom, const DerivationInfo& head) const {
        for (const Explanation& e : explanations_) {
            if (e.head == atom && roundRespecting(e, head)) return &e;
        }
        throw Error("no round-respecting support found for '" + toText(atom) +
                    "'; was the program fully instrumented?");
    }
};

}  // namespace

JustificationTree buildJustificationTree(const GroundAtom& atom,
                                         const std::vector<Explanation>& explanations,
                                         const AnswerSet& answerSet,
                                         std::optional<int> maxDepth) {
    if (!answerSet.contains(atom)) {
        throw NotInAnswerSetError("atom '" + toText(atom) + "' is not in the answer set");
    }
    return TreeBuilder(explanations, answerSet, maxDepth).build(atom, 0);
}

}  // namespace xasp
