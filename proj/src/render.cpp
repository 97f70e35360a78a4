#include "xasp/render.hpp"

#include <json.hpp>
#include <sstream>

namespace xasp {

namespace {

using ordered_json = nlohmann::ordered_json;

// Spaced ("node(1, 2)") for source, compact ("node(1,2)") everywhere else.
std::string atomText(const Atom& atom, bool spaced) {
    std::string out = atom.predicate;
    if (atom.args.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i) out += spaced ? ", " : ",";
        out += toText(atom.args[i]);
    }
    out += ")";
    return out;
}

std::string literalText(const Literal& lit, bool spaced) {
    if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
        return atomText(p->atom, spaced);
    }
    if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
        return "not " + atomText(n->atom, spaced);
    }
    if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
        return toText(cmp->lhs) + compareOpText(cmp->op) + toText(cmp->rhs);
    }
    const auto& count = std::get<CountLiteral>(lit);
    std::string out = toText(count.bound) + "=#count{";
    for (std::size_t i = 0; i < count.locals.size(); ++i) {
        if (i) out += ",";
        out += count.locals[i].name;
    }
    out += ":" + atomText(count.condition, spaced) + "}";
    return out;
}

std::string escapeDot(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string toText(const GroundTerm& term) { return toText(toTerm(term)); }

std::string toText(const Term& term) {
    if (const auto* i = std::get_if<IntegerConstant>(&term)) return std::to_string(i->value);
    if (const auto* s = std::get_if<SymbolicConstant>(&term)) return s->name;
    if (const auto* v = std::get_if<Variable>(&term)) return v->name;
    const auto& range = std::get<Interval>(term);
    return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

std::string toText(const GroundAtom& atom) { return atomText(toAtom(atom), false); }
std::string toText(const Atom& atom) { return atomText(atom, false); }
std::string toText(const Literal& lit) { return literalText(lit, false); }

std::string ruleToSource(const Rule& rule) {
    std::string out = atomText(rule.head, true);
    if (!rule.body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < rule.body.size(); ++i) {
            if (i) out += ", ";
            out += literalText(rule.body[i], true);
        }
    }
    out += ".";
    return out;
}

std::string programToSource(const Program& program) {
    std::string out;
    for (const auto& [name, value] : program.consts) {
        out += "#const " + name + "=" + std::to_string(value) + ".\n";
    }
    for (const Rule& rule : program.statements) {
        out += ruleToSource(rule);
        out += "\n";
    }
    for (const ShowDirective& show : program.shows) {
        out += "#show " + show.predicate + "/" + std::to_string(show.arity) + ".\n";
    }
    return out;
}

std::string explanationToText(const Explanation& explanation, const RenderOptions& options) {
    std::string head = toText(explanation.head);
    std::string pos;
    for (std::size_t i = 0; i < explanation.positiveBody.size(); ++i) {
        if (i) pos += ",";
        pos += toText(explanation.positiveBody[i]);
    }
    std::string test;
    if (options.showTestLeaves) {
        for (std::size_t i = 0; i < explanation.testBody.size(); ++i) {
            if (i) test += ",";
            test += toText(explanation.testBody[i]);
        }
    }

    std::string lead = head + "-is_supported_by-";
    std::string support = "([" + head + "]-[" + pos + "]-[" + test + "])";
    if (options.maxWidth &&
        static_cast<int>(lead.size() + support.size()) > *options.maxWidth) {
        return lead + "\n   ([" + head + "]-[" + pos + "]-\n    [" + test + "])";
    }
    return lead + support;
}

std::string explanationsToDot(std::span<const Explanation> explanations,
                              const RenderOptions& options) {
    std::ostringstream out;
    out << "digraph explanations {\n";
    std::map<std::string, int> ids;
    std::vector<std::string> labels;
    auto nodeId = [&](const std::string& label) {
        auto [it, inserted] = ids.emplace(label, static_cast<int>(ids.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    struct Edge {
        int from;
        int to;
        bool dashed;
    };
    std::vector<Edge> edges;
    std::set<std::tuple<int, int, bool>> seen;
    for (const Explanation& e : explanations) {
        int headId = nodeId(toText(e.head));
        for (const GroundAtom& body : e.positiveBody) {
            Edge edge{headId, nodeId(toText(body)), false};
            if (seen.emplace(edge.from, edge.to, edge.dashed).second) edges.push_back(edge);
        }
        if (!options.showTestLeaves) continue;
        for (const Literal& test : e.testBody) {
            Edge edge{headId, nodeId(toText(test)), true};
            if (seen.emplace(edge.from, edge.to, edge.dashed).second) edges.push_back(edge);
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << "  n" << i << " [label=\"" << escapeDot(labels[i]) << "\"];\n";
    }
    for (const Edge& edge : edges) {
        out << "  n" << edge.from << " -> n" << edge.to;
        if (edge.dashed) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

void treeTextLines(const JustificationTree& tree, const RenderOptions& options, int depth,
                   std::string& out) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    out += indent + toText(tree.root);
    if (tree.isFact()) {
        out += "  [fact]\n";
        return;
    }
    const auto& support = std::get<RuleSupport>(tree.support);
    out += "  [rule " + std::to_string(support.ruleId) + "]\n";
    for (const JustificationTree& child : tree.children) {
        treeTextLines(child, options, depth + 1, out);
    }
    if (!options.showTestLeaves) return;
    std::string leafIndent(static_cast<std::size_t>(depth + 1) * 2, ' ');
    for (const Literal& test : tree.testLeaves) {
        out += leafIndent + "tested: " + toText(test) + "\n";
    }
}

struct DotNode {
    std::string label;
    bool test = false;
};

int treeDotNodes(const JustificationTree& tree, const RenderOptions& options,
                 std::vector<DotNode>& nodes, std::vector<std::tuple<int, int, bool>>& edges) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back({toText(tree.root), false});
    for (const JustificationTree& child : tree.children) {
        int childId = treeDotNodes(child, options, nodes, edges);
        edges.emplace_back(id, childId, false);
    }
    if (options.showTestLeaves) {
        for (const Literal& test : tree.testLeaves) {
            int leafId = static_cast<int>(nodes.size());
            nodes.push_back({toText(test), true});
            edges.emplace_back(id, leafId, true);
        }
    }
    return id;
}

}  // namespace

std::string treeToText(const JustificationTree& tree, const RenderOptions& options) {
    std::string out;
    treeTextLines(tree, options, 0, out);
    return out;
}

std::string treeToDot(const JustificationTree& tree, const RenderOptions& options) {
    std::vector<DotNode> nodes;
    std::vector<std::tuple<int, int, bool>> edges;
    treeDotNodes(tree, options, nodes, edges);

    std::ostringstream out;
    out << "digraph justification {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << escapeDot(nodes[i].label) << "\"";
        if (nodes[i].test) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& [from, to, dashed] : edges) {
        out << "  n" << from << " -> n" << to;
        if (dashed) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

ordered_json atomJson(const GroundAtom& atom) {
    ordered_json j;
    j["pred"] = atom.predicate;
    ordered_json args = ordered_json::array();
    for (const GroundTerm& arg : atom.args) args.push_back(toText(arg));
    j["args"] = args;
    return j;
}

ordered_json thetaJson(const Substitution& theta) {
    ordered_json j = ordered_json::object();
    for (const auto& [var, value] : theta) j[var] = toText(value);
    return j;
}

ordered_json explanationJson(const Explanation& e) {
    ordered_json j;
    j["head"] = toText(e.head);
    j["rule"] = e.ruleId;
    j["theta"] = thetaJson(e.theta);
    ordered_json pos = ordered_json::array();
    for (const GroundAtom& atom : e.positiveBody) pos.push_back(toText(atom));
    j["pos"] = pos;
    ordered_json test = ordered_json::array();
    for (const Literal& lit : e.testBody) test.push_back(toText(lit));
    j["test"] = test;
    return j;
}

ordered_json treeJson(const JustificationTree& tree) {
    ordered_json j;
    j["atom"] = toText(tree.root);
    if (tree.isFact()) {
        j["support"] = "fact";
    } else {
        const auto& support = std::get<RuleSupport>(tree.support);
        ordered_json s;
        s["rule"] = support.ruleId;
        s["theta"] = thetaJson(support.theta);
        j["support"] = s;
    }
    ordered_json children = ordered_json::array();
    for (const JustificationTree& child : tree.children) children.push_back(treeJson(child));
    j["children"] = children;
    ordered_json tests = ordered_json::array();
    for (const Literal& test : tree.testLeaves) tests.push_back(toText(test));
    j["tests"] = tests;
    return j;
}

}  // namespace

std::string toJson(const AnswerSet& answerSet) {
    ordered_json j;
    ordered_json atoms = ordered_json::array();
    for (const GroundAtom& atom : answerSet.atoms) atoms.push_back(atomJson(atom));
    j["atoms"] = atoms;
    ordered_json meta = ordered_json::object();
    for (const auto& [atom, info] : answerSet.meta) {
        ordered_json m;
        m["stratum"] = info.stratum;
        m["round"] = info.round;
        m["fact"] = info.isFact;
        meta[toText(atom)] = m;
    }
    j["meta"] = meta;
    return j.dump();
}

std::string toJson(const Explanation& explanation) { return explanationJson(explanation).dump(); }

std::string toJson(std::span<const Explanation> explanations) {
    ordered_json j = ordered_json::array();
    for (const Explanation& e : explanations) j.push_back(explanationJson(e));
    return j.dump();
}

std::string toJson(const JustificationTree& tree) { return treeJson(tree).dump(); }

}  // namespace xasp
