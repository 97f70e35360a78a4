#include "xasp/ast.hpp"

#include <stdexcept>

namespace xasp {

bool isGround(const Term& term) {
    return std::holds_alternative<IntegerConstant>(term) ||
           std::holds_alternative<SymbolicConstant>(term);
}

Term toTerm(const GroundTerm& g) {
    return std::visit([](const auto& t) -> Term { return t; }, g);
}

std::optional<GroundTerm> toGroundTerm(const Term& term) {
    if (const auto* i = std::get_if<IntegerConstant>(&term)) return GroundTerm{*i};
    if (const auto* s = std::get_if<SymbolicConstant>(&term)) return GroundTerm{*s};
    return std::nullopt;
}

Atom toAtom(const GroundAtom& g) {
    Atom atom{g.predicate, {}};
    atom.args.reserve(g.args.size());
    for (const auto& arg : g.args) atom.args.push_back(toTerm(arg));
    return atom;
}

bool isGround(const Atom& atom) {
    for (const auto& arg : atom.args) {
        if (!isGround(arg)) return false;
    }
    return true;
}

std::optional<GroundAtom> toGroundAtom(const Atom& atom) {
    GroundAtom g{atom.predicate, {}};
    g.args.reserve(atom.args.size());
    for (const auto& arg : atom.args) {
        auto ground = toGroundTerm(arg);
        if (!ground) return std::nullopt;
        g.args.push_back(*ground);
    }
    return g;
}

const char* compareOpText(CompareOp op) {
    switch (op) {
        case CompareOp::Eq: return "=";
        case CompareOp::Ne: return "!=";
        case CompareOp::Lt: return "<";
        case CompareOp::Le: return "<=";
        case CompareOp::Gt: return ">";
        case CompareOp::Ge: return ">=";
    }
    return "?";
}

bool isTestLiteral(const Literal& lit) {
    return !std::holds_alternative<PositiveLiteral>(lit);
}

bool structurallyEqual(const Rule& a, const Rule& b) {
    return a.head == b.head && a.body == b.body;
}

bool structurallyEqual(const Program& a, const Program& b) {
    if (a.consts != b.consts || a.shows != b.shows) return false;
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        if (!structurallyEqual(a.statements[i], b.statements[i])) return false;
    }
    return true;
}

std::set<Predicate> programPredicates(const Program& program) {
    std::set<Predicate> preds;
    auto addAtom = [&preds](const Atom& atom) { preds.insert(atom.pred()); };
    for (const Rule& rule : program.statements) {
        addAtom(rule.head);
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
                addAtom(p->atom);
            } else if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
                addAtom(n->atom);
            } else if (const auto* c = std::get_if<CountLiteral>(&lit)) {
                addAtom(c->condition);
            }
        }
    }
    return preds;
}

Term applyToTerm(const Term& term, const Substitution& theta) {
    if (const auto* v = std::get_if<Variable>(&term)) {
        auto it = theta.find(v->name);
        if (it != theta.end()) return toTerm(it->second);
    }
    return term;
}

Atom applyToAtom(const Atom& atom, const Substitution& theta) {
    Atom out{atom.predicate, {}};
    out.args.reserve(atom.args.size());
    for (const auto& arg : atom.args) out.args.push_back(applyToTerm(arg, theta));
    return out;
}

Literal applyToLiteral(const Literal& lit, const Substitution& theta) {
    if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
        return PositiveLiteral{applyToAtom(p->atom, theta)};
    }
    if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
        return NegatedLiteral{applyToAtom(n->atom, theta)};
    }
    if (const auto* c = std::get_if<ComparisonLiteral>(&lit)) {
        return ComparisonLiteral{applyToTerm(c->lhs, theta), c->op, applyToTerm(c->rhs, theta)};
    }
    const auto& count = std::get<CountLiteral>(lit);
    Substitution scoped = theta;
    for (const Variable& local : count.locals) scoped.erase(local.name);
    return CountLiteral{applyToTerm(count.bound, theta), count.locals,
                        applyToAtom(count.condition, scoped)};
}

GroundAtom groundAtom(const Atom& atom, const Substitution& theta) {
    auto ground = toGroundAtom(applyToAtom(atom, theta));
    if (!ground) {
        throw std::invalid_argument("atom '" + atom.predicate +
                                    "' is not ground under the given substitution");
    }
    return *ground;
}

void appendVariables(const Term& term, std::vector<std::string>& out,
                     std::set<std::string>& seen) {
    if (const auto* v = std::get_if<Variable>(&term)) {
        if (seen.insert(v->name).second) out.push_back(v->name);
    }
}

void appendVariables(const Atom& atom, std::vector<std::string>& out,
                     std::set<std::string>& seen) {
    for (const auto& arg : atom.args) appendVariables(arg, out, seen);
}

}  // namespace xasp
