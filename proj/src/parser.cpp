#include "xasp/parser.hpp"

#include <sstream>

#include "xasp/lexer.hpp"

namespace xasp {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    Program parseProgram() {
        Program program;
        int sourceIndex = 0;
        while (!check(TokenKind::End)) {
            parseStatement(program, sourceIndex++);
        }
        return program;
    }

    GroundAtom parseSingleGroundAtom() {
        Atom atom = parseAtom(/*allowInterval=*/false);
        expect(TokenKind::End, "end of atom");
        auto ground = toGroundAtom(atom);
        if (!ground) {
            fail(tokens_.front().pos, "atom must be ground", {});
        }
        return *ground;
    }

private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;

    const Token& tok(std::size_t ahead = 0) const {
        std::size_t i = at_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    bool check(TokenKind kind) const { return tok().kind == kind; }

    bool accept(TokenKind kind) {
        if (!check(kind)) return false;
        ++at_;
        return true;
    }

    Token take() { return tokens_[at_++]; }

    [[noreturn]] void fail(SourcePos pos, const std::string& what,
                           std::vector<std::string> expected) {
        std::ostringstream oss;
        oss << "syntax error at line " << pos.line << ", column " << pos.column << ": " << what;
        if (!expected.empty()) {
            oss << " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) oss << (i + 1 == expected.size() ? " or " : ", ");
                oss << expected[i];
            }
            oss << ")";
        }
        throw SyntaxError(oss.str(), pos, std::move(expected));
    }

    [[noreturn]] void failHere(const std::string& what, std::vector<std::string> expected) {
        fail(tok().pos, what + ", got " + tokenKindName(tok().kind), std::move(expected));
    }

    Token expect(TokenKind kind, const char* what) {
        if (!check(kind)) failHere(std::string("expected ") + what, {tokenKindName(kind)});
        return take();
    }

    static bool isComparisonOp(TokenKind kind) {
        switch (kind) {
            case TokenKind::Eq:
            case TokenKind::Ne:
            case TokenKind::Lt:
            case TokenKind::Le:
            case TokenKind::Gt:
            case TokenKind::Ge: return true;
            default: return false;
        }
    }

    static CompareOp toCompareOp(TokenKind kind) {
        switch (kind) {
            case TokenKind::Eq: return CompareOp::Eq;
            case TokenKind::Ne: return CompareOp::Ne;
            case TokenKind::Lt: return CompareOp::Lt;
            case TokenKind::Le: return CompareOp::Le;
            case TokenKind::Gt: return CompareOp::Gt;
            default: return CompareOp::Ge;
        }
    }

    void parseStatement(Program& program, int sourceIndex) {
        if (accept(TokenKind::KwConst)) {
            Token name = expect(TokenKind::Identifier, "constant name");
            expect(TokenKind::Eq, "'='");
            Token value = expect(TokenKind::Integer, "integer value");
            expect(TokenKind::Dot, "'.'");
            if (!program.consts.emplace(name.text, value.value).second) {
                fail(name.pos, "duplicate #const name '" + name.text + "'", {});
            }
            return;
        }
        if (accept(TokenKind::KwShow)) {
            Token name = expect(TokenKind::Identifier, "predicate name");
            expect(TokenKind::Slash, "'/'");
            Token arity = expect(TokenKind::Integer, "arity");
            if (arity.value < 0) fail(arity.pos, "arity must be nonnegative", {});
            expect(TokenKind::Dot, "'.'");
            program.shows.push_back({name.text, static_cast<int>(arity.value)});
            return;
        }
        program.statements.push_back(parseRule(sourceIndex));
    }

    Rule parseRule(int sourceIndex) {
        SourcePos headPos = tok().pos;
        Rule rule;
        rule.sourceIndex = sourceIndex;
        rule.head = parseAtom(/*allowInterval=*/true);
        if (accept(TokenKind::ColonDash)) {
            rule.body.push_back(parseLiteral());
            while (accept(TokenKind::Comma)) rule.body.push_back(parseLiteral());
        }
        expect(TokenKind::Dot, "'.'");
        if (!rule.body.empty()) {
            for (const Term& arg : rule.head.args) {
                if (std::holds_alternative<Interval>(arg)) {
                    fail(headPos, "intervals are only allowed in fact heads", {});
                }
            }
        }
        return rule;
    }

    Atom parseAtom(bool allowInterval) {
        Token name = expect(TokenKind::Identifier, "predicate name");
        Atom atom{name.text, {}};
        if (accept(TokenKind::LParen)) {
            atom.args.push_back(parseTerm(allowInterval));
            while (accept(TokenKind::Comma)) atom.args.push_back(parseTerm(allowInterval));
            expect(TokenKind::RParen, "')'");
        }
        return atom;
    }

    Term parseTerm(bool allowInterval) {
        if (check(TokenKind::Variable)) return Variable{take().text};
        if (check(TokenKind::Identifier)) return SymbolicConstant{take().text};
        if (check(TokenKind::Integer)) {
            Token lo = take();
            if (check(TokenKind::DotDot)) {
                Token dots = take();
                Token hi = expect(TokenKind::Integer, "interval upper bound");
                if (!allowInterval) {
                    fail(dots.pos, "intervals are only allowed in fact heads", {});
                }
                if (lo.value > hi.value) {
                    fail(dots.pos, "empty interval " + std::to_string(lo.value) + ".." +
                                       std::to_string(hi.value),
                         {});
                }
                return Interval{lo.value, hi.value};
            }
            return IntegerConstant{lo.value};
        }
        failHere("expected term", {"variable", "identifier", "integer"});
    }

    Literal parseLiteral() {
        if (accept(TokenKind::KwNot)) {
            return NegatedLiteral{parseAtom(/*allowInterval=*/false)};
        }
        // An identifier followed by '(' or by anything but a comparison
        // operator is a positive atom; otherwise we are looking at the left
        // term of a comparison or count literal.
        if (check(TokenKind::Identifier)) {
            if (tok(1).kind == TokenKind::LParen || !isComparisonOp(tok(1).kind)) {
                return PositiveLiteral{parseAtom(/*allowInterval=*/false)};
            }
        }
        if (!check(TokenKind::Identifier) && !check(TokenKind::Variable) &&
            !check(TokenKind::Integer) && !check(TokenKind::KwNot)) {
            failHere("expected body literal", {"'not'", "identifier", "variable", "integer"});
        }
        Term lhs = parseTerm(/*allowInterval=*/false);
        if (!isComparisonOp(tok().kind)) {
            failHere("expected comparison operator after term",
                     {"'='", "'!='", "'<'", "'<='", "'>'", "'>='"});
        }
        Token op = take();
        if (op.kind == TokenKind::Eq && check(TokenKind::KwCount)) {
            return parseCount(lhs);
        }
        Term rhs = parseTerm(/*allowInterval=*/false);
        return ComparisonLiteral{lhs, toCompareOp(op.kind), rhs};
    }

    Literal parseCount(Term bound) {
        expect(TokenKind::KwCount, "'#count'");
        expect(TokenKind::LBrace, "'{'");
        CountLiteral count;
        count.bound = std::move(bound);
        count.locals.push_back(Variable{expect(TokenKind::Variable, "count variable").text});
        while (accept(TokenKind::Comma)) {
            count.locals.push_back(Variable{expect(TokenKind::Variable, "count variable").text});
        }
        expect(TokenKind::Colon, "':'");
        count.condition = parseAtom(/*allowInterval=*/false);
        expect(TokenKind::RBrace, "'}'");
        return count;
    }
};

Term resolveTerm(const Term& term, const std::map<std::string, long long>& consts) {
    if (const auto* s = std::get_if<SymbolicConstant>(&term)) {
        auto it = consts.find(s->name);
        if (it != consts.end()) return IntegerConstant{it->second};
    }
    return term;
}

}  // namespace

Program parseProgram(std::string_view text) { return Parser(text).parseProgram(); }

GroundAtom parseGroundAtom(std::string_view text) { return Parser(text).parseSingleGroundAtom(); }

Program resolveConsts(const Program& program) {
    Program out = program;
    for (Rule& rule : out.statements) {
        for (Literal& lit : rule.body) {
            if (auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
                cmp->lhs = resolveTerm(cmp->lhs, out.consts);
                cmp->rhs = resolveTerm(cmp->rhs, out.consts);
            } else if (auto* count = std::get_if<CountLiteral>(&lit)) {
                count->bound = resolveTerm(count->bound, out.consts);
            }
        }
    }
    return out;
}

std::string SafetyViolation::message() const {
    std::ostringstream oss;
    oss << "statement " << sourceIndex + 1 << ": variable " << variable << " " << reason;
    return oss.str();
}

namespace {

std::set<std::string> atomVariables(const Atom& atom) {
    std::vector<std::string> vars;
    std::set<std::string> seen;
    appendVariables(atom, vars, seen);
    return seen;
}

}  // namespace

std::vector<SafetyViolation> safetyCheck(const Program& program) {
    std::vector<SafetyViolation> violations;
    for (std::size_t idx = 0; idx < program.statements.size(); ++idx) {
        const Rule& rule = program.statements[idx];

        std::set<std::string> positive;
        for (const Literal& lit : rule.body) {
            if (const auto* p = std::get_if<PositiveLiteral>(&lit)) {
                auto vars = atomVariables(p->atom);
                positive.insert(vars.begin(), vars.end());
            }
        }

        auto report = [&](const std::string& var, const std::string& reason) {
            violations.push_back(
                {static_cast<int>(idx), rule.sourceIndex, var, reason});
        };
        auto requirePositive = [&](const Term& term, const std::string& where) {
            if (const auto* v = std::get_if<Variable>(&term)) {
                if (!positive.contains(v->name)) {
                    report(v->name, "occurs " + where + " but in no positive body atom");
                }
            }
        };

        for (const Term& arg : rule.head.args) requirePositive(arg, "in the head");

        for (const Literal& lit : rule.body) {
            if (const auto* n = std::get_if<NegatedLiteral>(&lit)) {
                for (const Term& arg : n->atom.args) requirePositive(arg, "under 'not'");
            } else if (const auto* cmp = std::get_if<ComparisonLiteral>(&lit)) {
                requirePositive(cmp->lhs, "in a comparison");
                requirePositive(cmp->rhs, "in a comparison");
            } else if (const auto* count = std::get_if<CountLiteral>(&lit)) {
                std::set<std::string> locals;
                for (const Variable& v : count->locals) locals.insert(v.name);
                requirePositive(count->bound, "as a count bound");
                std::set<std::string> conditionVars;
                for (const Term& arg : count->condition.args) {
                    if (const auto* v = std::get_if<Variable>(&arg)) conditionVars.insert(v->name);
                }
                for (const std::string& var : conditionVars) {
                    if (!locals.contains(var) && !positive.contains(var)) {
                        report(var, "occurs in a count condition but is neither local to the "
                                    "count nor in a positive body atom");
                    }
                }
                for (const Variable& local : count->locals) {
                    if (!conditionVars.contains(local.name)) {
                        report(local.name, "is a count local that does not occur in the count "
                                           "condition");
                    }
                }
                // Locality: locals must not leak outside their count literal.
                auto leaks = [&](const std::string& name) {
                    for (const Term& arg : rule.head.args) {
                        if (const auto* v = std::get_if<Variable>(&arg); v && v->name == name)
                            return true;
                    }
                    for (const Literal& other : rule.body) {
                        if (&other == &lit) continue;
                        if (const auto* p = std::get_if<PositiveLiteral>(&other)) {
                            if (atomVariables(p->atom).contains(name)) return true;
                        } else if (const auto* on = std::get_if<NegatedLiteral>(&other)) {
                            if (atomVariables(on->atom).contains(name)) return true;
                        } else if (const auto* ocmp = std::get_if<ComparisonLiteral>(&other)) {
                            for (const Term* t : {&ocmp->lhs, &ocmp->rhs}) {
                                if (const auto* v = std::get_if<Variable>(t); v && v->name == name)
                                    return true;
                            }
                        } else if (const auto* oc = std::get_if<CountLiteral>(&other)) {
                            if (const auto* v = std::get_if<Variable>(&oc->bound);
                                v && v->name == name)
                                return true;
                        }
                    }
                    return false;
                };
                for (const Variable& local : count->locals) {
                    if (leaks(local.name)) {
                        report(local.name, "is a count local but also occurs outside the count "
                                           "literal");
                    }
                }
            }
        }
    }
    return violations;
}

}  // namespace xasp
