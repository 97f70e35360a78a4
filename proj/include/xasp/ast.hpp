#ifndef XASP_AST_HPP
#define XASP_AST_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace xasp {

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

struct Variable {
    std::string name;  // starts uppercase
    auto operator<=>(const Variable&) const = default;
};

struct SymbolicConstant {
    std::string name;  // starts lowercase
    auto operator<=>(const SymbolicConstant&) const = default;
};

struct IntegerConstant {
    long long value = 0;
    auto operator<=>(const IntegerConstant&) const = default;
};

// Closed integer range, fact heads only. lo <= hi.
struct Interval {
    long long lo = 0;
    long long hi = 0;
    auto operator<=>(const Interval&) const = default;
};

using Term = std::variant<IntegerConstant, SymbolicConstant, Variable, Interval>;

// A term with no variables and no intervals. Integers order before symbols.
using GroundTerm = std::variant<IntegerConstant, SymbolicConstant>;

bool isGround(const Term& term);
Term toTerm(const GroundTerm& g);
std::optional<GroundTerm> toGroundTerm(const Term& term);

// ---------------------------------------------------------------------------
// Atoms and literals
// ---------------------------------------------------------------------------

// Predicate identity is (name, arity).
struct Predicate {
    std::string name;
    int arity = 0;
    auto operator<=>(const Predicate&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    Predicate pred() const { return {predicate, static_cast<int>(args.size())}; }
    auto operator<=>(const Atom&) const = default;
};

struct GroundAtom {
    std::string predicate;
    std::vector<GroundTerm> args;

    Predicate pred() const { return {predicate, static_cast<int>(args.size())}; }
    auto operator<=>(const GroundAtom&) const = default;
};

Atom toAtom(const GroundAtom& g);
bool isGround(const Atom& atom);
std::optional<GroundAtom> toGroundAtom(const Atom& atom);

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

// Operator spelling as it appears in source.
const char* compareOpText(CompareOp op);

struct PositiveLiteral {
    Atom atom;
    auto operator<=>(const PositiveLiteral&) const = default;
};

// Default negation ("not p(X)"). A test literal.
struct NegatedLiteral {
    Atom atom;
    auto operator<=>(const NegatedLiteral&) const = default;
};

// "=" and "!=" are syntactic equality on ground terms; the order operators
// are defined on integers only. A test literal.
struct ComparisonLiteral {
    Term lhs;
    CompareOp op = CompareOp::Eq;
    Term rhs;
    auto operator<=>(const ComparisonLiteral&) const = default;
};

// bound = #count{ locals : condition }. The locals are scoped to the
// condition; the bound is an integer, a const name, or a variable that the
// positive body binds. A test literal.
struct CountLiteral {
    Term bound;
    std::vector<Variable> locals;
    Atom condition;
    auto operator<=>(const CountLiteral&) const = default;
};

using Literal = std::variant<PositiveLiteral, NegatedLiteral, ComparisonLiteral, CountLiteral>;

bool isTestLiteral(const Literal& lit);

// ---------------------------------------------------------------------------
// Rules and programs
// ---------------------------------------------------------------------------

struct Rule {
    Atom head;
    std::vector<Literal> body;  // empty => fact
    int sourceIndex = 0;        // statement position in the file
    std::optional<int> ruleId;  // assigned by numberRules

    bool isFact() const { return body.empty(); }
};

struct ShowDirective {
    std::string predicate;
    int arity = 0;
    auto operator<=>(const ShowDirective&) const = default;
};

struct Program {
    std::map<std::string, long long> consts;  // from #const, unique names
    std::vector<Rule> statements;             // source order
    std::vector<ShowDirective> shows;
};

// Equality up to sourceIndex and ruleId.
bool structurallyEqual(const Rule& a, const Rule& b);
bool structurallyEqual(const Program& a, const Program& b);

// Every predicate occurring in the program (heads, bodies, count conditions).
std::set<Predicate> programPredicates(const Program& program);

// ---------------------------------------------------------------------------
// Substitutions
// ---------------------------------------------------------------------------

// Variable name -> ground term; total on its declared domain.
using Substitution = std::map<std::string, GroundTerm>;

// Substitute bound variables; unbound variables are kept as-is.
Term applyToTerm(const Term& term, const Substitution& theta);
Atom applyToAtom(const Atom& atom, const Substitution& theta);

// Count locals shadow outer bindings and stay unbound.
Literal applyToLiteral(const Literal& lit, const Substitution& theta);

// Requires every variable bound and no intervals; throws std::invalid_argument.
GroundAtom groundAtom(const Atom& atom, const Substitution& theta);

// Appends variable names in first-occurrence order, skipping ones already seen.
void appendVariables(const Term& term, std::vector<std::string>& out, std::set<std::string>& seen);
void appendVariables(const Atom& atom, std::vector<std::string>& out, std::set<std::string>& seen);

}  // namespace xasp

#endif
