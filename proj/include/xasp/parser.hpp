#ifndef XASP_PARSER_HPP
#define XASP_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "xasp/ast.hpp"
#include "xasp/errors.hpp"

namespace xasp {

// Parses a whole program. #const values stay symbolic until resolveConsts.
// Throws SyntaxError / IllegalCharacterError.
Program parseProgram(std::string_view text);

// Parses a single ground atom such as "cn_lp(1,3)" (used for --atom arguments).
GroundAtom parseGroundAtom(std::string_view text);

// Replaces symbolic constants that name a #const entry inside comparison
// literals and count bounds by their integer value. Other occurrences are
// left untouched.
Program resolveConsts(const Program& program);

struct SafetyViolation {
    int statementIndex = 0;  // index into Program::statements
    int sourceIndex = 0;
    std::string variable;
    std::string reason;

    std::string message() const;
};

// Range restriction: every variable in the head, in negated atoms, in
// comparison terms, in count bounds, and in count conditions outside the
// count's locals must occur in some positive body atom. Count locals must
// occur in their condition and nowhere else in the rule.
std::vector<SafetyViolation> safetyCheck(const Program& program);

}  // namespace xasp

#endif
