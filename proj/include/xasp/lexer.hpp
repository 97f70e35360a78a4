#ifndef XASP_LEXER_HPP
#define XASP_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "xasp/errors.hpp"

namespace xasp {

enum class TokenKind {
    Identifier,  // lowercase-led: predicate or symbolic constant
    Variable,    // uppercase-led
    Integer,
    Dot,
    DotDot,
    Comma,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Colon,
    ColonDash,
    Slash,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    KwNot,
    KwConst,
    KwCount,
    KwShow,
    End,
};

const char* tokenKindName(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    long long value = 0;  // Integer only
    SourcePos pos;
};

// '%' starts a comment to end of line. Throws IllegalCharacterError.
std::vector<Token> tokenize(std::string_view text);

}  // namespace xasp

#endif
