#include "xasp/lexer.hpp"

#include <cctype>

namespace xasp {

const char* tokenKindName(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Variable: return "variable";
        case TokenKind::Integer: return "integer";
        case TokenKind::Dot: return "'.'";
        case TokenKind::DotDot: return "'..'";
        case TokenKind::Comma: return "','";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::Colon: return "':'";
        case TokenKind::ColonDash: return "':-'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Eq: return "'='";
        case TokenKind::Ne: return "'!='";
        case TokenKind::Lt: return "'<'";
        case TokenKind::Le: return "'<='";
        case TokenKind::Gt: return "'>'";
        case TokenKind::Ge: return "'>='";
        case TokenKind::KwNot: return "'not'";
        case TokenKind::KwConst: return "'#const'";
        case TokenKind::KwCount: return "'#count'";
        case TokenKind::KwShow: return "'#show'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skipBlanksAndComments();
            if (atEnd()) break;
            tokens.push_back(next());
        }
        tokens.push_back(Token{TokenKind::End, "", 0, pos_});
        return tokens;
    }

private:
    std::string_view src_;
    std::size_t at_ = 0;
    SourcePos pos_;

    bool atEnd() const { return at_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return at_ + ahead < src_.size() ? src_[at_ + ahead] : '\0';
    }

    char advance() {
        char c = src_[at_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skipBlanksAndComments() {
        while (!atEnd()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '%') {
                while (!atEnd() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    static bool isIdentStart(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
    static bool isVarStart(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
    static bool isIdentPart(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
    static bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    Token make(TokenKind kind, std::string text, SourcePos pos, long long value = 0) {
        return Token{kind, std::move(text), value, pos};
    }

    [[noreturn]] void illegal(SourcePos pos, const std::string& what) {
        throw IllegalCharacterError("illegal character at line " + std::to_string(pos.line) +
                                        ", column " + std::to_string(pos.column) + ": " + what,
                                    pos);
    }

    std::string readWord() {
        std::string word;
        while (!atEnd() && isIdentPart(peek())) word.push_back(advance());
        return word;
    }

    Token readNumber(SourcePos pos, bool negative) {
        std::string digits;
        while (!atEnd() && isDigit(peek())) digits.push_back(advance());
        long long value = std::stoll(digits);
        if (negative) value = -value;
        return make(TokenKind::Integer, (negative ? "-" : "") + digits, pos, value);
    }

    Token next() {
        SourcePos pos = pos_;
        char c = peek();

        if (isIdentStart(c)) {
            std::string word = readWord();
            if (word == "not") return make(TokenKind::KwNot, word, pos);
            return make(TokenKind::Identifier, word, pos);
        }
        if (isVarStart(c)) return make(TokenKind::Variable, readWord(), pos);
        if (isDigit(c)) return readNumber(pos, false);

        advance();
        switch (c) {
            case '-':
                if (isDigit(peek())) return readNumber(pos, true);
                illegal(pos, "'-' is only valid as an integer sign");
            case '#': {
                if (!isIdentStart(peek())) illegal(pos, "'#' must start a directive");
                std::string word = readWord();
                if (word == "const") return make(TokenKind::KwConst, "#const", pos);
                if (word == "count") return make(TokenKind::KwCount, "#count", pos);
                if (word == "show") return make(TokenKind::KwShow, "#show", pos);
                illegal(pos, "unknown directive '#" + word + "'");
            }
            case '.':
                if (peek() == '.') {
                    advance();
                    return make(TokenKind::DotDot, "..", pos);
                }
                return make(TokenKind::Dot, ".", pos);
            case ',': return make(TokenKind::Comma, ",", pos);
            case '(': return make(TokenKind::LParen, "(", pos);
            case ')': return make(TokenKind::RParen, ")", pos);
            case '{': return make(TokenKind::LBrace, "{", pos);
            case '}': return make(TokenKind::RBrace, "}", pos);
            case ':':
                if (peek() == '-') {
                    advance();
                    return make(TokenKind::ColonDash, ":-", pos);
                }
                return make(TokenKind::Colon, ":", pos);
            case '/': return make(TokenKind::Slash, "/", pos);
            case '=': return make(TokenKind::Eq, "=", pos);
            case '!':
                if (peek() == '=') {
                    advance();
                    return make(TokenKind::Ne, "!=", pos);
                }
                illegal(pos, "'!' is only valid in '!='");
            case '<':
                if (peek() == '=') {
                    advance();
                    return make(TokenKind::Le, "<=", pos);
                }
                return make(TokenKind::Lt, "<", pos);
            case '>':
                if (peek() == '=') {
                    advance();
                    return make(TokenKind::Ge, ">=", pos);
                }
                return make(TokenKind::Gt, ">", pos);
            default: break;
        }
        illegal(pos, std::string("'") + c + "'");
    }
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace xasp
