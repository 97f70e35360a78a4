#ifndef XASP_ERRORS_HPP
#define XASP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace xasp {

struct SourcePos {
    int line = 1;
    int column = 1;
    auto operator<=>(const SourcePos&) const = default;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexer met a character that starts no token.
struct IllegalCharacterError : Error {
    IllegalCharacterError(std::string message, SourcePos where)
        : Error(std::move(message)), pos(where) {}
    SourcePos pos;
};

struct SyntaxError : Error {
    SyntaxError(std::string message, SourcePos where, std::vector<std::string> expectedTokens = {})
        : Error(std::move(message)), pos(where), expected(std::move(expectedTokens)) {}
    SourcePos pos;
    std::vector<std::string> expected;
};

// Carries one dependency cycle that traverses a test edge.
struct UnstratifiableError : Error {
    UnstratifiableError(std::string message, std::vector<std::string> cyclePredicates)
        : Error(std::move(message)), cycle(std::move(cyclePredicates)) {}
    std::vector<std::string> cycle;
};

struct UnknownConstError : Error {
    explicit UnknownConstError(std::string message) : Error(std::move(message)) {}
};

struct ReservedPredicateError : Error {
    explicit ReservedPredicateError(std::string message) : Error(std::move(message)) {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(std::string message) : Error(std::move(message)) {}
};

struct NotInAnswerSetError : Error {
    explicit NotInAnswerSetError(std::string message) : Error(std::move(message)) {}
};

struct DepthExceededError : Error {
    explicit DepthExceededError(std::string message) : Error(std::move(message)) {}
};

struct SolverSpawnError : Error {
    explicit SolverSpawnError(std::string message) : Error(std::move(message)) {}
};

struct SolverOutputParseError : Error {
    explicit SolverOutputParseError(std::string message) : Error(std::move(message)) {}
};

}  // namespace xasp

#endif
