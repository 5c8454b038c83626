#pragma once

#include <string>
#include <vector>

#include "lck/errors.hpp"

namespace lck::dsl {

class ParseError : public Error {
public:
    ParseError(int line, int column, std::string message, std::vector<std::string> expected = {});
    int line;
    int column;
    std::string message;
    std::vector<std::string> expected;
};

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

// Comments run from '#' or "//" to the end of the line.
std::vector<Token> lex(const std::string& source);

}  // namespace lck::dsl
