#include "lck/dsl/lexer.hpp"

#include <cctype>

namespace lck::dsl {
namespace {

std::string format(int line, int column, const std::string& message, const std::vector<std::string>& expected) {
    std::string s = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    if (!expected.empty()) {
        s += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
        s += ")";
    }
    return s;
}

}  // namespace

ParseError::ParseError(int l, int c, std::string m, std::vector<std::string> e)
    : Error(format(l, c, m, e)), line(l), column(c), message(std::move(m)), expected(std::move(e)) {}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        int l = line, cc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), l, cc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, src.substr(i, j - i), l, cc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Punct, "->", l, cc});
            advance(2);
            continue;
        }
        static const std::string punct = "[]{}(),;=+-*/^.:";
        if (punct.find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), l, cc});
            advance(1);
            continue;
        }
        throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

}  // namespace lck::dsl
