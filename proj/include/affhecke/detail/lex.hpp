#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "affhecke/errors.hpp"
#include "affhecke/scalar.hpp"

namespace affhecke::detail {

enum class Tok {
    end,
    integer,
    ident,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;  // integer digits or identifier name
};

// Shared tokenizer for scalar expressions, algebra elements and generator
// words. Identifiers are maximal letter runs, so "Tinv2" lexes as
// ident "Tinv" followed by integer "2".
class Lexer {
public:
    explicit Lexer(const std::string& input) {
        std::size_t i = 0;
        while (i < input.size()) {
            char c = input[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
                tokens_.push_back({Tok::integer, input.substr(i, j - i)});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < input.size() && std::isalpha(static_cast<unsigned char>(input[j]))) ++j;
                tokens_.push_back({Tok::ident, input.substr(i, j - i)});
                i = j;
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::plus; break;
                case '-': kind = Tok::minus; break;
                case '*': kind = Tok::star; break;
                case '/': kind = Tok::slash; break;
                case '^': kind = Tok::caret; break;
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case '[': kind = Tok::lbracket; break;
                case ']': kind = Tok::rbracket; break;
                case ',': kind = Tok::comma; break;
                default:
                    raise(errc::parse_error,
                          std::string("unexpected character '") + c + "' in \"" + input + "\"");
            }
            tokens_.push_back({kind, std::string(1, c)});
            ++i;
        }
    }

    const Token& peek(std::size_t ahead = 0) const {
        static const Token kEnd{Tok::end, ""};
        std::size_t idx = pos_ + ahead;
        return idx < tokens_.size() ? tokens_[idx] : kEnd;
    }

    Token next() {
        Token t = peek();
        if (t.kind != Tok::end) ++pos_;
        return t;
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            raise(errc::parse_error, std::string("expected ") + what + " near \"" +
                                         (peek().kind == Tok::end ? "<end>" : peek().text) + "\"");
        return next();
    }

    bool at_end() const { return peek().kind == Tok::end; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Full additive scalar expression.
Scalar parse_scalar_expression(Lexer& lex, const FieldDesc& field);
// Multiplicative chain used for element coefficients: stops before a '*'
// that introduces a T or X part.
Scalar parse_scalar_coefficient(Lexer& lex, const FieldDesc& field);
// Integer literal with optional sign, bounded to long.
long parse_signed_long(Lexer& lex);

}  // namespace affhecke::detail
