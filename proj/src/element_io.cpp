#include "affhecke/element_io.hpp"

#include <sstream>

#include "affhecke/detail/lex.hpp"
#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

// A coefficient needs parentheses when it is an additive expression or
// carries a leading minus sign; parenthesized subterms do not count.
bool needs_wrap(const std::string& s) {
    if (s.empty()) return true;
    if (s[0] == '-') return true;
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if ((c == '+' || c == '-') && depth == 0 && k > 0) return true;
    }
    return false;
}

std::string coeff_string(const Scalar& c) {
    std::string s = c.to_string();
    return needs_wrap(s) ? "(" + s + ")" : s;
}

std::string word_part(const Permutation& w) {
    std::string s = "T[";
    bool first = true;
    for (int i : w.reduced_word()) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i);
    }
    return s + "]";
}

std::vector<long> parse_long_list(detail::Lexer& lex) {
    std::vector<long> values;
    lex.expect(detail::Tok::lbracket, "'['");
    if (!lex.accept(detail::Tok::rbracket)) {
        values.push_back(detail::parse_signed_long(lex));
        while (lex.accept(detail::Tok::comma)) values.push_back(detail::parse_signed_long(lex));
        lex.expect(detail::Tok::rbracket, "']'");
    }
    return values;
}

}  // namespace

std::string element_to_string(const HeckeElement& h) {
    if (h.is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const auto& [w, f] : h.rows()) {
        for (const auto& [lambda, c] : f.terms()) {
            if (!first_term) out << " + ";
            first_term = false;
            bool has_t = !w.is_identity();
            bool has_x = exp_total_degree(lambda) != 0 ||
                         lambda != ExpVec(lambda.size(), 0);
            if (!has_t && !has_x) {
                out << coeff_string(c);
                continue;
            }
            bool wrote = false;
            if (!c.is_one()) {
                out << coeff_string(c);
                wrote = true;
            }
            if (has_t) {
                if (wrote) out << "*";
                out << word_part(w);
                wrote = true;
            }
            if (has_x) {
                if (wrote) out << "*";
                out << "X^" << exp_to_string(lambda);
            }
        }
    }
    return out.str();
}

HeckeElement parse_element(const Algebra& algebra, const std::string& text) {
    detail::Lexer lex(text);
    HeckeElement result = HeckeElement::zero(algebra);
    int m = algebra.n + 1;
    bool subtract = false;
    if (lex.at_end()) raise(errc::parse_error, "empty element");
    while (true) {
        bool neg = subtract;
        // Leading signs of the term.
        while (true) {
            if (lex.accept(detail::Tok::minus))
                neg = !neg;
            else if (lex.accept(detail::Tok::plus))
                ;
            else
                break;
        }
        Scalar coeff = Scalar::one(algebra.field);
        bool have_any = false;
        const detail::Token& t0 = lex.peek();
        bool at_t = t0.kind == detail::Tok::ident && t0.text == "T";
        bool at_x = t0.kind == detail::Tok::ident && t0.text == "X";
        if (!at_t && !at_x) {
            coeff = detail::parse_scalar_coefficient(lex, algebra.field);
            have_any = true;
            if (lex.peek().kind == detail::Tok::star) lex.next();
        }
        Permutation w = Permutation::identity(m);
        const detail::Token& t1 = lex.peek();
        if (t1.kind == detail::Tok::ident && t1.text == "T") {
            lex.next();
            std::vector<long> letters = parse_long_list(lex);
            std::vector<int> word;
            for (long v : letters) {
                if (v < 1 || v > algebra.n)
                    raise(errc::index_out_of_range, "T word letter " + std::to_string(v));
                word.push_back(static_cast<int>(v));
            }
            w = Permutation::from_word(word, algebra.n + 1);
            if (w.length() != static_cast<int>(word.size()))
                raise(errc::parse_error, "T word is not reduced");
            have_any = true;
            if (lex.peek().kind == detail::Tok::star) lex.next();
        }
        ExpVec lambda(static_cast<std::size_t>(m), 0);
        const detail::Token& t2 = lex.peek();
        if (t2.kind == detail::Tok::ident && t2.text == "X") {
            lex.next();
            lex.expect(detail::Tok::caret, "'^'");
            std::vector<long> exps = parse_long_list(lex);
            if (static_cast<int>(exps.size()) != m)
                raise(errc::length_mismatch,
                      "exponent list has length " + std::to_string(exps.size()) + ", expected " +
                          std::to_string(m));
            lambda = normalize_exponent(std::move(exps));
            have_any = true;
        }
        if (!have_any)
            raise(errc::parse_error, "expected a term near \"" +
                                         (lex.peek().kind == detail::Tok::end ? "<end>"
                                                                              : lex.peek().text) +
                                         "\"");
        if (neg) coeff = -coeff;
        result = result + HeckeElement::term(algebra, w, lambda, coeff);
        if (lex.at_end()) break;
        if (lex.accept(detail::Tok::plus)) {
            subtract = false;
        } else if (lex.accept(detail::Tok::minus)) {
            subtract = true;
        } else {
            raise(errc::parse_error, "unexpected token \"" + lex.peek().text + "\"");
        }
    }
    return result;
}

}  // namespace affhecke
