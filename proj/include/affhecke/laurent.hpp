#pragma once

#include <map>
#include <string>
#include <vector>

#include "affhecke/exponents.hpp"
#include "affhecke/permutation.hpp"
#include "affhecke/scalar.hpp"

namespace affhecke {

// Element of the Laurent subring generated by X_1..X_{n+1} subject to
// X_1*...*X_{n+1} = 1. Monomials are stored with canonical exponent vectors
// (last entry zero) ordered graded-lex largest first.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Scalar, GrlexDesc>;

    LaurentPoly(int n, const FieldDesc& field);
    static LaurentPoly zero(int n, const FieldDesc& field);
    static LaurentPoly one(int n, const FieldDesc& field);
    static LaurentPoly monomial(int n, const ExpVec& lambda, const Scalar& coeff);
    // X_j as a Laurent monomial; requires 1 <= j <= n+1.
    static LaurentPoly variable(int n, int j, const FieldDesc& field);
    // j-th elementary symmetric function of X_1..X_{n+1}, 0 <= j <= n+1.
    static LaurentPoly elementary_symmetric(int j, int n, const FieldDesc& field);

    int rank() const { return n_; }
    const FieldDesc& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    // Coefficient of the canonical form of lambda (zero scalar if absent).
    Scalar coeff(const ExpVec& lambda) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly scale(const Scalar& c) const;
    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    // Substitutes X_j -> X_j^{-1} for every j.
    LaurentPoly invert_variables() const;
    // Applies w to every monomial exponent.
    LaurentPoly permute_variables(const Permutation& w) const;
    // Evaluates at a point with nonzero coordinates whose product is 1.
    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Exact quotient f/g; raises NotDivisible (with a remainder witness in
    // the message) when g does not divide f.
    static LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

    std::string to_string() const;

    void add_term(const ExpVec& lambda, const Scalar& coeff);

private:
    int n_;
    FieldDesc field_;
    TermMap terms_;

    void check_compatible(const LaurentPoly& other) const;
};

}  // namespace affhecke
