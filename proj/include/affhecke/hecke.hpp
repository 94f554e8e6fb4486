#pragma once

#include <map>
#include <string>

#include "affhecke/laurent.hpp"
#include "affhecke/permutation.hpp"
#include "affhecke/scalar.hpp"

namespace affhecke {

// Ambient affine Hecke algebra: rank n (generators T_1..T_n, X_1..X_{n+1})
// over the given field with invertible parameter q.
struct Algebra {
    int n;
    FieldDesc field;
    Scalar q;

    Algebra(int n, const FieldDesc& field, const Scalar& q);
    bool operator==(const Algebra& other) const {
        return n == other.n && field == other.field && q == other.q;
    }
};

enum class Gen { T, Tinv, X, Xinv };

// Element in the basis {T_w * X^lambda}: a finite sum of rows T_w * f_w with
// f_w a Laurent polynomial. Rows are kept in PermOrder and zero rows erased,
// so equal elements have identical representations.
class HeckeElement {
public:
    using RowMap = std::map<Permutation, LaurentPoly, PermOrder>;

    explicit HeckeElement(const Algebra& algebra);
    static HeckeElement zero(const Algebra& algebra);
    static HeckeElement one(const Algebra& algebra);
    static HeckeElement generator(const Algebra& algebra, Gen kind, int index);
    static HeckeElement term(const Algebra& algebra, const Permutation& w, const ExpVec& lambda,
                             const Scalar& coeff);

    const Algebra& algebra() const { return algebra_; }
    bool is_zero() const { return rows_.empty(); }
    const RowMap& rows() const { return rows_; }
    std::size_t term_count() const;

    HeckeElement operator-() const;
    HeckeElement operator+(const HeckeElement& other) const;
    HeckeElement operator-(const HeckeElement& other) const;
    HeckeElement operator*(const HeckeElement& other) const;
    HeckeElement scale(const Scalar& c) const;
    bool operator==(const HeckeElement& other) const;
    bool operator!=(const HeckeElement& other) const { return !(*this == other); }

    void add_row(const Permutation& w, const LaurentPoly& f);

private:
    Algebra algebra_;
    RowMap rows_;

    void check_compatible(const HeckeElement& other) const;
    // Right-multiplies the whole element by T_i.
    HeckeElement times_T(int i) const;
    // Right-multiplies by a Laurent polynomial (commutative tail).
    HeckeElement times_laurent(const LaurentPoly& g) const;
};

// X^lambda * T_i rewritten into the T_w X^mu basis:
//   X^lambda T_i = T_i X^{s_i lambda} + (q-1) (X^lambda - X^{s_i lambda}) / (1 - X_i X_{i+1}^{-1}).
// The division is always exact.
HeckeElement commute_x_past_t(const Algebra& algebra, const ExpVec& lambda, int i);

std::string gen_name(Gen kind, int index);

}  // namespace affhecke
