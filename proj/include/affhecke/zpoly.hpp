#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace affhecke {

// Dense univariate polynomial over Z in the indeterminate q.
// Invariant: no trailing zero coefficients; zero is the empty vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const mpz_class& constant);
    explicit ZPoly(long constant);
    static ZPoly variable();
    static ZPoly monomial(const mpz_class& coeff, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(std::size_t k) const;
    const mpz_class& leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monomial() const;

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& other) const;
    ZPoly operator-(const ZPoly& other) const;
    ZPoly operator*(const ZPoly& other) const;
    bool operator==(const ZPoly& other) const { return coeffs_ == other.coeffs_; }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    ZPoly primitive_part() const;
    // Exact division: requires other | *this over Z[q].
    ZPoly div_exact(const ZPoly& other) const;
    // gcd over Z[q] via content split and a primitive remainder sequence.
    // Result has positive leading coefficient (or is zero).
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);

    std::string to_string() const;

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

}  // namespace affhecke
