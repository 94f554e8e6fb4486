#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "affhecke/zpoly.hpp"

namespace affhecke {

enum class FieldKind { rationals, prime_field, rational_functions };

// Coefficient field descriptor: Q, F_p (p prime), or Q(q).
struct FieldDesc {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t modulus = 0;  // prime_field only

    static FieldDesc rationals();
    static FieldDesc prime_field(std::uint64_t p);
    static FieldDesc rational_functions();
    // Accepts "Q", "Fp:<prime>", "Qq".
    static FieldDesc parse(const std::string& text);
    std::string to_string() const;
    bool operator==(const FieldDesc&) const = default;
};

// Reduced fraction of integer polynomials; den is nonzero, coprime to num
// (including content), with positive leading coefficient. Zero is 0/1.
struct RatFun {
    ZPoly num;
    ZPoly den = ZPoly(1);
    bool operator==(const RatFun&) const = default;
};

// Exact field element. All arithmetic is field-checked: mixing elements of
// different fields raises FieldMismatch.
class Scalar {
public:
    Scalar();  // rational zero

    static Scalar zero(const FieldDesc& field);
    static Scalar one(const FieldDesc& field);
    static Scalar from_int(long value, const FieldDesc& field);
    static Scalar rational(const mpq_class& value);
    static Scalar residue(const mpz_class& value, std::uint64_t p);
    static Scalar rational_function(const ZPoly& num, const ZPoly& den);
    // The indeterminate q of Q(q).
    static Scalar indeterminate();

    const FieldDesc& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    // Total order inside one field, used for deterministic multiset output:
    // rationals by value; residues by representative; rational functions by
    // (num degree, den degree, then coefficients from the top down).
    static int compare(const Scalar& a, const Scalar& b);

    // Rational value of a rationals-field element.
    const mpq_class& rational_value() const;
    const RatFun& ratfun_value() const;
    std::uint64_t residue_value() const;

    std::string to_string() const;
    // Parses the scalar expression grammar (integers, q, + - * / ^, parens)
    // and evaluates it in the given field.
    static Scalar parse(const std::string& text, const FieldDesc& field);

private:
    FieldDesc field_;
    std::variant<mpq_class, std::uint64_t, RatFun> value_;

    void check_same_field(const Scalar& other) const;
};

bool is_prime_u64(std::uint64_t p);

}  // namespace affhecke
