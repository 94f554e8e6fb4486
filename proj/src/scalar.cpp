#include "affhecke/scalar.hpp"

#include <limits>

#include "affhecke/detail/lex.hpp"
#include "affhecke/errors.hpp"

namespace affhecke {

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) raise(errc::division_by_zero, "inverse of zero residue");
    mpz_class r;
    mpz_class am(static_cast<unsigned long>(a)), pm(static_cast<unsigned long>(p));
    if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), pm.get_mpz_t()) == 0)
        raise(errc::division_by_zero, "residue is not invertible");
    return mpz_get_ui(r.get_mpz_t());
}

RatFun reduce_ratfun(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) raise(errc::denominator_zero, "rational function with zero denominator");
    if (num.is_zero()) return RatFun{ZPoly(), ZPoly(1)};
    ZPoly g = ZPoly::gcd(num, den);
    ZPoly n = num.div_exact(g);
    ZPoly d = den.div_exact(g);
    if (d.leading() < 0) {
        n = -n;
        d = -d;
    }
    return RatFun{n, d};
}

int cmp_mpz(const mpz_class& a, const mpz_class& b) { return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

bool is_prime_u64(std::uint64_t p) {
    mpz_class m(static_cast<unsigned long>(p));
    return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

FieldDesc FieldDesc::rationals() { return FieldDesc{FieldKind::rationals, 0}; }

FieldDesc FieldDesc::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        raise(errc::noninvertible_modulus, "modulus " + std::to_string(p) + " is not prime");
    return FieldDesc{FieldKind::prime_field, p};
}

FieldDesc FieldDesc::rational_functions() { return FieldDesc{FieldKind::rational_functions, 0}; }

FieldDesc FieldDesc::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "Qq") return rational_functions();
    if (text.rfind("Fp:", 0) == 0) {
        std::string digits = text.substr(3);
        if (digits.empty()) raise(errc::malformed_scalar, "missing modulus in \"" + text + "\"");
        mpz_class m;
        if (mpz_set_str(m.get_mpz_t(), digits.c_str(), 10) != 0 || m <= 0)
            raise(errc::malformed_scalar, "bad modulus in \"" + text + "\"");
        if (!m.fits_ulong_p())
            raise(errc::malformed_scalar, "modulus out of range in \"" + text + "\"");
        return prime_field(mpz_get_ui(m.get_mpz_t()));
    }
    raise(errc::malformed_scalar, "unknown field descriptor \"" + text + "\"");
}

std::string FieldDesc::to_string() const {
    switch (kind) {
        case FieldKind::rationals: return "Q";
        case FieldKind::prime_field: return "Fp:" + std::to_string(modulus);
        case FieldKind::rational_functions: return "Qq";
    }
    return "?";
}

Scalar::Scalar() : field_(FieldDesc::rationals()), value_(mpq_class(0)) {}

Scalar Scalar::zero(const FieldDesc& field) { return from_int(0, field); }

Scalar Scalar::one(const FieldDesc& field) { return from_int(1, field); }

Scalar Scalar::from_int(long value, const FieldDesc& field) {
    Scalar s;
    s.field_ = field;
    switch (field.kind) {
        case FieldKind::rationals:
            s.value_ = mpq_class(value);
            break;
        case FieldKind::prime_field: {
            mpz_class v(value);
            s.value_ = static_cast<std::uint64_t>(
                mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(field.modulus)));
            break;
        }
        case FieldKind::rational_functions:
            s.value_ = RatFun{ZPoly(value), ZPoly(1)};
            break;
    }
    return s;
}

Scalar Scalar::rational(const mpq_class& value) {
    Scalar s;
    s.field_ = FieldDesc::rationals();
    mpq_class v = value;
    v.canonicalize();
    s.value_ = v;
    return s;
}

Scalar Scalar::residue(const mpz_class& value, std::uint64_t p) {
    Scalar s;
    s.field_ = FieldDesc::prime_field(p);
    s.value_ = static_cast<std::uint64_t>(
        mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p)));
    return s;
}

Scalar Scalar::rational_function(const ZPoly& num, const ZPoly& den) {
    Scalar s;
    s.field_ = FieldDesc::rational_functions();
    s.value_ = reduce_ratfun(num, den);
    return s;
}

Scalar Scalar::indeterminate() {
    return rational_function(ZPoly::variable(), ZPoly(1));
}

bool Scalar::is_zero() const {
    switch (field_.kind) {
        case FieldKind::rationals: return std::get<mpq_class>(value_) == 0;
        case FieldKind::prime_field: return std::get<std::uint64_t>(value_) == 0;
        case FieldKind::rational_functions: return std::get<RatFun>(value_).num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::check_same_field(const Scalar& other) const {
    if (!(field_ == other.field_))
        raise(errc::field_mismatch,
              "mixed fields " + field_.to_string() + " and " + other.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (field_.kind) {
        case FieldKind::rationals:
            r.value_ = mpq_class(-std::get<mpq_class>(value_));
            break;
        case FieldKind::prime_field: {
            std::uint64_t v = std::get<std::uint64_t>(value_);
            r.value_ = v == 0 ? v : field_.modulus - v;
            break;
        }
        case FieldKind::rational_functions: {
            const RatFun& f = std::get<RatFun>(value_);
            r.value_ = RatFun{-f.num, f.den};
            break;
        }
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_same_field(other);
    Scalar r = *this;
    switch (field_.kind) {
        case FieldKind::rationals:
            r.value_ = mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(other.value_));
            break;
        case FieldKind::prime_field:
            r.value_ = addmod(std::get<std::uint64_t>(value_),
                              std::get<std::uint64_t>(other.value_), field_.modulus);
            break;
        case FieldKind::rational_functions: {
            const RatFun& a = std::get<RatFun>(value_);
            const RatFun& b = std::get<RatFun>(other.value_);
            r.value_ = reduce_ratfun(a.num * b.den + b.num * a.den, a.den * b.den);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    check_same_field(other);
    Scalar r = *this;
    switch (field_.kind) {
        case FieldKind::rationals:
            r.value_ = mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(other.value_));
            break;
        case FieldKind::prime_field:
            r.value_ = mulmod(std::get<std::uint64_t>(value_),
                              std::get<std::uint64_t>(other.value_), field_.modulus);
            break;
        case FieldKind::rational_functions: {
            const RatFun& a = std::get<RatFun>(value_);
            const RatFun& b = std::get<RatFun>(other.value_);
            r.value_ = reduce_ratfun(a.num * b.num, a.den * b.den);
            break;
        }
    }
    return r;
}

Scalar Scalar::inverse() const {
    Scalar r = *this;
    switch (field_.kind) {
        case FieldKind::rationals: {
            const mpq_class& v = std::get<mpq_class>(value_);
            if (v == 0) raise(errc::division_by_zero, "inverse of zero");
            r.value_ = mpq_class(1 / v);
            break;
        }
        case FieldKind::prime_field:
            r.value_ = invmod(std::get<std::uint64_t>(value_), field_.modulus);
            break;
        case FieldKind::rational_functions: {
            const RatFun& f = std::get<RatFun>(value_);
            if (f.num.is_zero()) raise(errc::division_by_zero, "inverse of zero");
            r.value_ = reduce_ratfun(f.den, f.num);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& other) const {
    check_same_field(other);
    if (other.is_zero()) raise(errc::division_by_zero, "division by zero");
    return *this * other.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc = one(field_);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& other) const {
    check_same_field(other);
    return value_ == other.value_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    switch (a.field_.kind) {
        case FieldKind::rationals: {
            return mpq_cmp(std::get<mpq_class>(a.value_).get_mpq_t(),
                           std::get<mpq_class>(b.value_).get_mpq_t());
        }
        case FieldKind::prime_field: {
            std::uint64_t x = std::get<std::uint64_t>(a.value_);
            std::uint64_t y = std::get<std::uint64_t>(b.value_);
            return x < y ? -1 : (x > y ? 1 : 0);
        }
        case FieldKind::rational_functions: {
            const RatFun& f = std::get<RatFun>(a.value_);
            const RatFun& g = std::get<RatFun>(b.value_);
            if (f.num.degree() != g.num.degree()) return f.num.degree() < g.num.degree() ? -1 : 1;
            if (f.den.degree() != g.den.degree()) return f.den.degree() < g.den.degree() ? -1 : 1;
            for (int k = f.num.degree(); k >= 0; --k)
                if (int c = cmp_mpz(f.num.coeff(static_cast<std::size_t>(k)),
                                    g.num.coeff(static_cast<std::size_t>(k))))
                    return c < 0 ? -1 : 1;
            for (int k = f.den.degree(); k >= 0; --k)
                if (int c = cmp_mpz(f.den.coeff(static_cast<std::size_t>(k)),
                                    g.den.coeff(static_cast<std::size_t>(k))))
                    return c < 0 ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

const mpq_class& Scalar::rational_value() const {
    if (field_.kind != FieldKind::rationals)
        raise(errc::field_mismatch, "not a rational value");
    return std::get<mpq_class>(value_);
}

const RatFun& Scalar::ratfun_value() const {
    if (field_.kind != FieldKind::rational_functions)
        raise(errc::field_mismatch, "not a rational function");
    return std::get<RatFun>(value_);
}

std::uint64_t Scalar::residue_value() const {
    if (field_.kind != FieldKind::prime_field)
        raise(errc::field_mismatch, "not a prime field residue");
    return std::get<std::uint64_t>(value_);
}

std::string Scalar::to_string() const {
    switch (field_.kind) {
        case FieldKind::rationals: return std::get<mpq_class>(value_).get_str();
        case FieldKind::prime_field: return std::to_string(std::get<std::uint64_t>(value_));
        case FieldKind::rational_functions: {
            const RatFun& f = std::get<RatFun>(value_);
            if (f.den == ZPoly(1)) return f.num.to_string();
            return "(" + f.num.to_string() + ")/(" + f.den.to_string() + ")";
        }
    }
    return "?";
}

namespace detail {

namespace {

Scalar parse_atom(Lexer& lex, const FieldDesc& field);

Scalar parse_power(Lexer& lex, const FieldDesc& field) {
    Scalar base = parse_atom(lex, field);
    if (lex.accept(Tok::caret)) {
        long e = parse_signed_long(lex);
        return base.pow(e);
    }
    return base;
}

Scalar parse_factor(Lexer& lex, const FieldDesc& field) {
    bool neg = false;
    while (true) {
        if (lex.accept(Tok::minus))
            neg = !neg;
        else if (lex.accept(Tok::plus))
            ;
        else
            break;
    }
    Scalar v = parse_power(lex, field);
    return neg ? -v : v;
}

Scalar parse_term(Lexer& lex, const FieldDesc& field) {
    Scalar v = parse_factor(lex, field);
    while (true) {
        if (lex.accept(Tok::star)) {
            v = v * parse_factor(lex, field);
        } else if (lex.accept(Tok::slash)) {
            Scalar d = parse_factor(lex, field);
            if (d.is_zero()) raise(errc::denominator_zero, "zero denominator in scalar literal");
            v = v / d;
        } else
            break;
    }
    return v;
}

Scalar parse_atom(Lexer& lex, const FieldDesc& field) {
    const Token& t = lex.peek();
    if (t.kind == Tok::integer) {
        mpz_class v(lex.next().text);
        switch (field.kind) {
            case FieldKind::rationals: return Scalar::rational(mpq_class(v));
            case FieldKind::prime_field: return Scalar::residue(v, field.modulus);
            case FieldKind::rational_functions:
                return Scalar::rational_function(ZPoly(v), ZPoly(1));
        }
    }
    if (t.kind == Tok::ident && t.text == "q") {
        if (field.kind != FieldKind::rational_functions)
            raise(errc::malformed_scalar,
                  "the symbol q is only defined over field Qq, not " + field.to_string());
        lex.next();
        return Scalar::indeterminate();
    }
    if (t.kind == Tok::lparen) {
        lex.next();
        Scalar v = parse_scalar_expression(lex, field);
        lex.expect(Tok::rparen, "')'");
        return v;
    }
    raise(errc::malformed_scalar, "expected scalar atom near \"" +
                                      (t.kind == Tok::end ? "<end>" : t.text) + "\"");
}

}  // namespace

long parse_signed_long(Lexer& lex) {
    bool neg = lex.accept(Tok::minus);
    if (!neg) lex.accept(Tok::plus);
    Token t = lex.expect(Tok::integer, "integer");
    mpz_class v(t.text);
    if (neg) v = -v;
    if (!v.fits_slong_p()) raise(errc::parse_error, "integer out of range: " + t.text);
    return mpz_get_si(v.get_mpz_t());
}

Scalar parse_scalar_expression(Lexer& lex, const FieldDesc& field) {
    Scalar v = parse_term(lex, field);
    while (true) {
        if (lex.accept(Tok::plus))
            v = v + parse_term(lex, field);
        else if (lex.peek().kind == Tok::minus) {
            lex.next();
            v = v - parse_term(lex, field);
        } else
            break;
    }
    return v;
}

Scalar parse_scalar_coefficient(Lexer& lex, const FieldDesc& field) {
    Scalar v = parse_factor(lex, field);
    while (true) {
        if (lex.peek().kind == Tok::star) {
            const Token& after = lex.peek(1);
            if (after.kind == Tok::ident && (after.text == "T" || after.text == "X")) break;
            lex.next();
            v = v * parse_factor(lex, field);
        } else if (lex.peek().kind == Tok::slash) {
            lex.next();
            Scalar d = parse_factor(lex, field);
            if (d.is_zero()) raise(errc::denominator_zero, "zero denominator in scalar literal");
            v = v / d;
        } else
            break;
    }
    return v;
}

}  // namespace detail

Scalar Scalar::parse(const std::string& text, const FieldDesc& field) {
    try {
        detail::Lexer lex(text);
        if (lex.at_end()) raise(errc::malformed_scalar, "empty scalar expression");
        Scalar v = detail::parse_scalar_expression(lex, field);
        if (!lex.at_end())
            raise(errc::malformed_scalar, "trailing input in scalar \"" + text + "\"");
        return v;
    } catch (const Error& e) {
        if (e.code() == errc::parse_error)
            raise(errc::malformed_scalar, std::string(e.what()));
        throw;
    }
}

}  // namespace affhecke
