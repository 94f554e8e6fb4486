#include "affhecke/zpoly.hpp"

#include <sstream>

#include "affhecke/errors.hpp"

namespace affhecke {

ZPoly::ZPoly(const mpz_class& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

ZPoly::ZPoly(long constant) : ZPoly(mpz_class(constant)) {}

ZPoly ZPoly::variable() { return monomial(1, 1); }

ZPoly ZPoly::monomial(const mpz_class& coeff, std::size_t degree) {
    ZPoly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(degree + 1, mpz_class(0));
    p.coeffs_[degree] = coeff;
    return p;
}

mpz_class ZPoly::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) return 0;
    return coeffs_[k];
}

const mpz_class& ZPoly::leading() const {
    if (is_zero()) raise(errc::internal, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool ZPoly::is_monomial() const {
    if (is_zero()) return false;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& other) const {
    ZPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), mpz_class(0));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
        r.coeffs_[k] = coeff(k) + other.coeff(k);
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& other) const { return *this + (-other); }

ZPoly ZPoly::operator*(const ZPoly& other) const {
    ZPoly r;
    if (is_zero() || other.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    r.trim();
    return r;
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    mpz_class g = content();
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c /= g;
    if (r.coeffs_.back() < 0)
        for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly ZPoly::div_exact(const ZPoly& other) const {
    if (other.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
    if (is_zero()) return ZPoly();
    if (degree() < other.degree())
        raise(errc::internal, "inexact polynomial division");
    ZPoly q;
    q.coeffs_.assign(static_cast<std::size_t>(degree() - other.degree()) + 1, mpz_class(0));
    ZPoly r = *this;
    while (!r.is_zero() && r.degree() >= other.degree()) {
        mpz_class c;
        mpz_class rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                    other.leading().get_mpz_t());
        if (rem != 0) raise(errc::internal, "inexact polynomial division");
        std::size_t shift = static_cast<std::size_t>(r.degree() - other.degree());
        q.coeffs_[shift] = c;
        r = r - monomial(c, shift) * other;
        if (!r.is_zero() && r.degree() < other.degree())
            raise(errc::internal, "inexact polynomial division");
    }
    q.trim();
    return q;
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : b.primitive_part() * ZPoly(b.content());
    if (b.is_zero()) return a.primitive_part() * ZPoly(a.content());
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    ZPoly f = a.primitive_part();
    ZPoly g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    // Primitive pseudo-remainder sequence.
    while (!g.is_zero()) {
        ZPoly r = f;
        long gap = f.degree() - g.degree();
        // prem(f, g): scale f by lc(g)^(gap+1) and divide.
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), g.leading().get_mpz_t(),
                   static_cast<unsigned long>(gap + 1));
        r = r * ZPoly(scale);
        while (!r.is_zero() && r.degree() >= g.degree()) {
            mpz_class c = r.leading() / g.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            r = r - monomial(c, shift) * g;
        }
        f = g;
        g = r.is_zero() ? ZPoly() : r.primitive_part();
    }
    return f.primitive_part() * ZPoly(cont);
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace affhecke
