#include "affhecke/laurent.hpp"

#include <sstream>

#include "affhecke/errors.hpp"

namespace affhecke {

LaurentPoly::LaurentPoly(int n, const FieldDesc& field) : n_(n), field_(field) {
    if (n < 1) raise(errc::index_out_of_range, "rank must be at least 1");
}

LaurentPoly LaurentPoly::zero(int n, const FieldDesc& field) { return LaurentPoly(n, field); }

LaurentPoly LaurentPoly::one(int n, const FieldDesc& field) {
    return monomial(n, ExpVec(static_cast<std::size_t>(n + 1), 0), Scalar::one(field));
}

LaurentPoly LaurentPoly::monomial(int n, const ExpVec& lambda, const Scalar& coeff) {
    LaurentPoly p(n, coeff.field());
    if (static_cast<int>(lambda.size()) != n + 1)
        raise(errc::length_mismatch, "exponent vector length " + std::to_string(lambda.size()) +
                                         " does not match rank " + std::to_string(n));
    p.add_term(lambda, coeff);
    return p;
}

LaurentPoly LaurentPoly::variable(int n, int j, const FieldDesc& field) {
    if (j < 1 || j > n + 1)
        raise(errc::index_out_of_range, "variable index " + std::to_string(j));
    return monomial(n, exp_unit(j, n + 1), Scalar::one(field));
}

LaurentPoly LaurentPoly::elementary_symmetric(int j, int n, const FieldDesc& field) {
    if (j < 0 || j > n + 1)
        raise(errc::index_out_of_range, "elementary symmetric index " + std::to_string(j));
    LaurentPoly p(n, field);
    int m = n + 1;
    // Enumerate all j-element subsets of {1..m} in increasing order.
    std::vector<int> pick(static_cast<std::size_t>(j));
    for (int k = 0; k < j; ++k) pick[static_cast<std::size_t>(k)] = k + 1;
    while (true) {
        ExpVec lambda(static_cast<std::size_t>(m), 0);
        for (int v : pick) lambda[static_cast<std::size_t>(v - 1)] = 1;
        p.add_term(normalize_exponent(std::move(lambda)), Scalar::one(field));
        if (j == 0) break;
        int k = j - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - (j - 1 - k)) --k;
        if (k < 0) break;
        ++pick[static_cast<std::size_t>(k)];
        for (int t = k + 1; t < j; ++t)
            pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
    return p;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
    if (n_ != other.n_) raise(errc::length_mismatch, "rank mismatch");
    if (!(field_ == other.field_))
        raise(errc::field_mismatch,
              "mixed fields " + field_.to_string() + " and " + other.field_.to_string());
}

Scalar LaurentPoly::coeff(const ExpVec& lambda) const {
    auto it = terms_.find(normalize_exponent(lambda));
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void LaurentPoly::add_term(const ExpVec& lambda, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    ExpVec key = normalize_exponent(lambda);
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_, field_);
    for (const auto& [lambda, c] : terms_) r.terms_.emplace(lambda, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    check_compatible(other);
    LaurentPoly r = *this;
    for (const auto& [lambda, c] : other.terms_) r.add_term(lambda, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    check_compatible(other);
    LaurentPoly r(n_, field_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) r.add_term(exp_add(a, b), ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scale(const Scalar& c) const {
    LaurentPoly r(n_, field_);
    if (c.is_zero()) return r;
    for (const auto& [lambda, v] : terms_) r.terms_.emplace(lambda, v * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    check_compatible(other);
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::invert_variables() const {
    LaurentPoly r(n_, field_);
    for (const auto& [lambda, c] : terms_) r.add_term(exp_neg(lambda), c);
    return r;
}

LaurentPoly LaurentPoly::permute_variables(const Permutation& w) const {
    if (w.size() != n_ + 1) raise(errc::length_mismatch, "permutation size does not match rank");
    LaurentPoly r(n_, field_);
    for (const auto& [lambda, c] : terms_) r.add_term(w.act(lambda), c);
    return r;
}

Scalar LaurentPoly::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != n_ + 1)
        raise(errc::length_mismatch, "evaluation point length does not match rank");
    Scalar prod = Scalar::one(field_);
    for (const auto& a : point) {
        if (!(a.field() == field_)) raise(errc::field_mismatch, "evaluation point field mismatch");
        if (a.is_zero()) raise(errc::zero_coordinate, "evaluation point has a zero coordinate");
        prod = prod * a;
    }
    if (!prod.is_one())
        raise(errc::product_not_one, "evaluation point coordinates must multiply to 1");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [lambda, c] : terms_) {
        Scalar term = c;
        for (std::size_t k = 0; k < lambda.size(); ++k)
            if (lambda[k] != 0) term = term * point[k].pow(lambda[k]);
        acc = acc + term;
    }
    return acc;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
    f.check_compatible(g);
    if (g.is_zero()) raise(errc::division_by_zero, "Laurent division by zero");
    int n = f.rank();
    const FieldDesc& field = f.field();
    if (f.is_zero()) return zero(n, field);

    // Shift both operands by monomial units so every exponent becomes
    // nonnegative; graded-lex is then a well-order and single-divisor long
    // division terminates. Divisibility is unchanged by unit factors.
    auto min_shift = [n](const LaurentPoly& p) {
        ExpVec s(static_cast<std::size_t>(n + 1), 0);
        bool first = true;
        for (const auto& [lambda, c] : p.terms()) {
            (void)c;
            for (std::size_t k = 0; k < s.size(); ++k)
                s[k] = first ? lambda[k] : std::min(s[k], lambda[k]);
            first = false;
        }
        return s;  // last entry stays 0, so this is already canonical
    };
    ExpVec sf = min_shift(f);
    ExpVec sg = min_shift(g);
    LaurentPoly F = f * monomial(n, exp_neg(sf), Scalar::one(field));
    LaurentPoly G = g * monomial(n, exp_neg(sg), Scalar::one(field));

    LaurentPoly quotient(n, field);
    LaurentPoly r = F;
    const auto& ltG = *G.terms().begin();
    while (!r.is_zero()) {
        const auto& ltR = *r.terms().begin();
        ExpVec diff(ltR.first.size());
        bool divisible = true;
        for (std::size_t k = 0; k < diff.size(); ++k) {
            diff[k] = ltR.first[k] - ltG.first[k];
            if (diff[k] < 0) divisible = false;
        }
        if (!divisible) {
            LaurentPoly witness = r * monomial(n, sf, Scalar::one(field));
            raise(errc::not_divisible,
                  "Laurent division left remainder " + witness.to_string());
        }
        Scalar c = ltR.second / ltG.second;
        LaurentPoly mono = monomial(n, diff, c);
        quotient = quotient + mono;
        r = r - mono * G;
    }
    ExpVec back(sf.size());
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = sf[k] - sg[k];
    return quotient * monomial(n, back, Scalar::one(field));
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool unit_coeff = c.is_one();
        bool trivial = exp_total_degree(lambda) == 0 &&
                       lambda == ExpVec(lambda.size(), 0);
        if (trivial) {
            std::string cs = c.to_string();
            bool wrap = cs.find_first_of("+-", 1) != std::string::npos || cs[0] == '-';
            out << (wrap ? "(" + cs + ")" : cs);
            continue;
        }
        if (!unit_coeff) {
            std::string cs = c.to_string();
            bool wrap = cs.find_first_of("+-", 1) != std::string::npos || cs[0] == '-';
            out << (wrap ? "(" + cs + ")" : cs) << "*";
        }
        out << "X^" << exp_to_string(lambda);
    }
    return out.str();
}

}  // namespace affhecke
