#include "affhecke/hecke.hpp"

#include "affhecke/errors.hpp"

namespace affhecke {

Algebra::Algebra(int n_, const FieldDesc& field_, const Scalar& q_)
    : n(n_), field(field_), q(q_) {
    if (n < 1) raise(errc::index_out_of_range, "rank must be at least 1");
    if (!(q.field() == field))
        raise(errc::field_mismatch, "parameter q lies in " + q.field().to_string() +
                                        ", algebra field is " + field.to_string());
    if (q.is_zero()) raise(errc::zero_parameter, "parameter q must be invertible");
}

HeckeElement::HeckeElement(const Algebra& algebra) : algebra_(algebra) {}

HeckeElement HeckeElement::zero(const Algebra& algebra) { return HeckeElement(algebra); }

HeckeElement HeckeElement::one(const Algebra& algebra) {
    return term(algebra, Permutation::identity(algebra.n + 1),
                ExpVec(static_cast<std::size_t>(algebra.n + 1), 0), Scalar::one(algebra.field));
}

HeckeElement HeckeElement::term(const Algebra& algebra, const Permutation& w, const ExpVec& lambda,
                                const Scalar& coeff) {
    if (w.size() != algebra.n + 1)
        raise(errc::length_mismatch, "permutation size does not match rank");
    HeckeElement h(algebra);
    h.add_row(w, LaurentPoly::monomial(algebra.n, lambda, coeff));
    return h;
}

HeckeElement HeckeElement::generator(const Algebra& algebra, Gen kind, int index) {
    int m = algebra.n + 1;
    ExpVec zero_exp(static_cast<std::size_t>(m), 0);
    switch (kind) {
        case Gen::T:
            return term(algebra, Permutation::simple_reflection(index, m), zero_exp,
                        Scalar::one(algebra.field));
        case Gen::Tinv: {
            // T_i^{-1} = q^{-1} T_i + (q^{-1} - 1).
            Scalar qinv = algebra.q.inverse();
            HeckeElement h = term(algebra, Permutation::simple_reflection(index, m), zero_exp, qinv);
            h.add_row(Permutation::identity(m),
                      LaurentPoly::monomial(algebra.n, zero_exp, qinv - Scalar::one(algebra.field)));
            return h;
        }
        case Gen::X:
            if (index < 1 || index > m)
                raise(errc::index_out_of_range, "X index " + std::to_string(index));
            return term(algebra, Permutation::identity(m), exp_unit(index, m),
                        Scalar::one(algebra.field));
        case Gen::Xinv:
            if (index < 1 || index > m)
                raise(errc::index_out_of_range, "X index " + std::to_string(index));
            return term(algebra, Permutation::identity(m), exp_neg(exp_unit(index, m)),
                        Scalar::one(algebra.field));
    }
    raise(errc::internal, "unknown generator kind");
}

std::size_t HeckeElement::term_count() const {
    std::size_t k = 0;
    for (const auto& [w, f] : rows_) {
        (void)w;
        k += f.term_count();
    }
    return k;
}

void HeckeElement::check_compatible(const HeckeElement& other) const {
    if (algebra_.n != other.algebra_.n)
        raise(errc::length_mismatch, "rank mismatch between elements");
    if (!(algebra_.field == other.algebra_.field))
        raise(errc::field_mismatch, "field mismatch between elements");
    if (!(algebra_.q == other.algebra_.q))
        raise(errc::parameter_mismatch, "elements belong to algebras with different parameters");
}

void HeckeElement::add_row(const Permutation& w, const LaurentPoly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = rows_.emplace(w, f);
    if (!inserted) {
        it->second = it->second + f;
        if (it->second.is_zero()) rows_.erase(it);
    }
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(algebra_);
    for (const auto& [w, f] : rows_) r.rows_.emplace(w, -f);
    return r;
}

HeckeElement HeckeElement::operator+(const HeckeElement& other) const {
    check_compatible(other);
    HeckeElement r = *this;
    for (const auto& [w, f] : other.rows_) r.add_row(w, f);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& other) const { return *this + (-other); }

HeckeElement HeckeElement::scale(const Scalar& c) const {
    HeckeElement r(algebra_);
    if (c.is_zero()) return r;
    for (const auto& [w, f] : rows_) r.rows_.emplace(w, f.scale(c));
    return r;
}

bool HeckeElement::operator==(const HeckeElement& other) const {
    check_compatible(other);
    if (rows_.size() != other.rows_.size()) return false;
    auto it = rows_.begin();
    auto jt = other.rows_.begin();
    for (; it != rows_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

HeckeElement HeckeElement::times_T(int i) const {
    int m = algebra_.n + 1;
    Permutation si = Permutation::simple_reflection(i, m);
    LaurentPoly divisor = LaurentPoly::one(algebra_.n, algebra_.field) -
                          LaurentPoly::monomial(algebra_.n, exp_add(exp_unit(i, m), exp_neg(exp_unit(i + 1, m))),
                                                Scalar::one(algebra_.field));
    Scalar qm1 = algebra_.q - Scalar::one(algebra_.field);
    HeckeElement result(algebra_);
    for (const auto& [w, f] : rows_) {
        LaurentPoly fs = f.permute_variables(si);
        // f T_i = T_i (s_i f) + (q-1) (f - s_i f) / (1 - X_i X_{i+1}^{-1})
        LaurentPoly delta = f - fs;
        if (!delta.is_zero()) {
            LaurentPoly corr = LaurentPoly::exact_divide(delta, divisor).scale(qm1);
            result.add_row(w, corr);
        }
        Permutation wsi = w.compose(si);
        if (wsi.length() > w.length()) {
            result.add_row(wsi, fs);
        } else {
            // T_w T_i = (q-1) T_w + q T_{w s_i} when l(w s_i) < l(w).
            result.add_row(w, fs.scale(qm1));
            result.add_row(wsi, fs.scale(algebra_.q));
        }
    }
    return result;
}

HeckeElement HeckeElement::times_laurent(const LaurentPoly& g) const {
    HeckeElement result(algebra_);
    if (g.is_zero()) return result;
    for (const auto& [w, f] : rows_) result.add_row(w, f * g);
    return result;
}

HeckeElement HeckeElement::operator*(const HeckeElement& other) const {
    check_compatible(other);
    HeckeElement result(algebra_);
    for (const auto& [v, g] : other.rows_) {
        HeckeElement cur = *this;
        for (int i : v.reduced_word()) cur = cur.times_T(i);
        result = result + cur.times_laurent(g);
    }
    return result;
}

HeckeElement commute_x_past_t(const Algebra& algebra, const ExpVec& lambda, int i) {
    HeckeElement h = HeckeElement::term(algebra, Permutation::identity(algebra.n + 1), lambda,
                                        Scalar::one(algebra.field));
    return h * HeckeElement::generator(algebra, Gen::T, i);
}

std::string gen_name(Gen kind, int index) {
    switch (kind) {
        case Gen::T: return "T" + std::to_string(index);
        case Gen::Tinv: return "Tinv" + std::to_string(index);
        case Gen::X: return "X" + std::to_string(index);
        case Gen::Xinv: return "Xinv" + std::to_string(index);
    }
    return "?";
}

}  // namespace affhecke
