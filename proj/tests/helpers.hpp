#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/presentation.hpp"

namespace testutil {

using namespace affhecke;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eed);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Scalar rand_scalar(const FieldDesc& field, bool nonzero = false) {
    for (;;) {
        Scalar s = Scalar::zero(field);
        switch (field.kind) {
            case FieldKind::rationals: {
                s = Scalar::rational(mpq_class(rand_int(-50, 50), rand_int(1, 20)));
                break;
            }
            case FieldKind::prime_field: {
                s = Scalar::residue(mpz_class(rand_int(0, static_cast<long>(field.modulus) - 1)),
                                    field.modulus);
                break;
            }
            case FieldKind::rational_functions: {
                ZPoly num;
                for (std::size_t d = 0; d <= 2; ++d)
                    num = num + ZPoly::monomial(mpz_class(rand_int(-5, 5)), d);
                ZPoly den;
                while (den.is_zero()) {
                    den = ZPoly();
                    for (std::size_t d = 0; d <= 1; ++d)
                        den = den + ZPoly::monomial(mpz_class(rand_int(-3, 3)), d);
                }
                s = Scalar::rational_function(num, den);
                break;
            }
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

inline Permutation rand_permutation(int n) {
    std::vector<int> one_line(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) one_line[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(one_line.begin(), one_line.end(), rng());
    return Permutation::from_one_line(one_line);
}

inline ExpVec rand_exponent(int n, long lo = -2, long hi = 2) {
    ExpVec v(static_cast<std::size_t>(n) + 1);
    for (auto& e : v) e = rand_int(lo, hi);
    return normalize_exponent(v);
}

inline HeckeElement rand_element(const Algebra& algebra, int max_terms = 4, long exp_lo = -2,
                                 long exp_hi = 2) {
    HeckeElement h = HeckeElement::zero(algebra);
    int terms = static_cast<int>(rand_int(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Scalar c = rand_scalar(algebra.field, true);
        h = h + HeckeElement::term(algebra, rand_permutation(algebra.n),
                                   rand_exponent(algebra.n, exp_lo, exp_hi), c);
    }
    return h;
}

inline GeneratorWord rand_word(int n, int max_len) {
    GeneratorWord word;
    int len = static_cast<int>(rand_int(0, max_len));
    for (int k = 0; k < len; ++k) {
        switch (rand_int(0, 3)) {
            case 0: word.push_back({Gen::T, static_cast<int>(rand_int(1, n))}); break;
            case 1: word.push_back({Gen::Tinv, static_cast<int>(rand_int(1, n))}); break;
            case 2: word.push_back({Gen::X, static_cast<int>(rand_int(1, n + 1))}); break;
            default: word.push_back({Gen::Xinv, static_cast<int>(rand_int(1, n + 1))}); break;
        }
    }
    return word;
}

// Point with nonzero coordinates and product exactly 1.
inline std::vector<Scalar> rand_point(const Algebra& algebra) {
    std::vector<Scalar> a;
    Scalar prod = Scalar::one(algebra.field);
    for (int i = 0; i < algebra.n; ++i) {
        Scalar c = rand_scalar(algebra.field, true);
        a.push_back(c);
        prod = prod * c;
    }
    a.push_back(prod.inverse());
    return a;
}

inline HeckeElement word_element(const Algebra& algebra, const GeneratorWord& word) {
    HeckeElement h = HeckeElement::one(algebra);
    for (const Letter& l : word) h = h * HeckeElement::generator(algebra, l.kind, l.index);
    return h;
}

}  // namespace testutil
