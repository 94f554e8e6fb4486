#pragma once

#include <numeric>
#include <string>
#include <vector>

namespace affhecke {

// Exponent vector of a Laurent monomial in X_1..X_{n+1}, length n+1.
// Canonical form: the last entry is 0, obtained by dividing out a power of
// the central product X_1*...*X_{n+1}.
using ExpVec = std::vector<long>;

inline ExpVec normalize_exponent(ExpVec v) {
    long last = v.empty() ? 0 : v.back();
    if (last != 0)
        for (auto& e : v) e -= last;
    return v;
}

inline ExpVec exp_unit(int j, int size) {
    ExpVec v(static_cast<std::size_t>(size), 0);
    v[static_cast<std::size_t>(j - 1)] = 1;
    return normalize_exponent(std::move(v));
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return normalize_exponent(std::move(r));
}

inline ExpVec exp_neg(const ExpVec& a) {
    ExpVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return normalize_exponent(std::move(r));
}

inline long exp_total_degree(const ExpVec& a) {
    return std::accumulate(a.begin(), a.end(), 0L);
}

// Map comparator placing the graded-lex largest exponent first: higher total
// degree first, ties broken lexicographically with larger entries first.
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = exp_total_degree(a);
        long db = exp_total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

inline std::string exp_to_string(const ExpVec& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    s += "]";
    return s;
}

}  // namespace affhecke
