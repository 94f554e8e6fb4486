#pragma once

#include <string>
#include <vector>

#include "affhecke/exponents.hpp"

namespace affhecke {

// Permutation of {1..m} in one-line notation, acting as the finite Weyl
// group on exponent vectors of length m = n+1.
class Permutation {
public:
    explicit Permutation(int m = 1);
    static Permutation identity(int m);
    // s_i swaps i and i+1; requires 1 <= i <= m-1.
    static Permutation simple_reflection(int i, int m);
    static Permutation from_one_line(std::vector<int> images);
    // Product of simple reflections s_{w[0]} * s_{w[1]} * ... in S_m.
    static Permutation from_word(const std::vector<int>& word, int m);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return images_; }

    Permutation compose(const Permutation& other) const;  // (this∘other)(i) = this(other(i))
    Permutation inverse() const;
    int length() const;  // inversion count
    bool is_identity() const;
    bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

    // Lexicographically smallest reduced word.
    std::vector<int> reduced_word() const;

    // w acting on a monomial exponent: the entry at position i moves to
    // position w(i); the result is renormalized.
    ExpVec act(const ExpVec& lambda) const;

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }

    std::string to_string() const;  // one-line, e.g. "(2,1,3)"

private:
    std::vector<int> images_;
};

// Deterministic container order: longer elements first, then one-line
// lexicographic. Matches the printed order of basis terms.
struct PermOrder {
    bool operator()(const Permutation& a, const Permutation& b) const {
        int la = a.length();
        int lb = b.length();
        if (la != lb) return la > lb;
        return a.one_line() < b.one_line();
    }
};

}  // namespace affhecke
