#include "affhecke/permutation.hpp"

#include <algorithm>

#include "affhecke/errors.hpp"

namespace affhecke {

Permutation::Permutation(int m) {
    if (m < 1) raise(errc::index_out_of_range, "permutation size must be positive");
    images_.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) images_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation Permutation::identity(int m) { return Permutation(m); }

Permutation Permutation::simple_reflection(int i, int m) {
    if (i < 1 || i >= m)
        raise(errc::index_out_of_range,
              "reflection index " + std::to_string(i) + " outside 1.." + std::to_string(m - 1));
    Permutation w(m);
    std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
    return w;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    int m = static_cast<int>(images.size());
    if (m < 1) raise(errc::index_out_of_range, "empty one-line notation");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : images) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
            raise(errc::parse_error, "invalid one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Permutation w(m);
    w.images_ = std::move(images);
    return w;
}

Permutation Permutation::from_word(const std::vector<int>& word, int m) {
    Permutation w(m);
    for (int i : word) w = w.compose(simple_reflection(i, m));
    return w;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) raise(errc::length_mismatch, "permutation size mismatch");
    Permutation r(size());
    for (int i = 1; i <= size(); ++i)
        r.images_[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(size());
    for (int i = 1; i <= size(); ++i) r.images_[static_cast<std::size_t>((*this)(i)-1)] = i;
    return r;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::vector<int> Permutation::reduced_word() const {
    // Greedy smallest left descent: s_i * w shortens w exactly when i+1
    // appears before i in the one-line notation of w.
    std::vector<int> word;
    Permutation w = *this;
    std::vector<int> pos(static_cast<std::size_t>(size()) + 1, 0);
    while (!w.is_identity()) {
        for (int i = 1; i <= size(); ++i) pos[static_cast<std::size_t>(w(i))] = i;
        int best = 0;
        for (int i = 1; i < size(); ++i) {
            if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) {
                best = i;
                break;
            }
        }
        if (best == 0) raise(errc::internal, "descent search failed");
        word.push_back(best);
        // Peeling the leftmost factor: w = s_best * w' collects letters in
        // left-to-right order, and left multiplication by s_best swaps the
        // values best and best+1 in one-line notation.
        for (auto& v : w.images_) {
            if (v == best)
                v = best + 1;
            else if (v == best + 1)
                v = best;
        }
    }
    return word;
}

ExpVec Permutation::act(const ExpVec& lambda) const {
    if (static_cast<int>(lambda.size()) != size())
        raise(errc::length_mismatch, "exponent vector length does not match rank");
    ExpVec r(lambda.size(), 0);
    for (int i = 1; i <= size(); ++i)
        r[static_cast<std::size_t>((*this)(i)-1)] = lambda[static_cast<std::size_t>(i - 1)];
    return normalize_exponent(std::move(r));
}

std::string Permutation::to_string() const {
    std::string s = "(";
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string((*this)(i));
    }
    return s + ")";
}

}  // namespace affhecke
