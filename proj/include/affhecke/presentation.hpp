#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

struct Letter {
    Gen kind;
    int index;
    bool operator==(const Letter&) const = default;
};

// Word in the generators T_i, T_i^{-1}, X_j, X_j^{-1}; empty word = 1.
using GeneratorWord = std::vector<Letter>;

// Parses space-separated letters such as "T1 Tinv2 X3 Xinv1".
GeneratorWord parse_word(const std::string& text, int n);
std::string word_to_string(const GeneratorWord& word);

// Defining relation lhs = rhs with rhs a linear combination of words.
struct Relation {
    std::string name;
    std::string category;
    GeneratorWord lhs;
    std::vector<std::pair<Scalar, GeneratorWord>> rhs;
};

// The defining relations of the rank-n algebra with parameter p, in a fixed
// deterministic order: quadratic, T-invertibility, braid, distant T pairs,
// X-invertibility, X commutation, the product-of-X relation, the cross
// relation T_i X_i T_i = p X_{i+1}, and distant X-T pairs.
std::vector<Relation> relation_list(int n, const Scalar& p);

// Normal form of a generator word computed by naive single-letter rewriting,
// independent of the structural product. Expands T_i^{-1}, pushes X letters
// right past T letters one swap at a time, then contracts the T prefix.
HeckeElement oracle_normal_form(const Algebra& algebra, const GeneratorWord& word);

// Images of the generators under a candidate homomorphism into an ambient
// algebra. Inverse images may be given explicitly; otherwise T inverses are
// derived from the quadratic relation at the target parameter and X inverses
// are derived when the X image is a single invertible monomial.
struct GeneratorImages {
    std::vector<HeckeElement> t;     // size n
    std::vector<HeckeElement> x;     // size n+1
    std::vector<HeckeElement> tinv;  // size n, or empty to derive
    std::vector<HeckeElement> xinv;  // size n+1, or empty to derive
};

struct RelationReport {
    std::string name;
    std::string category;
    bool pass = false;
    std::optional<HeckeElement> residual;  // lhs - rhs when nonzero
};

struct RelationCheckReport {
    bool all_pass = false;
    std::vector<RelationReport> relations;
};

// Evaluates every relation of the rank-n presentation with parameter p on
// the given images inside the ambient algebra.
RelationCheckReport check_relations(const Algebra& ambient, const GeneratorImages& images,
                                    const Scalar& p);

// Identity images of the algebra's own generators.
GeneratorImages identity_images(const Algebra& algebra);

}  // namespace affhecke
