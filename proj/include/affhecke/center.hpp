#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/onedim.hpp"

namespace affhecke {

// S_j: the j-th elementary symmetric function of X_1..X_{n+1} viewed as an
// element of the algebra; central for 0 <= j <= n+1.
HeckeElement central_S(int j, const Algebra& algebra);

struct CommutatorCheck {
    std::string generator;
    bool is_zero = false;
    std::optional<HeckeElement> commutator;  // h*g - g*h when nonzero
};

struct CentralityReport {
    bool central = false;
    std::vector<CommutatorCheck> checks;  // T_1..T_n then X_1..X_{n+1}
};

// Commutes h against every generator.
CentralityReport is_central(const HeckeElement& h);

// Values of the central characters S_1..S_n on a one-dimensional module:
// the j-th elementary symmetric function evaluated at the X scalars.
std::vector<Scalar> central_character(const OneDimModule& m);

struct SymmetryIdentity {
    int i = 0;
    bool holds = false;
};

struct SymmetryReport {
    int n = 0;
    bool all_hold = false;
    std::vector<SymmetryIdentity> identities;
};

// Checks S_i(X^{-1}) = S_{n+1-i}(X) in the Laurent quotient for
// i = 0..n+1. (The index pairing i <-> n+1-i is forced by the relation
// X_1*...*X_{n+1} = 1; complementing a subset of size i leaves n+1-i
// variables.)
SymmetryReport symmetry_check(int n, const FieldDesc& field);

}  // namespace affhecke
