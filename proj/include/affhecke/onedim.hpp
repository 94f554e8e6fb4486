#pragma once

#include <string>
#include <vector>

#include "affhecke/presentation.hpp"
#include "affhecke/scalar.hpp"

namespace affhecke {

// The two solutions of the scalar quadratic e^2 = (q-1)e + q.
enum class EpsilonBranch { sign, index };  // epsilon = -1, epsilon = q

std::string branch_name(EpsilonBranch b);

// One-dimensional module: every T_i acts by epsilon, X_j acts by a_j.
struct OneDimModule {
    int n = 0;
    Scalar q;
    Scalar epsilon;
    std::vector<Scalar> a;  // size n+1
};

struct ScalarRelationReport {
    std::string name;
    std::string category;
    bool pass = false;
    Scalar residual;
};

struct ScalarCheckReport {
    bool all_pass = false;
    std::vector<ScalarRelationReport> relations;
};

// Evaluates every defining relation on scalar images t_i -> ts[i-1],
// x_j -> xs[j-1]. Inverses act by the inverse scalars.
ScalarCheckReport check_scalar_assignment(int n, const Scalar& q, const std::vector<Scalar>& ts,
                                          const std::vector<Scalar>& xs);

// Relation check for a one-dimensional module (all T scalars equal).
ScalarCheckReport check_module(const OneDimModule& m);

// Classification of one-dimensional modules on one epsilon branch. The X
// scalars form the geometric progression a_i = q^{n+1-i} z (sign branch,
// epsilon = -1) or a_i = q^{i-1} z (index branch, epsilon = q), anchored by
// z^{n+1} = q^{-n(n+1)/2}. `modules` holds every solution in the field;
// `parametric` marks a rational-function anchor equation that has no
// monomial solution, in which case the family is described by
// (anchor_power, anchor_rhs) instead.
struct Classification {
    EpsilonBranch branch = EpsilonBranch::sign;
    Scalar epsilon;
    long anchor_power = 0;   // n+1
    Scalar anchor_rhs;       // q^{-n(n+1)/2}
    bool parametric = false;
    std::vector<OneDimModule> modules;
    bool branches_coincide = false;  // q = -1 makes both branches agree
};

Classification classify_onedim(int n, const Scalar& q, EpsilonBranch branch);

}  // namespace affhecke
