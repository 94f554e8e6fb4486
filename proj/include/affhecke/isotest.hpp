#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affhecke/presentation.hpp"

namespace affhecke {

enum class MatchBranch { same, inverted };
enum class IsoDirection { same, inverse };
enum class IsoKind { isomorphic, not_isomorphic, inconclusive };

std::string match_branch_name(MatchBranch b);
std::string iso_direction_name(IsoDirection d);
std::string iso_kind_name(IsoKind k);

struct Alignment {
    Scalar shift;
    MatchBranch branch = MatchBranch::same;
};

// One failed alignment: the smallest element whose multiplicities in the
// two shifted progressions disagree.
struct AlignmentWitness {
    Scalar shift;
    MatchBranch branch = MatchBranch::same;
    Scalar element;
    std::size_t multiplicity_q = 0;
    std::size_t multiplicity_p = 0;
};

// Comparison of the geometric character data of the two algebras: the
// multiset {q^j : 0 <= j <= n} against {u p^j} and {u p^{-j}} for every
// shift u in {q^m : 0 <= m <= n} (a successful alignment must send p^0
// into the q progression, so these shifts are exhaustive).
struct MatchResult {
    int n = 0;
    std::vector<Scalar> q_progression;  // sorted multiset
    std::vector<Scalar> p_progression;  // sorted multiset {p^j}
    std::vector<Alignment> alignments;
    std::vector<AlignmentWitness> disagreements;  // one per failed (shift, branch)
    bool matched = false;
};

MatchResult geometric_character_match(const Scalar& q, const Scalar& p, int n);

struct IsoVerdict {
    IsoKind kind = IsoKind::inconclusive;
    std::optional<IsoDirection> direction;
    std::optional<GeneratorImages> witness;       // machine-verified
    Scalar witness_parameter;                     // presentation parameter of the witness
    std::optional<MatchResult> certificate;       // for not_isomorphic
    std::vector<Alignment> coincidences;          // for inconclusive
    std::vector<std::string> notes;
};

// Decision procedure: isomorphic iff p = q or p*q = 1, with a verified
// generator witness; otherwise a character-multiset certificate when the
// match fails, and an explicit inconclusive verdict when degenerate
// parameters make the character data agree anyway.
IsoVerdict decide_isomorphism(const Scalar& q, const Scalar& p, int n);

// Generator images of the rank-n algebra with parameter p inside the
// ambient algebra: the identity map for p = q, and
//   t_i -> -q^{-1} T_{n+1-i},  x_j -> X_{n+2-j}^{-1}
// for p = q^{-1}. The images are verified with check_relations before being
// returned; failure raises WitnessVerificationFailed.
GeneratorImages build_witness(IsoDirection direction, const Algebra& ambient, const Scalar& p);

// Character-multiset certificate; raises CertificateUnavailable when the
// match succeeds (in particular whenever p = q or p*q = 1).
MatchResult certificate_of_nonisomorphism(const Scalar& q, const Scalar& p, int n);

}  // namespace affhecke
