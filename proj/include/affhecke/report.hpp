#pragma once

#include <optional>
#include <string>

#include "affhecke/center.hpp"
#include "affhecke/isotest.hpp"
#include "affhecke/onedim.hpp"
#include "affhecke/presentation.hpp"

namespace affhecke::report {

// Rendered operations backing the command line: each returns the full text
// or JSON document (trailing newline included) plus the flags the caller
// needs for exit codes. Output is deterministic byte for byte.

struct MulOutcome {
    std::string out;
};
MulOutcome mul(const Algebra& algebra, const std::string& lhs, const std::string& rhs, bool json);

MulOutcome nf(const Algebra& algebra, const std::string& word_text, bool json);

struct RelcheckOutcome {
    std::string out;
    bool all_pass = false;
};
RelcheckOutcome relcheck(const Algebra& algebra, const std::optional<GeneratorImages>& images,
                         const Scalar& p, bool json, bool note_typo);

struct CenterOutcome {
    std::string out;
    bool all_central = false;
};
CenterOutcome center(const Algebra& algebra, bool json);

struct SymcheckOutcome {
    std::string out;
    bool all_hold = false;
};
SymcheckOutcome symcheck(int n, const FieldDesc& field, bool json);

struct OnedimOutcome {
    std::string out;
};
// branch: "sign", "index" or "both".
OnedimOutcome onedim(int n, const Scalar& q, const std::string& branch, bool json);

struct IsoOutcome {
    std::string out;
    int verdict = 2;  // 0 isomorphic, 1 not isomorphic, 2 inconclusive
};
IsoOutcome iso(const Scalar& q, const Scalar& p, int n, bool json);

// Reads a generator-image file: one `name = element` assignment per line,
// names t1..tn, x1..x{n+1} (required) and tinv1..tinvn, xinv1..xinv{n+1}
// (optional, all-or-none per family); blank lines and lines starting with
// '#' are skipped.
GeneratorImages parse_images_text(const Algebra& algebra, const std::string& text);

}  // namespace affhecke::report
