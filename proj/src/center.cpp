#include "affhecke/center.hpp"

#include "affhecke/errors.hpp"
#include "affhecke/parallel.hpp"

namespace affhecke {

HeckeElement central_S(int j, const Algebra& algebra) {
    LaurentPoly s = LaurentPoly::elementary_symmetric(j, algebra.n, algebra.field);
    HeckeElement h = HeckeElement::zero(algebra);
    h.add_row(Permutation::identity(algebra.n + 1), s);
    return h;
}

CentralityReport is_central(const HeckeElement& h) {
    const Algebra& algebra = h.algebra();
    std::vector<std::pair<std::string, HeckeElement>> gens;
    for (int i = 1; i <= algebra.n; ++i)
        gens.emplace_back(gen_name(Gen::T, i), HeckeElement::generator(algebra, Gen::T, i));
    for (int j = 1; j <= algebra.n + 1; ++j)
        gens.emplace_back(gen_name(Gen::X, j), HeckeElement::generator(algebra, Gen::X, j));

    CentralityReport report;
    report.checks.resize(gens.size());
    parallel_for(gens.size(), [&](std::size_t k) {
        const auto& [name, g] = gens[k];
        HeckeElement comm = h * g - g * h;
        CommutatorCheck& out = report.checks[k];
        out.generator = name;
        out.is_zero = comm.is_zero();
        if (!out.is_zero) out.commutator = comm;
    });
    report.central = true;
    for (const auto& c : report.checks) report.central = report.central && c.is_zero;
    return report;
}

std::vector<Scalar> central_character(const OneDimModule& m) {
    if (static_cast<int>(m.a.size()) != m.n + 1)
        raise(errc::invalid_module, "module has wrong number of X scalars");
    std::vector<Scalar> values;
    for (int j = 1; j <= m.n; ++j)
        values.push_back(
            LaurentPoly::elementary_symmetric(j, m.n, m.q.field()).evaluate(m.a));
    return values;
}

SymmetryReport symmetry_check(int n, const FieldDesc& field) {
    SymmetryReport report;
    report.n = n;
    report.all_hold = true;
    for (int i = 0; i <= n + 1; ++i) {
        LaurentPoly lhs = LaurentPoly::elementary_symmetric(i, n, field).invert_variables();
        LaurentPoly rhs = LaurentPoly::elementary_symmetric(n + 1 - i, n, field);
        bool holds = lhs == rhs;
        report.identities.push_back({i, holds});
        report.all_hold = report.all_hold && holds;
    }
    return report;
}

}  // namespace affhecke
