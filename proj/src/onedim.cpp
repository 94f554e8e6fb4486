#include "affhecke/onedim.hpp"

#include <algorithm>

#include "affhecke/errors.hpp"

namespace affhecke {

std::string branch_name(EpsilonBranch b) {
    return b == EpsilonBranch::sign ? "sign" : "index";
}

namespace {

Scalar eval_word_scalar(const GeneratorWord& word, const std::vector<Scalar>& ts,
                        const std::vector<Scalar>& xs, const FieldDesc& field) {
    Scalar acc = Scalar::one(field);
    for (const auto& letter : word) {
        std::size_t k = static_cast<std::size_t>(letter.index - 1);
        switch (letter.kind) {
            case Gen::T: acc = acc * ts[k]; break;
            case Gen::Tinv: acc = acc * ts[k].inverse(); break;
            case Gen::X: acc = acc * xs[k]; break;
            case Gen::Xinv: acc = acc * xs[k].inverse(); break;
        }
    }
    return acc;
}

// Rational m-th roots of a nonzero rational, exact only.
std::vector<Scalar> rational_roots(const mpq_class& r, long m) {
    std::vector<Scalar> roots;
    bool negative = r < 0;
    if (negative && m % 2 == 0) return roots;
    mpz_class num = abs(r.get_num());
    mpz_class den = r.get_den();
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m));
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m));
    if (!exact_n || !exact_d) return roots;
    mpq_class root(rn, rd);
    root.canonicalize();
    if (m % 2 == 1) {
        roots.push_back(Scalar::rational(negative ? -root : root));
    } else {
        roots.push_back(Scalar::rational(-root));
        roots.push_back(Scalar::rational(root));
    }
    return roots;
}

std::vector<Scalar> prime_field_roots(const Scalar& rhs, long m) {
    std::vector<Scalar> roots;
    std::uint64_t p = rhs.field().modulus;
    for (std::uint64_t u = 1; u < p; ++u) {
        Scalar z = Scalar::residue(mpz_class(static_cast<unsigned long>(u)), p);
        if (z.pow(m) == rhs) roots.push_back(z);
    }
    return roots;
}

// Monomial ansatz over Q(q). When the right side is a monomial c*q^k, any
// solution z of z^m = c*q^k must itself be a monomial (compare prime
// factorizations in Q[q]), so the ansatz is exhaustive: solutions exist in
// the field exactly when m | k and c has a rational m-th root.
std::vector<Scalar> ratfun_roots(const Scalar& rhs, long m) {
    std::vector<Scalar> roots;
    const RatFun& f = rhs.ratfun_value();
    if (!f.num.is_monomial() || !f.den.is_monomial()) return roots;
    long k = f.num.degree() - f.den.degree();
    mpq_class c(f.num.leading(), f.den.leading());
    c.canonicalize();
    if (k % m != 0) return roots;
    std::vector<Scalar> cs = rational_roots(c, m);
    Scalar qpow = Scalar::indeterminate().pow(k / m);
    for (const auto& cz : cs) {
        const mpq_class& v = cz.rational_value();
        roots.push_back(Scalar::rational_function(ZPoly(mpq_class(v).get_num()),
                                                  ZPoly(mpq_class(v).get_den())) *
                        qpow);
    }
    return roots;
}

}  // namespace

ScalarCheckReport check_scalar_assignment(int n, const Scalar& q, const std::vector<Scalar>& ts,
                                          const std::vector<Scalar>& xs) {
    if (static_cast<int>(ts.size()) != n || static_cast<int>(xs.size()) != n + 1)
        raise(errc::invalid_module, "expected " + std::to_string(n) + " T scalars and " +
                                        std::to_string(n + 1) + " X scalars");
    const FieldDesc& field = q.field();
    for (const auto& s : ts) {
        if (!(s.field() == field)) raise(errc::field_mismatch, "T scalar field mismatch");
        if (s.is_zero()) raise(errc::invalid_module, "T scalars must be invertible");
    }
    for (const auto& s : xs) {
        if (!(s.field() == field)) raise(errc::field_mismatch, "X scalar field mismatch");
        if (s.is_zero()) raise(errc::invalid_module, "X scalars must be invertible");
    }
    ScalarCheckReport report;
    report.all_pass = true;
    for (const auto& rel : relation_list(n, q)) {
        Scalar lhs = eval_word_scalar(rel.lhs, ts, xs, field);
        Scalar rhs = Scalar::zero(field);
        for (const auto& [c, word] : rel.rhs) rhs = rhs + c * eval_word_scalar(word, ts, xs, field);
        Scalar residual = lhs - rhs;
        bool pass = residual.is_zero();
        report.relations.push_back({rel.name, rel.category, pass, residual});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

ScalarCheckReport check_module(const OneDimModule& m) {
    if (m.n < 1) raise(errc::invalid_module, "module rank must be at least 1");
    if (m.epsilon.is_zero()) raise(errc::invalid_module, "epsilon must be invertible");
    std::vector<Scalar> ts(static_cast<std::size_t>(m.n), m.epsilon);
    return check_scalar_assignment(m.n, m.q, ts, m.a);
}

Classification classify_onedim(int n, const Scalar& q, EpsilonBranch branch) {
    if (n < 1) raise(errc::index_out_of_range, "rank must be at least 1");
    if (q.is_zero()) raise(errc::zero_parameter, "parameter q must be invertible");
    const FieldDesc& field = q.field();
    long m = n + 1;
    long half_sum = static_cast<long>(n) * (n + 1) / 2;

    Classification cls;
    cls.branch = branch;
    cls.epsilon = branch == EpsilonBranch::sign ? -Scalar::one(field) : q;
    cls.anchor_power = m;
    cls.anchor_rhs = q.pow(-half_sum);
    cls.branches_coincide = q == -Scalar::one(field);

    std::vector<Scalar> anchors;
    switch (field.kind) {
        case FieldKind::rationals:
            anchors = rational_roots(cls.anchor_rhs.rational_value(), m);
            break;
        case FieldKind::prime_field:
            anchors = prime_field_roots(cls.anchor_rhs, m);
            break;
        case FieldKind::rational_functions:
            anchors = ratfun_roots(cls.anchor_rhs, m);
            // With no solution in Q(q) itself the family still exists over
            // extensions; report it through the anchor equation.
            cls.parametric = anchors.empty();
            break;
    }
    std::sort(anchors.begin(), anchors.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });

    for (const auto& z : anchors) {
        OneDimModule mod;
        mod.n = n;
        mod.q = q;
        mod.epsilon = cls.epsilon;
        for (int i = 1; i <= n + 1; ++i) {
            long e = branch == EpsilonBranch::sign ? (n + 1 - i) : (i - 1);
            mod.a.push_back(q.pow(e) * z);
        }
        ScalarCheckReport sanity = check_module(mod);
        if (!sanity.all_pass)
            raise(errc::internal, "classified module fails its own relation check");
        cls.modules.push_back(std::move(mod));
    }
    return cls;
}

}  // namespace affhecke
