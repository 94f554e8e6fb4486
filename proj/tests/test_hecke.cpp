#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "affhecke/element_io.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/presentation.hpp"
#include "helpers.hpp"

using namespace affhecke;
using testutil::rand_element;
using testutil::rand_int;
using testutil::rand_word;
using testutil::word_element;

namespace {

const FieldDesc Q = FieldDesc::rationals();
const FieldDesc Qq = FieldDesc::rational_functions();

Algebra symbolic(int n) { return Algebra(n, Qq, Scalar::indeterminate()); }
Algebra rational(int n, long q) { return Algebra(n, Q, Scalar::from_int(q, Q)); }

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return errc::ok;
}

}  // namespace

TEST_CASE("generators") {
    Algebra a = symbolic(2);
    HeckeElement x3 = HeckeElement::generator(a, Gen::X, 3);
    CHECK(x3 == HeckeElement::term(a, Permutation::identity(3), {-1, -1, 0},
                                   Scalar::one(Qq)));

    HeckeElement t1 = HeckeElement::generator(a, Gen::T, 1);
    HeckeElement tinv1 = HeckeElement::generator(a, Gen::Tinv, 1);
    CHECK(t1 * tinv1 == HeckeElement::one(a));
    CHECK(tinv1 * t1 == HeckeElement::one(a));

    // Solve (x*T_1 + y)*T_1 = 1 with T_1^2 = (q-1)T_1 + q: collecting the
    // basis coefficients gives x(q-1) + y = 0 and x*q = 1.
    Scalar q = a.q;
    Scalar x = q.inverse();
    Scalar y = -(x * (q - Scalar::one(Qq)));
    CHECK(tinv1 == HeckeElement::generator(a, Gen::T, 1).scale(x) +
                       HeckeElement::one(a).scale(y));

    CHECK(code_of([&] { HeckeElement::generator(a, Gen::T, 3); }) == errc::index_out_of_range);
    CHECK(code_of([&] { Algebra(2, Q, Scalar::zero(Q)); }) == errc::zero_parameter);
}

TEST_CASE("quadratic relation via the structural product") {
    Algebra a = symbolic(2);
    HeckeElement t1 = HeckeElement::generator(a, Gen::T, 1);
    Scalar q = a.q;
    HeckeElement expected =
        t1.scale(q - Scalar::one(Qq)) + HeckeElement::one(a).scale(q);
    CHECK(t1 * t1 == expected);
}

TEST_CASE("braid products contract to a single basis term") {
    Algebra a = symbolic(2);
    HeckeElement t1 = HeckeElement::generator(a, Gen::T, 1);
    HeckeElement t2 = HeckeElement::generator(a, Gen::T, 2);
    HeckeElement w0 = t1 * t2 * t1;
    CHECK(w0.term_count() == 1);
    CHECK(w0 == HeckeElement::term(a, Permutation::from_one_line({3, 2, 1}), {0, 0, 0},
                                   Scalar::one(Qq)));
    CHECK(t1 * t2 * t1 == t2 * t1 * t2);
}

TEST_CASE("X_1 T_1 agrees with the oracle and the hand expansion") {
    Algebra a = symbolic(2);
    HeckeElement x1 = HeckeElement::generator(a, Gen::X, 1);
    HeckeElement t1 = HeckeElement::generator(a, Gen::T, 1);
    HeckeElement product = x1 * t1;

    HeckeElement oracle = oracle_normal_form(a, {{Gen::X, 1}, {Gen::T, 1}});
    CHECK(product == oracle);

    Scalar one = Scalar::one(Qq);
    HeckeElement expected =
        HeckeElement::term(a, Permutation::simple_reflection(1, 3), {0, 1, 0}, one) +
        HeckeElement::term(a, Permutation::identity(3), {0, 1, 0}, one - a.q);
    CHECK(product == expected);
}

TEST_CASE("commute_x_past_t") {
    Algebra a = symbolic(2);
    Scalar one = Scalar::one(Qq);

    CHECK(commute_x_past_t(a, {1, 0, 0}, 1) ==
          HeckeElement::term(a, Permutation::simple_reflection(1, 3), {0, 1, 0}, one) +
              HeckeElement::term(a, Permutation::identity(3), {0, 1, 0}, one - a.q));
    CHECK(commute_x_past_t(a, {0, 0, 0}, 1) == HeckeElement::generator(a, Gen::T, 1));
    CHECK(commute_x_past_t(a, {1, 1, 0}, 1) ==
          HeckeElement::term(a, Permutation::simple_reflection(1, 3), {1, 1, 0}, one));

    // Exhaustive sweep against the single-letter rewriting oracle.
    for (int i = 1; i <= 2; ++i)
        for (long e1 = -2; e1 <= 2; ++e1)
            for (long e2 = -2; e2 <= 2; ++e2)
                for (long e3 = -2; e3 <= 2; ++e3) {
                    ExpVec lambda = normalize_exponent({e1, e2, e3});
                    GeneratorWord word;
                    for (int j = 1; j <= 3; ++j) {
                        long e = lambda[static_cast<std::size_t>(j - 1)];
                        for (long k = 0; k < e; ++k) word.push_back({Gen::X, j});
                        for (long k = 0; k < -e; ++k) word.push_back({Gen::Xinv, j});
                    }
                    word.push_back({Gen::T, i});
                    CAPTURE(i);
                    CAPTURE(exp_to_string(lambda));
                    CHECK(commute_x_past_t(a, lambda, i) == oracle_normal_form(a, word));
                }
}

TEST_CASE("oracle pinned words") {
    Algebra a = symbolic(2);
    CHECK(oracle_normal_form(a, {{Gen::T, 1}, {Gen::Tinv, 1}}) == HeckeElement::one(a));
    CHECK(oracle_normal_form(a, {{Gen::X, 1}, {Gen::X, 2}, {Gen::X, 3}}) ==
          HeckeElement::one(a));
    CHECK(oracle_normal_form(a, parse_word("T1 T1", 2)) ==
          HeckeElement::generator(a, Gen::T, 1).scale(a.q - Scalar::one(Qq)) +
              HeckeElement::one(a).scale(a.q));
}

TEST_CASE("the six T_w for n=2 stay distinct basis terms") {
    Algebra a = symbolic(2);
    std::set<std::string> seen;
    std::vector<int> one_line = {1, 2, 3};
    do {
        Permutation w = Permutation::from_one_line(one_line);
        GeneratorWord word;
        for (int i : w.reduced_word()) word.push_back({Gen::T, i});
        HeckeElement h = oracle_normal_form(a, word);
        CHECK(h.term_count() == 1);
        CHECK(h == HeckeElement::term(a, w, {0, 0, 0}, Scalar::one(Qq)));
        seen.insert(element_to_string(h));
    } while (std::next_permutation(one_line.begin(), one_line.end()));
    CHECK(seen.size() == 6);
}

TEST_CASE("structural product agrees with the oracle on random words") {
    struct Config {
        Algebra algebra;
        int cases;
    };
    std::vector<Config> configs = {{rational(2, 2), 150},
                                   {rational(3, 2), 150},
                                   {symbolic(2), 60},
                                   {symbolic(3), 40}};
    for (const Config& cfg : configs) {
        for (int trial = 0; trial < cfg.cases; ++trial) {
            GeneratorWord word = rand_word(cfg.algebra.n, 6);
            std::size_t split = static_cast<std::size_t>(rand_int(0, static_cast<long>(word.size())));
            GeneratorWord left(word.begin(), word.begin() + static_cast<long>(split));
            GeneratorWord right(word.begin() + static_cast<long>(split), word.end());
            HeckeElement via_mul =
                oracle_normal_form(cfg.algebra, left) * oracle_normal_form(cfg.algebra, right);
            CAPTURE(word_to_string(word));
            CAPTURE(split);
            CHECK(via_mul == oracle_normal_form(cfg.algebra, word));
        }
    }
}

TEST_CASE("associativity on random sparse elements") {
    for (int trial = 0; trial < 200; ++trial) {
        Algebra a = rational(trial % 2 == 0 ? 2 : 3, 2);
        HeckeElement h1 = rand_element(a, 4, -1, 1);
        HeckeElement h2 = rand_element(a, 4, -1, 1);
        HeckeElement h3 = rand_element(a, 4, -1, 1);
        CHECK((h1 * h2) * h3 == h1 * (h2 * h3));
    }
    for (int trial = 0; trial < 10; ++trial) {
        Algebra a = symbolic(2);
        HeckeElement h1 = rand_element(a, 2, -1, 1);
        HeckeElement h2 = rand_element(a, 2, -1, 1);
        HeckeElement h3 = rand_element(a, 2, -1, 1);
        CHECK((h1 * h2) * h3 == h1 * (h2 * h3));
    }
}

TEST_CASE("element text round-trips") {
    Algebra a = symbolic(2);
    HeckeElement h =
        HeckeElement::term(a, Permutation::simple_reflection(1, 3), {0, 1, 0},
                           a.q - Scalar::one(Qq)) +
        HeckeElement::term(a, Permutation::identity(3), {1, -1, 0}, a.q);
    CHECK(element_to_string(h) == "(q-1)*T[1]*X^[0,1,0] + q*X^[1,-1,0]");
    CHECK(parse_element(a, element_to_string(h)) == h);

    CHECK(element_to_string(HeckeElement::zero(a)) == "0");
    CHECK(parse_element(a, "0") == HeckeElement::zero(a));
    CHECK(parse_element(a, "1") == HeckeElement::one(a));
    CHECK(parse_element(a, "T[1,2]") ==
          HeckeElement::term(a, Permutation::from_word({1, 2}, 3), {0, 0, 0}, Scalar::one(Qq)));

    for (const char* name : {"Q", "Fp:7", "Qq"}) {
        FieldDesc field = FieldDesc::parse(name);
        for (int trial = 0; trial < 150; ++trial) {
            int n = static_cast<int>(rand_int(1, 3));
            Algebra b(n, field, Scalar::from_int(2, field));
            HeckeElement h2 = rand_element(b);
            CAPTURE(element_to_string(h2));
            CHECK(parse_element(b, element_to_string(h2)) == h2);
        }
    }

    CHECK(code_of([&] { parse_element(a, "T[1,1]"); }) == errc::parse_error);
    CHECK(code_of([&] { parse_element(a, "X^[1,0]"); }) == errc::length_mismatch);
    CHECK(code_of([&] { parse_element(a, "q*"); }) == errc::malformed_scalar);
}

TEST_CASE("relation_list shape") {
    Algebra a2 = symbolic(2);
    std::vector<Relation> rels2 = relation_list(2, a2.q);
    auto count = [&](const std::vector<Relation>& rels, const std::string& cat) {
        int c = 0;
        for (const Relation& r : rels)
            if (r.category == cat) ++c;
        return c;
    };
    CHECK(count(rels2, "quadratic") == 2);
    CHECK(count(rels2, "braid") == 1);
    CHECK(count(rels2, "t_commuting") == 0);
    CHECK(count(rels2, "x_commuting") == 3);
    CHECK(count(rels2, "product_of_x") == 1);
    CHECK(count(rels2, "cross") == 2);
    CHECK(count(rels2, "xt_commuting") == 2);
    CHECK(count(rels2, "t_invertibility") == 4);
    CHECK(count(rels2, "x_invertibility") == 6);
    CHECK(rels2.size() == 21);

    std::vector<Relation> rels3 = relation_list(3, Scalar::indeterminate());
    bool found_t13 = false;
    for (const Relation& r : rels3)
        if (r.name == "tcomm[1,3]") {
            found_t13 = true;
            CHECK(r.lhs == parse_word("T1 T3", 3));
            CHECK(r.rhs.size() == 1);
            CHECK(r.rhs[0].second == parse_word("T3 T1", 3));
        }
    CHECK(found_t13);
}

TEST_CASE("check_relations") {
    for (int n = 2; n <= 3; ++n) {
        Algebra a = symbolic(n);
        RelationCheckReport report = check_relations(a, identity_images(a), a.q);
        CHECK(report.all_pass);
        CHECK(report.relations.size() == relation_list(n, a.q).size());
    }

    // Identity images of H_2 checked against the p=3 presentation: the
    // quadratic relations must fail with residual (T_i+1)(T_i-3).
    Algebra h2 = rational(2, 2);
    Scalar p = Scalar::from_int(3, Q);
    RelationCheckReport bad = check_relations(h2, identity_images(h2), p);
    CHECK_FALSE(bad.all_pass);
    HeckeElement t1 = HeckeElement::generator(h2, Gen::T, 1);
    HeckeElement one = HeckeElement::one(h2);
    HeckeElement expected_residual = (t1 + one) * (t1 - one.scale(p));
    bool saw_quad = false;
    for (const RelationReport& r : bad.relations) {
        if (r.name == "quad[1]") {
            saw_quad = true;
            CHECK_FALSE(r.pass);
            REQUIRE(r.residual.has_value());
            CHECK(*r.residual == expected_residual);
        }
        if (r.category == "braid" || r.category == "x_commuting") CHECK(r.pass);
    }
    CHECK(saw_quad);
}

TEST_CASE("incompatible operands are rejected") {
    Algebra a = rational(2, 2);
    Algebra b = rational(2, 3);
    Algebra c = rational(3, 2);
    HeckeElement ha = HeckeElement::one(a);
    CHECK(code_of([&] { ha* HeckeElement::one(b); }) == errc::parameter_mismatch);
    CHECK(code_of([&] { ha + HeckeElement::one(c); }) == errc::length_mismatch);
    CHECK(code_of([&] {
        HeckeElement::one(a) + HeckeElement::one(Algebra(2, Qq, Scalar::indeterminate()));
    }) == errc::field_mismatch);
}
