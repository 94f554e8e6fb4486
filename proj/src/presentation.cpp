#include "affhecke/presentation.hpp"

#include <deque>

#include "affhecke/detail/lex.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/parallel.hpp"

namespace affhecke {

GeneratorWord parse_word(const std::string& text, int n) {
    detail::Lexer lex(text);
    GeneratorWord word;
    while (!lex.at_end()) {
        detail::Token name = lex.expect(detail::Tok::ident, "generator name");
        Gen kind;
        if (name.text == "T")
            kind = Gen::T;
        else if (name.text == "Tinv")
            kind = Gen::Tinv;
        else if (name.text == "X")
            kind = Gen::X;
        else if (name.text == "Xinv")
            kind = Gen::Xinv;
        else
            raise(errc::parse_error, "unknown generator \"" + name.text + "\"");
        detail::Token num = lex.expect(detail::Tok::integer, "generator index");
        int index = std::stoi(num.text);
        int limit = (kind == Gen::T || kind == Gen::Tinv) ? n : n + 1;
        if (index < 1 || index > limit)
            raise(errc::index_out_of_range,
                  "generator index " + num.text + " outside 1.." + std::to_string(limit));
        word.push_back({kind, index});
    }
    return word;
}

std::string word_to_string(const GeneratorWord& word) {
    std::string s;
    for (const auto& letter : word) {
        if (!s.empty()) s += " ";
        s += gen_name(letter.kind, letter.index);
    }
    return s;
}

std::vector<Relation> relation_list(int n, const Scalar& p) {
    if (n < 1) raise(errc::index_out_of_range, "rank must be at least 1");
    if (p.is_zero()) raise(errc::zero_parameter, "parameter must be invertible");
    const FieldDesc& field = p.field();
    Scalar one = Scalar::one(field);
    std::vector<Relation> rels;
    auto sub = [](int a, int b) {
        return "[" + std::to_string(a) + (b ? "," + std::to_string(b) : "") + "]";
    };

    // T_i^2 = (p-1) T_i + p.
    for (int i = 1; i <= n; ++i)
        rels.push_back({"quad" + sub(i, 0), "quadratic",
                        {{Gen::T, i}, {Gen::T, i}},
                        {{p - one, {{Gen::T, i}}}, {p, {}}}});
    for (int i = 1; i <= n; ++i)
        rels.push_back({"tinv_left" + sub(i, 0), "t_invertibility",
                        {{Gen::Tinv, i}, {Gen::T, i}},
                        {{one, {}}}});
    for (int i = 1; i <= n; ++i)
        rels.push_back({"tinv_right" + sub(i, 0), "t_invertibility",
                        {{Gen::T, i}, {Gen::Tinv, i}},
                        {{one, {}}}});
    for (int i = 1; i + 1 <= n; ++i)
        rels.push_back({"braid" + sub(i, 0), "braid",
                        {{Gen::T, i}, {Gen::T, i + 1}, {Gen::T, i}},
                        {{one, {{Gen::T, i + 1}, {Gen::T, i}, {Gen::T, i + 1}}}}});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            rels.push_back({"tcomm" + sub(i, j), "t_commuting",
                            {{Gen::T, i}, {Gen::T, j}},
                            {{one, {{Gen::T, j}, {Gen::T, i}}}}});
    for (int j = 1; j <= n + 1; ++j)
        rels.push_back({"xinv_left" + sub(j, 0), "x_invertibility",
                        {{Gen::Xinv, j}, {Gen::X, j}},
                        {{one, {}}}});
    for (int j = 1; j <= n + 1; ++j)
        rels.push_back({"xinv_right" + sub(j, 0), "x_invertibility",
                        {{Gen::X, j}, {Gen::Xinv, j}},
                        {{one, {}}}});
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
            rels.push_back({"xcomm" + sub(i, j), "x_commuting",
                            {{Gen::X, i}, {Gen::X, j}},
                            {{one, {{Gen::X, j}, {Gen::X, i}}}}});
    {
        GeneratorWord all;
        for (int j = 1; j <= n + 1; ++j) all.push_back({Gen::X, j});
        rels.push_back({"xprod", "product_of_x", all, {{one, {}}}});
    }
    // T_i X_i T_i = p X_{i+1}.
    for (int i = 1; i <= n; ++i)
        rels.push_back({"cross" + sub(i, 0), "cross",
                        {{Gen::T, i}, {Gen::X, i}, {Gen::T, i}},
                        {{p, {{Gen::X, i + 1}}}}});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (j == i || j == i + 1) continue;
            rels.push_back({"xtcomm" + sub(j, i), "xt_commuting",
                            {{Gen::X, j}, {Gen::T, i}},
                            {{one, {{Gen::T, i}, {Gen::X, j}}}}});
        }
    return rels;
}

namespace {

struct OracleItem {
    Scalar coeff;
    GeneratorWord word;
};

// Position of the leftmost X-type letter immediately followed by T, or -1.
int rewrite_position(const GeneratorWord& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        bool xish = w[k].kind == Gen::X || w[k].kind == Gen::Xinv;
        if (xish && w[k + 1].kind == Gen::T) return static_cast<int>(k);
    }
    return -1;
}

GeneratorWord splice(const GeneratorWord& w, std::size_t at, std::initializer_list<Letter> repl) {
    GeneratorWord out(w.begin(), w.begin() + static_cast<long>(at));
    out.insert(out.end(), repl);
    out.insert(out.end(), w.begin() + static_cast<long>(at) + 2, w.end());
    return out;
}

}  // namespace

HeckeElement oracle_normal_form(const Algebra& algebra, const GeneratorWord& word) {
    const Scalar one = Scalar::one(algebra.field);
    const Scalar qm1 = algebra.q - one;
    const Scalar qinv = algebra.q.inverse();

    for (const auto& letter : word) {
        int limit = (letter.kind == Gen::T || letter.kind == Gen::Tinv) ? algebra.n : algebra.n + 1;
        if (letter.index < 1 || letter.index > limit)
            raise(errc::index_out_of_range, "generator index in word");
    }

    std::deque<OracleItem> work;
    work.push_back({one, word});
    HeckeElement result = HeckeElement::zero(algebra);

    while (!work.empty()) {
        OracleItem item = std::move(work.front());
        work.pop_front();

        // Expand the leftmost T inverse: Tinv_i = q^{-1} T_i + (q^{-1} - 1).
        std::size_t tinv_at = item.word.size();
        for (std::size_t k = 0; k < item.word.size(); ++k) {
            if (item.word[k].kind == Gen::Tinv) {
                tinv_at = k;
                break;
            }
        }
        if (tinv_at < item.word.size()) {
            int i = item.word[tinv_at].index;
            GeneratorWord with_t = item.word;
            with_t[tinv_at] = {Gen::T, i};
            GeneratorWord without = item.word;
            without.erase(without.begin() + static_cast<long>(tinv_at));
            work.push_back({item.coeff * qinv, std::move(with_t)});
            work.push_back({item.coeff * (qinv - one), std::move(without)});
            continue;
        }

        int at = rewrite_position(item.word);
        if (at >= 0) {
            std::size_t k = static_cast<std::size_t>(at);
            Letter xl = item.word[k];
            int i = item.word[k + 1].index;
            int j = xl.index;
            if (j != i && j != i + 1) {
                // Distant letters commute.
                GeneratorWord swapped = item.word;
                std::swap(swapped[k], swapped[k + 1]);
                work.push_back({item.coeff, std::move(swapped)});
            } else if (xl.kind == Gen::X && j == i) {
                // X_i T_i = T_i X_{i+1} - (q-1) X_{i+1}
                work.push_back({item.coeff, splice(item.word, k, {{Gen::T, i}, {Gen::X, i + 1}})});
                work.push_back({item.coeff * (-qm1), splice(item.word, k, {{Gen::X, i + 1}})});
            } else if (xl.kind == Gen::X && j == i + 1) {
                // X_{i+1} T_i = T_i X_i + (q-1) X_{i+1}
                work.push_back({item.coeff, splice(item.word, k, {{Gen::T, i}, {Gen::X, i}})});
                work.push_back({item.coeff * qm1, splice(item.word, k, {{Gen::X, i + 1}})});
            } else if (xl.kind == Gen::Xinv && j == i) {
                // X_i^{-1} T_i = T_i X_{i+1}^{-1} + (q-1) X_i^{-1}
                work.push_back(
                    {item.coeff, splice(item.word, k, {{Gen::T, i}, {Gen::Xinv, i + 1}})});
                work.push_back({item.coeff * qm1, splice(item.word, k, {{Gen::Xinv, i}})});
            } else {
                // X_{i+1}^{-1} T_i = T_i X_i^{-1} - (q-1) X_i^{-1}
                work.push_back({item.coeff, splice(item.word, k, {{Gen::T, i}, {Gen::Xinv, i}})});
                work.push_back({item.coeff * (-qm1), splice(item.word, k, {{Gen::Xinv, i}})});
            }
            continue;
        }

        // The word is now T...T X...X. Contract the T prefix through the
        // length case split and accumulate the X tail as an exponent vector.
        std::size_t split = 0;
        while (split < item.word.size() && item.word[split].kind == Gen::T) ++split;
        ExpVec lambda(static_cast<std::size_t>(algebra.n + 1), 0);
        for (std::size_t k = split; k < item.word.size(); ++k) {
            const Letter& l = item.word[k];
            ExpVec unit = exp_unit(l.index, algebra.n + 1);
            lambda = exp_add(lambda, l.kind == Gen::X ? unit : exp_neg(unit));
        }
        std::map<Permutation, Scalar, PermOrder> acc;
        acc.emplace(Permutation::identity(algebra.n + 1), item.coeff);
        for (std::size_t k = 0; k < split; ++k) {
            int i = item.word[k].index;
            Permutation si = Permutation::simple_reflection(i, algebra.n + 1);
            std::map<Permutation, Scalar, PermOrder> next;
            auto bump = [&next](const Permutation& w, const Scalar& c) {
                auto [it, inserted] = next.emplace(w, c);
                if (!inserted) it->second = it->second + c;
            };
            for (const auto& [w, c] : acc) {
                Permutation wsi = w.compose(si);
                if (wsi.length() > w.length()) {
                    bump(wsi, c);
                } else {
                    bump(w, c * qm1);
                    bump(wsi, c * algebra.q);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [w, c] : acc)
            if (!c.is_zero()) result = result + HeckeElement::term(algebra, w, lambda, c);
    }
    return result;
}

GeneratorImages identity_images(const Algebra& algebra) {
    GeneratorImages im;
    for (int i = 1; i <= algebra.n; ++i) im.t.push_back(HeckeElement::generator(algebra, Gen::T, i));
    for (int j = 1; j <= algebra.n + 1; ++j)
        im.x.push_back(HeckeElement::generator(algebra, Gen::X, j));
    return im;
}

namespace {

// X inverse of a single-monomial image c * X^lambda supported on the
// identity permutation.
std::optional<HeckeElement> invert_monomial_image(const HeckeElement& h) {
    if (h.rows().size() != 1) return std::nullopt;
    const auto& [w, f] = *h.rows().begin();
    if (!w.is_identity() || f.term_count() != 1) return std::nullopt;
    const auto& [lambda, c] = *f.terms().begin();
    return HeckeElement::term(h.algebra(), w, exp_neg(lambda), c.inverse());
}

}  // namespace

RelationCheckReport check_relations(const Algebra& ambient, const GeneratorImages& images,
                                    const Scalar& p) {
    if (!(p.field() == ambient.field))
        raise(errc::field_mismatch, "presentation parameter lies outside the ambient field");
    if (p.is_zero()) raise(errc::zero_parameter, "presentation parameter must be invertible");
    int n = ambient.n;
    if (static_cast<int>(images.t.size()) != n || static_cast<int>(images.x.size()) != n + 1)
        raise(errc::missing_image, "expected " + std::to_string(n) + " T images and " +
                                       std::to_string(n + 1) + " X images");
    for (const auto& h : images.t)
        if (!(h.algebra() == ambient)) raise(errc::parameter_mismatch, "image in wrong algebra");
    for (const auto& h : images.x)
        if (!(h.algebra() == ambient)) raise(errc::parameter_mismatch, "image in wrong algebra");

    std::vector<HeckeElement> tinv;
    if (!images.tinv.empty()) {
        if (static_cast<int>(images.tinv.size()) != n)
            raise(errc::missing_image, "wrong number of explicit T inverse images");
        tinv = images.tinv;
    } else {
        // From the target quadratic: t^{-1} = p^{-1} t + (p^{-1} - 1).
        Scalar pinv = p.inverse();
        for (const auto& h : images.t)
            tinv.push_back(h.scale(pinv) +
                           HeckeElement::one(ambient).scale(pinv - Scalar::one(ambient.field)));
    }
    std::vector<HeckeElement> xinv;
    if (!images.xinv.empty()) {
        if (static_cast<int>(images.xinv.size()) != n + 1)
            raise(errc::missing_image, "wrong number of explicit X inverse images");
        xinv = images.xinv;
    } else {
        for (std::size_t j = 0; j < images.x.size(); ++j) {
            auto inv = invert_monomial_image(images.x[j]);
            if (!inv)
                raise(errc::missing_image,
                      "no explicit inverse image for X" + std::to_string(j + 1) +
                          " and its image is not a monomial");
            xinv.push_back(*inv);
        }
    }

    auto image_of = [&](const Letter& l) -> const HeckeElement& {
        std::size_t k = static_cast<std::size_t>(l.index - 1);
        switch (l.kind) {
            case Gen::T: return images.t[k];
            case Gen::Tinv: return tinv[k];
            case Gen::X: return images.x[k];
            case Gen::Xinv: return xinv[k];
        }
        raise(errc::internal, "unknown generator kind");
    };
    auto eval_word = [&](const GeneratorWord& word) {
        HeckeElement acc = HeckeElement::one(ambient);
        for (const auto& letter : word) acc = acc * image_of(letter);
        return acc;
    };

    std::vector<Relation> rels = relation_list(n, p);
    RelationCheckReport report;
    report.relations.resize(rels.size());
    parallel_for(rels.size(), [&](std::size_t k) {
        const Relation& rel = rels[k];
        HeckeElement lhs = eval_word(rel.lhs);
        HeckeElement rhs = HeckeElement::zero(ambient);
        for (const auto& [c, word] : rel.rhs) rhs = rhs + eval_word(word).scale(c);
        HeckeElement residual = lhs - rhs;
        RelationReport& out = report.relations[k];
        out.name = rel.name;
        out.category = rel.category;
        out.pass = residual.is_zero();
        if (!out.pass) out.residual = residual;
    });
    report.all_pass = true;
    for (const auto& r : report.relations) report.all_pass = report.all_pass && r.pass;
    return report;
}

}  // namespace affhecke
