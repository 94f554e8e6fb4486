#include "affhecke/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "affhecke/element_io.hpp"
#include "affhecke/errors.hpp"

namespace affhecke::report {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kCrossNote =
    "cross relation convention: T_i*X_i*T_i = q*X_(i+1); renderings that typeset the right side "
    "as q*X_i+1 mean the index i+1, not q*X_i plus 1";

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json scalar_list(const std::vector<Scalar>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    return arr;
}

std::string progression_text(const std::vector<Scalar>& values) {
    std::string s = "{";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) s += ", ";
        s += values[k].to_string();
    }
    return s + "}";
}

}  // namespace

MulOutcome mul(const Algebra& algebra, const std::string& lhs, const std::string& rhs, bool json) {
    HeckeElement a = parse_element(algebra, lhs);
    HeckeElement b = parse_element(algebra, rhs);
    std::string result = element_to_string(a * b);
    if (!json) return {result + "\n"};
    ordered_json j;
    j["op"] = "mul";
    j["n"] = algebra.n;
    j["field"] = algebra.field.to_string();
    j["q"] = algebra.q.to_string();
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["result"] = result;
    return {dump(j)};
}

MulOutcome nf(const Algebra& algebra, const std::string& word_text, bool json) {
    GeneratorWord word = parse_word(word_text, algebra.n);
    HeckeElement acc = HeckeElement::one(algebra);
    for (const auto& letter : word)
        acc = acc * HeckeElement::generator(algebra, letter.kind, letter.index);
    std::string result = element_to_string(acc);
    if (!json) return {result + "\n"};
    ordered_json j;
    j["op"] = "nf";
    j["n"] = algebra.n;
    j["field"] = algebra.field.to_string();
    j["q"] = algebra.q.to_string();
    j["word"] = word_to_string(word);
    j["result"] = result;
    return {dump(j)};
}

RelcheckOutcome relcheck(const Algebra& algebra, const std::optional<GeneratorImages>& images,
                         const Scalar& p, bool json, bool note_typo) {
    GeneratorImages im = images ? *images : identity_images(algebra);
    RelationCheckReport report = check_relations(algebra, im, p);

    if (json) {
        ordered_json j;
        j["op"] = "relcheck";
        j["n"] = algebra.n;
        j["field"] = algebra.field.to_string();
        j["q"] = algebra.q.to_string();
        j["p"] = p.to_string();
        j["all_pass"] = report.all_pass;
        j["notes"] = ordered_json::array({kCrossNote});
        ordered_json rels = ordered_json::array();
        for (const auto& r : report.relations) {
            ordered_json e;
            e["name"] = r.name;
            e["category"] = r.category;
            e["pass"] = r.pass;
            if (r.residual) e["residual"] = element_to_string(*r.residual);
            rels.push_back(std::move(e));
        }
        j["relations"] = std::move(rels);
        return {dump(j), report.all_pass};
    }

    std::ostringstream out;
    if (note_typo) out << "note: " << kCrossNote << "\n";
    std::size_t passed = 0;
    for (const auto& r : report.relations) {
        out << r.name << " " << r.category << ": " << (r.pass ? "pass" : "FAIL");
        if (r.residual) out << " (residual: " << element_to_string(*r.residual) << ")";
        out << "\n";
        if (r.pass) ++passed;
    }
    out << "relations: " << passed << "/" << report.relations.size() << " passed\n";
    return {out.str(), report.all_pass};
}

CenterOutcome center(const Algebra& algebra, bool json) {
    struct Row {
        int j;
        CommutatorCheck check;
    };
    std::vector<Row> rows;
    bool all = true;
    for (int j = 1; j <= algebra.n; ++j) {
        HeckeElement s = central_S(j, algebra);
        CentralityReport rep = is_central(s);
        for (auto& c : rep.checks) {
            all = all && c.is_zero;
            rows.push_back({j, std::move(c)});
        }
    }

    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json e;
            e["j"] = row.j;
            e["generator"] = row.check.generator;
            e["is_zero"] = row.check.is_zero;
            if (row.check.commutator)
                e["commutator"] = element_to_string(*row.check.commutator);
            arr.push_back(std::move(e));
        }
        return {dump(arr), all};
    }

    std::ostringstream out;
    for (const auto& row : rows) {
        out << "S[" << row.j << "] vs " << row.check.generator << ": "
            << (row.check.is_zero ? "commutator zero" : "commutator NONZERO");
        if (row.check.commutator) out << " (" << element_to_string(*row.check.commutator) << ")";
        out << "\n";
    }
    out << (all ? "center check: all commutators vanish\n"
                : "center check: some commutator is nonzero\n");
    return {out.str(), all};
}

SymcheckOutcome symcheck(int n, const FieldDesc& field, bool json) {
    SymmetryReport report = symmetry_check(n, field);
    if (json) {
        ordered_json j;
        j["op"] = "symcheck";
        j["n"] = n;
        j["field"] = field.to_string();
        ordered_json ids = ordered_json::array();
        for (const auto& id : report.identities) {
            ordered_json e;
            e["i"] = id.i;
            e["holds"] = id.holds;
            ids.push_back(std::move(e));
        }
        j["identities"] = std::move(ids);
        j["all_hold"] = report.all_hold;
        return {dump(j), report.all_hold};
    }
    std::ostringstream out;
    for (const auto& id : report.identities)
        out << "S_" << id.i << "(X^-1) = S_" << (n + 1 - id.i) << "(X): "
            << (id.holds ? "holds" : "FAILS") << "\n";
    out << (report.all_hold ? "symmetry: all identities hold\n" : "symmetry: some identity fails\n");
    return {out.str(), report.all_hold};
}

OnedimOutcome onedim(int n, const Scalar& q, const std::string& branch, bool json) {
    std::vector<EpsilonBranch> branches;
    if (branch == "sign")
        branches = {EpsilonBranch::sign};
    else if (branch == "index")
        branches = {EpsilonBranch::index};
    else if (branch == "both")
        branches = {EpsilonBranch::sign, EpsilonBranch::index};
    else
        raise(errc::parse_error, "branch must be sign, index or both");

    std::vector<Classification> results;
    for (EpsilonBranch b : branches) results.push_back(classify_onedim(n, q, b));

    if (json) {
        ordered_json j;
        j["op"] = "onedim";
        j["n"] = n;
        j["field"] = q.field().to_string();
        j["q"] = q.to_string();
        ordered_json arr = ordered_json::array();
        for (const auto& cls : results) {
            ordered_json e;
            e["branch"] = branch_name(cls.branch);
            e["epsilon"] = cls.epsilon.to_string();
            e["anchor_power"] = cls.anchor_power;
            e["anchor_rhs"] = cls.anchor_rhs.to_string();
            e["parametric"] = cls.parametric;
            e["coincides_with_other_branch"] = cls.branches_coincide;
            ordered_json mods = ordered_json::array();
            for (const auto& m : cls.modules) {
                ordered_json me;
                me["epsilon"] = m.epsilon.to_string();
                me["a"] = scalar_list(m.a);
                me["character"] = scalar_list(central_character(m));
                mods.push_back(std::move(me));
            }
            e["modules"] = std::move(mods);
            arr.push_back(std::move(e));
        }
        j["branches"] = std::move(arr);
        return {dump(j)};
    }

    std::ostringstream out;
    for (const auto& cls : results) {
        out << "branch " << branch_name(cls.branch) << ": epsilon=" << cls.epsilon.to_string()
            << ", anchor z^" << cls.anchor_power << " = " << cls.anchor_rhs.to_string();
        if (cls.parametric)
            out << ", parametric family (no solution in " << q.field().to_string() << ")";
        out << "\n";
        if (cls.branches_coincide)
            out << "  note: q = -1 makes both branches coincide\n";
        for (const auto& m : cls.modules) {
            out << "  a=" << progression_text(m.a)
                << " character=" << progression_text(central_character(m)) << "\n";
        }
        if (cls.modules.empty() && !cls.parametric) out << "  no modules over this field\n";
    }
    return {out.str()};
}

IsoOutcome iso(const Scalar& q, const Scalar& p, int n, bool json) {
    IsoVerdict verdict = decide_isomorphism(q, p, n);
    int code = verdict.kind == IsoKind::isomorphic ? 0
               : verdict.kind == IsoKind::not_isomorphic ? 1
                                                         : 2;

    if (json) {
        ordered_json j;
        j["op"] = "iso";
        j["n"] = n;
        j["field"] = q.field().to_string();
        j["q"] = q.to_string();
        j["p"] = p.to_string();
        j["verdict"] = iso_kind_name(verdict.kind);
        if (verdict.direction) j["direction"] = iso_direction_name(*verdict.direction);
        if (verdict.witness) {
            ordered_json w;
            w["target_parameter"] = verdict.witness_parameter.to_string();
            ordered_json ts = ordered_json::array();
            for (const auto& h : verdict.witness->t) ts.push_back(element_to_string(h));
            ordered_json xs = ordered_json::array();
            for (const auto& h : verdict.witness->x) xs.push_back(element_to_string(h));
            w["t"] = std::move(ts);
            w["x"] = std::move(xs);
            j["witness"] = std::move(w);
        }
        if (verdict.certificate) {
            const MatchResult& c = *verdict.certificate;
            ordered_json ce;
            ce["q_progression"] = scalar_list(c.q_progression);
            ce["p_progression"] = scalar_list(c.p_progression);
            ordered_json dis = ordered_json::array();
            for (const auto& d : c.disagreements) {
                ordered_json de;
                de["shift"] = d.shift.to_string();
                de["branch"] = match_branch_name(d.branch);
                de["element"] = d.element.to_string();
                de["multiplicity_q"] = d.multiplicity_q;
                de["multiplicity_p"] = d.multiplicity_p;
                dis.push_back(std::move(de));
            }
            ce["disagreements"] = std::move(dis);
            j["certificate"] = std::move(ce);
        }
        if (!verdict.coincidences.empty()) {
            ordered_json co = ordered_json::array();
            for (const auto& a : verdict.coincidences) {
                ordered_json ae;
                ae["shift"] = a.shift.to_string();
                ae["branch"] = match_branch_name(a.branch);
                co.push_back(std::move(ae));
            }
            j["coincidences"] = std::move(co);
        }
        j["notes"] = ordered_json::array();
        for (const auto& note : verdict.notes) j["notes"].push_back(note);
        return {dump(j), code};
    }

    std::ostringstream out;
    out << "verdict: " << iso_kind_name(verdict.kind) << "\n";
    if (verdict.direction) out << "direction: " << iso_direction_name(*verdict.direction) << "\n";
    if (verdict.witness) {
        out << "witness target parameter: " << verdict.witness_parameter.to_string() << "\n";
        for (std::size_t i = 0; i < verdict.witness->t.size(); ++i)
            out << "t" << (i + 1) << " -> " << element_to_string(verdict.witness->t[i]) << "\n";
        for (std::size_t j2 = 0; j2 < verdict.witness->x.size(); ++j2)
            out << "x" << (j2 + 1) << " -> " << element_to_string(verdict.witness->x[j2]) << "\n";
    }
    if (verdict.certificate) {
        const MatchResult& c = *verdict.certificate;
        out << "q progression: " << progression_text(c.q_progression) << "\n";
        out << "p progression: " << progression_text(c.p_progression) << "\n";
        out << "disagreements:\n";
        for (const auto& d : c.disagreements)
            out << "- shift " << d.shift.to_string() << " branch " << match_branch_name(d.branch)
                << ": element " << d.element.to_string() << " has multiplicity "
                << d.multiplicity_q << " vs " << d.multiplicity_p << "\n";
    }
    if (!verdict.coincidences.empty()) {
        out << "coincidences:\n";
        for (const auto& a : verdict.coincidences)
            out << "- shift " << a.shift.to_string() << " branch " << match_branch_name(a.branch)
                << "\n";
    }
    out << "notes:\n";
    for (const auto& note : verdict.notes) out << "- " << note << "\n";
    return {out.str(), code};
}

GeneratorImages parse_images_text(const Algebra& algebra, const std::string& text) {
    std::map<std::string, std::string> assigned;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            raise(errc::parse_error,
                  "images line " + std::to_string(lineno) + ": expected `name = element`");
        std::string name = trim(stripped.substr(0, eq));
        std::string body = trim(stripped.substr(eq + 1));
        if (name.empty() || body.empty())
            raise(errc::parse_error,
                  "images line " + std::to_string(lineno) + ": expected `name = element`");
        if (!assigned.emplace(name, body).second)
            raise(errc::parse_error, "images: duplicate assignment for " + name);
    }
    auto take = [&](const std::string& prefix, int count, bool required) {
        std::vector<HeckeElement> out;
        if (!required) {
            bool any = false;
            for (int i = 1; i <= count; ++i)
                if (assigned.count(prefix + std::to_string(i))) any = true;
            if (!any) return out;
        }
        for (int i = 1; i <= count; ++i) {
            std::string name = prefix + std::to_string(i);
            auto it = assigned.find(name);
            if (it == assigned.end())
                raise(errc::missing_image, "images: no assignment for " + name);
            out.push_back(parse_element(algebra, it->second));
            assigned.erase(it);
        }
        return out;
    };
    GeneratorImages images;
    images.t = take("t", algebra.n, true);
    images.x = take("x", algebra.n + 1, true);
    images.tinv = take("tinv", algebra.n, false);
    images.xinv = take("xinv", algebra.n + 1, false);
    if (!assigned.empty())
        raise(errc::parse_error, "images: unknown name " + assigned.begin()->first);
    return images;
}

}  // namespace affhecke::report
