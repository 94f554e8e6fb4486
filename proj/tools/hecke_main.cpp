#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "affhecke.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitComputation = 70;

struct Common {
    int n = 2;
    std::string field = "Qq";
    std::string q = "q";
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_q = true) {
    cmd->add_option("--n", c.n, "rank (generators T_1..T_n, X_1..X_{n+1})")->required();
    cmd->add_option("--field", c.field, "coefficient field: Q, Fp:<prime>, Qq")
        ->capture_default_str();
    if (with_q)
        cmd->add_option("--q", c.q, "algebra parameter (scalar expression)")
            ->capture_default_str();
    cmd->add_flag("--json", c.json, "emit JSON instead of text");
}

int exit_for_status(ah_status status) {
    switch (status) {
        case AH_ERR_MALFORMED_SCALAR:
        case AH_ERR_NONINVERTIBLE_MODULUS:
        case AH_ERR_DENOMINATOR_ZERO:
        case AH_ERR_FIELD_MISMATCH:
        case AH_ERR_LENGTH_MISMATCH:
        case AH_ERR_INDEX_OUT_OF_RANGE:
        case AH_ERR_ZERO_PARAMETER:
        case AH_ERR_MISSING_IMAGE:
        case AH_ERR_INVALID_MODULE:
        case AH_ERR_RANK_TOO_SMALL:
        case AH_ERR_PARSE:
            return kExitUsage;
        default:
            return kExitComputation;
    }
}

int fail(ah_status status) {
    std::fprintf(stderr, "error: %s (%s)\n", ah_last_error(), ah_status_name(status));
    return exit_for_status(status);
}

int emit(char* text) {
    std::fputs(text, stdout);
    ah_string_free(text);
    return 0;
}

struct AlgebraHandle {
    ah_algebra* ptr = nullptr;
    ~AlgebraHandle() { ah_algebra_destroy(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact affine Hecke algebra calculator"};
    app.require_subcommand(1);

    Common c_mul, c_nf, c_rel, c_center, c_sym, c_onedim, c_iso;
    std::string mul_lhs, mul_rhs, nf_word;
    std::string rel_p, rel_images;
    bool rel_note_typo = false;
    std::string onedim_branch = "both";
    std::string iso_p;

    CLI::App* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("lhs", mul_lhs, "left element")->required();
    mul->add_option("rhs", mul_rhs, "right element")->required();
    add_common(mul, c_mul);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a generator word");
    nf->add_option("word", nf_word, "word such as \"T1 Tinv2 X3\"")->required();
    add_common(nf, c_nf);

    CLI::App* rel = app.add_subcommand("relcheck", "verify the defining relations");
    add_common(rel, c_rel);
    rel->add_option("--p", rel_p, "presentation parameter (default: --q)");
    rel->add_option("--images", rel_images, "JSON file with generator images");
    rel->add_flag("--note-typo", rel_note_typo,
                  "print the cross relation subscript convention note");

    CLI::App* center = app.add_subcommand("center", "commutators of S_1..S_n with generators");
    add_common(center, c_center);
    bool center_verify = false;
    center->add_flag("--verify", center_verify, "verify centrality against every generator (default)");

    CLI::App* sym = app.add_subcommand("symcheck", "symmetric function inversion identities");
    add_common(sym, c_sym, false);

    CLI::App* onedim = app.add_subcommand("onedim", "classify one-dimensional modules");
    add_common(onedim, c_onedim);
    onedim->add_option("--branch", onedim_branch, "sign, index or both")->capture_default_str();

    CLI::App* iso = app.add_subcommand("iso", "decide whether H_q and H_p are isomorphic");
    add_common(iso, c_iso);
    iso->add_option("--p", iso_p, "second parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    ah_status status = AH_OK;
    if (mul->parsed()) {
        AlgebraHandle a;
        status = ah_algebra_create(c_mul.n, c_mul.field.c_str(), c_mul.q.c_str(), &a.ptr);
        if (status != AH_OK) return fail(status);
        char* out = nullptr;
        status = ah_render_mul(a.ptr, mul_lhs.c_str(), mul_rhs.c_str(), c_mul.json, &out);
        if (status != AH_OK) return fail(status);
        return emit(out);
    }
    if (nf->parsed()) {
        AlgebraHandle a;
        status = ah_algebra_create(c_nf.n, c_nf.field.c_str(), c_nf.q.c_str(), &a.ptr);
        if (status != AH_OK) return fail(status);
        char* out = nullptr;
        status = ah_render_nf(a.ptr, nf_word.c_str(), c_nf.json, &out);
        if (status != AH_OK) return fail(status);
        return emit(out);
    }
    if (rel->parsed()) {
        AlgebraHandle a;
        status = ah_algebra_create(c_rel.n, c_rel.field.c_str(), c_rel.q.c_str(), &a.ptr);
        if (status != AH_OK) return fail(status);
        std::optional<std::string> images_text;
        if (!rel_images.empty()) {
            std::ifstream in(rel_images);
            if (!in) {
                std::fprintf(stderr, "error: cannot read images file %s\n", rel_images.c_str());
                return kExitUsage;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            images_text = buf.str();
        }
        char* out = nullptr;
        int all_pass = 0;
        status = ah_render_relcheck(a.ptr, rel_p.empty() ? nullptr : rel_p.c_str(),
                                    images_text ? images_text->c_str() : nullptr, c_rel.json,
                                    rel_note_typo ? 1 : 0, &out, &all_pass);
        if (status != AH_OK) return fail(status);
        emit(out);
        return all_pass ? 0 : 1;
    }
    if (center->parsed()) {
        AlgebraHandle a;
        status = ah_algebra_create(c_center.n, c_center.field.c_str(), c_center.q.c_str(), &a.ptr);
        if (status != AH_OK) return fail(status);
        char* out = nullptr;
        int all_central = 0;
        status = ah_render_center(a.ptr, c_center.json, &out, &all_central);
        if (status != AH_OK) return fail(status);
        emit(out);
        return all_central ? 0 : 1;
    }
    if (sym->parsed()) {
        char* out = nullptr;
        int all_hold = 0;
        status = ah_render_symcheck(c_sym.n, c_sym.field.c_str(), c_sym.json, &out, &all_hold);
        if (status != AH_OK) return fail(status);
        emit(out);
        return all_hold ? 0 : 1;
    }
    if (onedim->parsed()) {
        char* out = nullptr;
        status = ah_render_onedim(c_onedim.n, c_onedim.field.c_str(), c_onedim.q.c_str(),
                                  onedim_branch.c_str(), c_onedim.json, &out);
        if (status != AH_OK) return fail(status);
        return emit(out);
    }
    if (iso->parsed()) {
        char* out = nullptr;
        int verdict = 2;
        status = ah_render_iso(c_iso.n, c_iso.field.c_str(), c_iso.q.c_str(), iso_p.c_str(),
                               c_iso.json, &out, &verdict);
        if (status != AH_OK) return fail(status);
        emit(out);
        return verdict;
    }
    return kExitUsage;
}
