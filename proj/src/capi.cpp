#include "affhecke.h"

#include <cstring>
#include <string>

#include "affhecke/element_io.hpp"
#include "affhecke/errors.hpp"
#include "affhecke/report.hpp"

using namespace affhecke;

struct ah_algebra {
    Algebra value;
};

struct ah_elem {
    HeckeElement value;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
ah_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return AH_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<ah_status>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return AH_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Algebra make_algebra(int n, const char* field_text, const char* q_text) {
    if (!field_text || !q_text) raise(errc::parse_error, "field and q must be given");
    FieldDesc field = FieldDesc::parse(field_text);
    Scalar q = Scalar::parse(q_text, field);
    return Algebra(n, field, q);
}

}  // namespace

extern "C" {

const char* ah_status_name(ah_status status) {
    return errc_name(static_cast<errc>(status));
}

const char* ah_last_error(void) { return g_last_error.c_str(); }

ah_status ah_algebra_create(int n, const char* field, const char* q, ah_algebra** out) {
    return guarded([&] {
        if (!out) raise(errc::parse_error, "null output pointer");
        *out = new ah_algebra{make_algebra(n, field, q)};
    });
}

void ah_algebra_destroy(ah_algebra* algebra) { delete algebra; }

ah_status ah_elem_parse(const ah_algebra* algebra, const char* text, ah_elem** out) {
    return guarded([&] {
        if (!algebra || !text || !out) raise(errc::parse_error, "null argument");
        *out = new ah_elem{parse_element(algebra->value, text)};
    });
}

ah_status ah_elem_from_word(const ah_algebra* algebra, const char* word, ah_elem** out) {
    return guarded([&] {
        if (!algebra || !word || !out) raise(errc::parse_error, "null argument");
        GeneratorWord w = parse_word(word, algebra->value.n);
        HeckeElement acc = HeckeElement::one(algebra->value);
        for (const auto& letter : w)
            acc = acc * HeckeElement::generator(algebra->value, letter.kind, letter.index);
        *out = new ah_elem{std::move(acc)};
    });
}

ah_status ah_elem_mul(const ah_elem* lhs, const ah_elem* rhs, ah_elem** out) {
    return guarded([&] {
        if (!lhs || !rhs || !out) raise(errc::parse_error, "null argument");
        *out = new ah_elem{lhs->value * rhs->value};
    });
}

ah_status ah_elem_add(const ah_elem* lhs, const ah_elem* rhs, ah_elem** out) {
    return guarded([&] {
        if (!lhs || !rhs || !out) raise(errc::parse_error, "null argument");
        *out = new ah_elem{lhs->value + rhs->value};
    });
}

ah_status ah_elem_equal(const ah_elem* lhs, const ah_elem* rhs, int* out_equal) {
    return guarded([&] {
        if (!lhs || !rhs || !out_equal) raise(errc::parse_error, "null argument");
        *out_equal = lhs->value == rhs->value ? 1 : 0;
    });
}

ah_status ah_elem_to_string(const ah_elem* elem, char** out) {
    return guarded([&] {
        if (!elem || !out) raise(errc::parse_error, "null argument");
        *out = dup_string(element_to_string(elem->value));
    });
}

void ah_elem_destroy(ah_elem* elem) { delete elem; }

ah_status ah_render_mul(const ah_algebra* algebra, const char* lhs, const char* rhs, int json,
                        char** out) {
    return guarded([&] {
        if (!algebra || !lhs || !rhs || !out) raise(errc::parse_error, "null argument");
        *out = dup_string(report::mul(algebra->value, lhs, rhs, json != 0).out);
    });
}

ah_status ah_render_nf(const ah_algebra* algebra, const char* word, int json, char** out) {
    return guarded([&] {
        if (!algebra || !word || !out) raise(errc::parse_error, "null argument");
        *out = dup_string(report::nf(algebra->value, word, json != 0).out);
    });
}

ah_status ah_render_relcheck(const ah_algebra* algebra, const char* p, const char* images,
                             int json, int note_typo, char** out, int* all_pass) {
    return guarded([&] {
        if (!algebra || !out || !all_pass) raise(errc::parse_error, "null argument");
        Scalar param = (p && *p) ? Scalar::parse(p, algebra->value.field) : algebra->value.q;
        std::optional<GeneratorImages> parsed_images;
        if (images)
            parsed_images = report::parse_images_text(algebra->value, images);
        auto outcome =
            report::relcheck(algebra->value, parsed_images, param, json != 0, note_typo != 0);
        *out = dup_string(outcome.out);
        *all_pass = outcome.all_pass ? 1 : 0;
    });
}

ah_status ah_render_center(const ah_algebra* algebra, int json, char** out, int* all_central) {
    return guarded([&] {
        if (!algebra || !out || !all_central) raise(errc::parse_error, "null argument");
        auto outcome = report::center(algebra->value, json != 0);
        *out = dup_string(outcome.out);
        *all_central = outcome.all_central ? 1 : 0;
    });
}

ah_status ah_render_symcheck(int n, const char* field, int json, char** out, int* all_hold) {
    return guarded([&] {
        if (!field || !out || !all_hold) raise(errc::parse_error, "null argument");
        auto outcome = report::symcheck(n, FieldDesc::parse(field), json != 0);
        *out = dup_string(outcome.out);
        *all_hold = outcome.all_hold ? 1 : 0;
    });
}

ah_status ah_render_onedim(int n, const char* field, const char* q, const char* branch, int json,
                           char** out) {
    return guarded([&] {
        if (!field || !q || !branch || !out) raise(errc::parse_error, "null argument");
        FieldDesc f = FieldDesc::parse(field);
        auto outcome = report::onedim(n, Scalar::parse(q, f), branch, json != 0);
        *out = dup_string(outcome.out);
    });
}

ah_status ah_render_iso(int n, const char* field, const char* q, const char* p, int json,
                        char** out, int* verdict) {
    return guarded([&] {
        if (!field || !q || !p || !out || !verdict) raise(errc::parse_error, "null argument");
        FieldDesc f = FieldDesc::parse(field);
        auto outcome = report::iso(Scalar::parse(q, f), Scalar::parse(p, f), n, json != 0);
        *out = dup_string(outcome.out);
        *verdict = outcome.verdict;
    });
}

void ah_string_free(char* s) { delete[] s; }

}  // extern "C"
