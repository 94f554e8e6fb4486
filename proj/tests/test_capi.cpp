#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "affhecke.h"

namespace {

using nlohmann::json;

// Owning wrappers so failed CHECKs cannot leak handles.
struct AlgebraGuard {
    ah_algebra* ptr = nullptr;
    ~AlgebraGuard() { ah_algebra_destroy(ptr); }
};

struct ElemGuard {
    ah_elem* ptr = nullptr;
    ~ElemGuard() { ah_elem_destroy(ptr); }
};

struct StringGuard {
    char* ptr = nullptr;
    ~StringGuard() { ah_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("algebra creation validates its inputs") {
    AlgebraGuard ok;
    CHECK(ah_algebra_create(2, "Qq", "q", &ok.ptr) == AH_OK);

    AlgebraGuard fp;
    CHECK(ah_algebra_create(3, "Fp:7", "2", &fp.ptr) == AH_OK);

    ah_algebra* out = nullptr;
    CHECK(ah_algebra_create(2, "R", "2", &out) == AH_ERR_MALFORMED_SCALAR);
    CHECK(ah_algebra_create(2, "Fp:4", "2", &out) == AH_ERR_NONINVERTIBLE_MODULUS);
    CHECK(ah_algebra_create(2, "Q", "1/0", &out) == AH_ERR_DENOMINATOR_ZERO);
    CHECK(ah_algebra_create(2, "Q", "0", &out) == AH_ERR_ZERO_PARAMETER);
    CHECK(ah_algebra_create(0, "Q", "2", &out) == AH_ERR_INDEX_OUT_OF_RANGE);
    CHECK(ah_algebra_create(2, "Q", "q", &out) == AH_ERR_MALFORMED_SCALAR);

    CHECK(std::strlen(ah_last_error()) > 0);
}

TEST_CASE("status names are stable") {
    CHECK(std::string(ah_status_name(AH_OK)) == "Ok");
    CHECK(std::string(ah_status_name(AH_ERR_DENOMINATOR_ZERO)) == "DenominatorZero");
    CHECK(std::string(ah_status_name(AH_ERR_MISSING_IMAGE)) == "MissingImage");
    CHECK(std::string(ah_status_name(AH_ERR_RANK_TOO_SMALL)) == "RankTooSmall");
    CHECK(std::string(ah_status_name(AH_ERR_PARSE)) == "ParseError");
    CHECK(std::string(ah_status_name(AH_ERR_WITNESS_VERIFICATION_FAILED)) ==
          "WitnessVerificationFailed");
}

TEST_CASE("element parse, arithmetic and printing round-trip through the C API") {
    AlgebraGuard a;
    REQUIRE(ah_algebra_create(2, "Qq", "q", &a.ptr) == AH_OK);

    const char* text = "(q-1)*T[1]*X^[0,1,0] + q*X^[1,-1,0]";
    ElemGuard parsed;
    REQUIRE(ah_elem_parse(a.ptr, text, &parsed.ptr) == AH_OK);
    StringGuard printed;
    REQUIRE(ah_elem_to_string(parsed.ptr, &printed.ptr) == AH_OK);
    CHECK(printed.str() == text);

    // T1*T1 agrees with the quadratic relation.
    ElemGuard t1;
    REQUIRE(ah_elem_parse(a.ptr, "T[1]", &t1.ptr) == AH_OK);
    ElemGuard square;
    REQUIRE(ah_elem_mul(t1.ptr, t1.ptr, &square.ptr) == AH_OK);
    ElemGuard expected;
    REQUIRE(ah_elem_parse(a.ptr, "(q-1)*T[1] + q", &expected.ptr) == AH_OK);
    int equal = 0;
    REQUIRE(ah_elem_equal(square.ptr, expected.ptr, &equal) == AH_OK);
    CHECK(equal == 1);

    ElemGuard word;
    REQUIRE(ah_elem_from_word(a.ptr, "T1 T1", &word.ptr) == AH_OK);
    REQUIRE(ah_elem_equal(word.ptr, expected.ptr, &equal) == AH_OK);
    CHECK(equal == 1);

    ElemGuard sum;
    REQUIRE(ah_elem_add(t1.ptr, t1.ptr, &sum.ptr) == AH_OK);
    ElemGuard twice;
    REQUIRE(ah_elem_parse(a.ptr, "2*T[1]", &twice.ptr) == AH_OK);
    REQUIRE(ah_elem_equal(sum.ptr, twice.ptr, &equal) == AH_OK);
    CHECK(equal == 1);
}

TEST_CASE("null arguments and malformed input surface as status codes") {
    AlgebraGuard a;
    REQUIRE(ah_algebra_create(2, "Q", "2", &a.ptr) == AH_OK);

    ah_elem* out = nullptr;
    CHECK(ah_elem_parse(nullptr, "T[1]", &out) == AH_ERR_PARSE);
    CHECK(ah_elem_parse(a.ptr, "T[1]", nullptr) == AH_ERR_PARSE);
    CHECK(ah_elem_parse(a.ptr, "T[1,1]", &out) == AH_ERR_PARSE);
    CHECK(ah_elem_parse(a.ptr, "X^[1,0]", &out) == AH_ERR_LENGTH_MISMATCH);
    CHECK(ah_elem_parse(a.ptr, "(1/0)*T[1]", &out) == AH_ERR_DENOMINATOR_ZERO);
    CHECK(ah_elem_from_word(a.ptr, "T5", &out) == AH_ERR_INDEX_OUT_OF_RANGE);
    CHECK(std::strlen(ah_last_error()) > 0);

    // Mixing algebras with different parameters is rejected.
    AlgebraGuard b;
    REQUIRE(ah_algebra_create(2, "Q", "3", &b.ptr) == AH_OK);
    ElemGuard ea, eb;
    REQUIRE(ah_elem_parse(a.ptr, "T[1]", &ea.ptr) == AH_OK);
    REQUIRE(ah_elem_parse(b.ptr, "T[1]", &eb.ptr) == AH_OK);
    ah_elem* prod = nullptr;
    CHECK(ah_elem_mul(ea.ptr, eb.ptr, &prod) == AH_ERR_PARAMETER_MISMATCH);
}

TEST_CASE("render mul and nf") {
    AlgebraGuard a;
    REQUIRE(ah_algebra_create(2, "Qq", "q", &a.ptr) == AH_OK);

    StringGuard nf_text;
    REQUIRE(ah_render_nf(a.ptr, "T1 T1", 0, &nf_text.ptr) == AH_OK);
    CHECK(nf_text.str() == "(q-1)*T[1] + q\n");

    StringGuard nf_json;
    REQUIRE(ah_render_nf(a.ptr, "T1 T1", 1, &nf_json.ptr) == AH_OK);
    json jn = json::parse(nf_json.str());
    CHECK(jn["op"] == "nf");
    CHECK(jn["n"] == 2);
    CHECK(jn["result"] == "(q-1)*T[1] + q");

    StringGuard mul_json;
    REQUIRE(ah_render_mul(a.ptr, "T[1]", "T[1]", 1, &mul_json.ptr) == AH_OK);
    json jm = json::parse(mul_json.str());
    CHECK(jm["op"] == "mul");
    CHECK(jm["result"] == "(q-1)*T[1] + q");

    ah_status bad = ah_render_nf(a.ptr, "T9", 0, &nf_text.ptr);
    CHECK(bad == AH_ERR_INDEX_OUT_OF_RANGE);
}

TEST_CASE("render relcheck with default and explicit images") {
    AlgebraGuard a;
    REQUIRE(ah_algebra_create(2, "Qq", "q", &a.ptr) == AH_OK);

    int all_pass = -1;
    StringGuard text;
    REQUIRE(ah_render_relcheck(a.ptr, nullptr, nullptr, 0, 0, &text.ptr, &all_pass) == AH_OK);
    CHECK(all_pass == 1);
    CHECK(text.str().find("21/21 passed") != std::string::npos);
    CHECK(text.str().find("note:") == std::string::npos);

    StringGuard noted;
    REQUIRE(ah_render_relcheck(a.ptr, nullptr, nullptr, 0, 1, &noted.ptr, &all_pass) == AH_OK);
    CHECK(noted.str().find("note: cross relation convention") != std::string::npos);

    StringGuard as_json;
    REQUIRE(ah_render_relcheck(a.ptr, nullptr, nullptr, 1, 0, &as_json.ptr, &all_pass) == AH_OK);
    json j = json::parse(as_json.str());
    CHECK(j["op"] == "relcheck");
    CHECK(j["all_pass"] == true);
    CHECK(j["notes"].size() == 1);
    CHECK(j["relations"].size() == 21);

    // Identity images spelled out by hand, inverses included.
    const char* images =
        "t1 = T[1]\n"
        "t2 = T[2]\n"
        "x1 = X^[1,0,0]\n"
        "x2 = X^[0,1,0]\n"
        "x3 = X^[0,0,1]\n"
        "tinv1 = (1/q)*T[1] + (1/q - 1)\n"
        "tinv2 = (1/q)*T[2] + (1/q - 1)\n"
        "xinv1 = X^[-1,0,0]\n"
        "xinv2 = X^[0,-1,0]\n"
        "xinv3 = X^[0,0,-1]\n";
    StringGuard img_out;
    REQUIRE(ah_render_relcheck(a.ptr, nullptr, images, 0, 0, &img_out.ptr, &all_pass) == AH_OK);
    CHECK(all_pass == 1);

    // Same images checked against the wrong parameter fail but still render.
    StringGuard wrong;
    REQUIRE(ah_render_relcheck(a.ptr, "q^2", images, 0, 0, &wrong.ptr, &all_pass) == AH_OK);
    CHECK(all_pass == 0);
    CHECK(wrong.str().find("FAIL") != std::string::npos);

    // Missing an image is an error, not a failed check.
    int unused = -1;
    StringGuard missing;
    CHECK(ah_render_relcheck(a.ptr, nullptr, "t1 = T[1]\n", 0, 0, &missing.ptr, &unused) ==
          AH_ERR_MISSING_IMAGE);
    CHECK(ah_render_relcheck(a.ptr, nullptr, "bogus line\n", 0, 0, &missing.ptr, &unused) ==
          AH_ERR_PARSE);
}

TEST_CASE("render center emits a top-level array") {
    AlgebraGuard a;
    REQUIRE(ah_algebra_create(2, "Qq", "q", &a.ptr) == AH_OK);

    int all_central = -1;
    StringGuard as_json;
    REQUIRE(ah_render_center(a.ptr, 1, &as_json.ptr, &all_central) == AH_OK);
    CHECK(all_central == 1);
    json j = json::parse(as_json.str());
    REQUIRE(j.is_array());
    CHECK(j.size() == 10);  // j in {1,2}, commutators against 2n+1 = 5 generators
    for (const auto& row : j) {
        CHECK(row.contains("j"));
        CHECK(row.contains("generator"));
        CHECK(row["is_zero"] == true);
    }

    StringGuard text;
    REQUIRE(ah_render_center(a.ptr, 0, &text.ptr, &all_central) == AH_OK);
    CHECK(text.str().find("all commutators vanish") != std::string::npos);
}

TEST_CASE("render symcheck") {
    int all_hold = -1;
    StringGuard as_json;
    REQUIRE(ah_render_symcheck(3, "Qq", 1, &as_json.ptr, &all_hold) == AH_OK);
    CHECK(all_hold == 1);
    json j = json::parse(as_json.str());
    CHECK(j["op"] == "symcheck");
    CHECK(j["identities"].size() == 5);  // i = 0..n+1
    CHECK(j["all_hold"] == true);

    StringGuard text;
    REQUIRE(ah_render_symcheck(2, "Q", 0, &text.ptr, &all_hold) == AH_OK);
    CHECK(all_hold == 1);
    CHECK(text.str().find("all identities hold") != std::string::npos);
}

TEST_CASE("render onedim") {
    StringGuard both;
    REQUIRE(ah_render_onedim(2, "Q", "2", "both", 1, &both.ptr) == AH_OK);
    json j = json::parse(both.str());
    CHECK(j["op"] == "onedim");
    REQUIRE(j["branches"].size() == 2);
    CHECK(j["branches"][0]["branch"] == "sign");
    CHECK(j["branches"][0]["modules"][0]["a"] == json::array({"2", "1", "1/2"}));
    CHECK(j["branches"][1]["branch"] == "index");

    StringGuard sign_text;
    REQUIRE(ah_render_onedim(2, "Q", "2", "sign", 0, &sign_text.ptr) == AH_OK);
    CHECK(sign_text.str().find("epsilon=-1") != std::string::npos);
    CHECK(sign_text.str().find("a={2, 1, 1/2}") != std::string::npos);

    StringGuard bad;
    CHECK(ah_render_onedim(2, "Q", "2", "middle", 0, &bad.ptr) == AH_ERR_PARSE);
    CHECK(ah_render_onedim(2, "Q", "0", "sign", 0, &bad.ptr) == AH_ERR_ZERO_PARAMETER);
}

TEST_CASE("render iso verdict codes and determinism") {
    int verdict = -1;

    StringGuard inverse_json;
    REQUIRE(ah_render_iso(3, "Q", "2", "1/2", 1, &inverse_json.ptr, &verdict) == AH_OK);
    CHECK(verdict == 0);
    json j = json::parse(inverse_json.str());
    CHECK(j["verdict"] == "isomorphic");
    CHECK(j["direction"] == "inverse");
    CHECK(j["witness"]["target_parameter"] == "1/2");
    CHECK(j["witness"]["t"].size() == 3);
    CHECK(j["witness"]["x"].size() == 4);

    StringGuard distinct;
    REQUIRE(ah_render_iso(2, "Q", "2", "3", 1, &distinct.ptr, &verdict) == AH_OK);
    CHECK(verdict == 1);
    json jd = json::parse(distinct.str());
    CHECK(jd["verdict"] == "not_isomorphic");
    CHECK(jd["certificate"]["disagreements"].size() == 6);

    StringGuard degenerate;
    REQUIRE(ah_render_iso(4, "Fp:11", "3", "9", 1, &degenerate.ptr, &verdict) == AH_OK);
    CHECK(verdict == 2);
    json jg = json::parse(degenerate.str());
    CHECK(jg["verdict"] == "inconclusive");
    CHECK(jg["coincidences"].size() > 0);

    // Byte-identical output on repeated invocation.
    StringGuard again;
    REQUIRE(ah_render_iso(3, "Q", "2", "1/2", 1, &again.ptr, &verdict) == AH_OK);
    CHECK(inverse_json.str() == again.str());

    StringGuard small;
    CHECK(ah_render_iso(1, "Q", "2", "3", 0, &small.ptr, &verdict) == AH_ERR_RANK_TOO_SMALL);
}
