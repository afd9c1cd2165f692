#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "frobtsct/oracle.hpp"
#include "frobtsct/render.hpp"

using namespace frobtsct;

namespace {

std::string fixture_path(const char* name) {
    return std::string(FROBTSCT_FIXTURE_DIR) + "/" + name;
}

int failing_checks(const Report& rep) {
    int n = 0;
    for (const auto& c : rep.checks)
        if (!c.ok) ++n;
    return n;
}

} // namespace

TEST_CASE("permutation characters by fixed-point counting") {
    FrobSpec spec = validate_spec(3, 8, Fusion::Maximal);
    Group g = Group::build(spec);
    CharTable X = irr_frobenius(spec);

    // the trivial subgroup induces the regular character
    auto reg = permutation_character(g, g.vertex_subgroup(1), X.cols);
    CHECK(reg[0] == Cyclotomic(72));
    for (size_t c = 1; c < reg.size(); ++c) CHECK(reg[c].is_zero());

    // F is normal, so Ind_F^G(1) is 8 on classes inside F and 0 elsewhere
    auto indF = permutation_character(g, g.vertex_subgroup(3), X.cols);
    for (size_t c = 0; c < indF.size(); ++c)
        CHECK(indF[c] == (X.cols[c].rep.j == 0 ? Cyclotomic(8) : Cyclotomic(0)));

    auto indQ2 = permutation_character(g, g.vertex_subgroup(2), X.cols);
    CHECK(indQ2[0] == Cyclotomic(24));
}

TEST_CASE("decomposition of the regular character") {
    FrobSpec spec = validate_spec(3, 8, Fusion::Maximal);
    Group g = Group::build(spec);
    CharTable X = irr_frobenius(spec);
    TSCT t = build_tsct_maximal(3, 8);

    auto reg = permutation_character(g, g.vertex_subgroup(1), X.cols);
    TSDecomp d = decompose_into_ts_rows(t, X, reg, 1);
    REQUIRE(d.ok);
    // <reg, chi> = chi(1): coefficient 1 for each linear, 8 for the induced one
    REQUIRE(d.irr_coeffs.size() == 9);
    for (int a = 0; a < 8; ++a) CHECK(d.irr_coeffs[a] == 1);
    CHECK(d.irr_coeffs[8] == 8);
    // every projective row appears exactly once
    REQUIRE(d.mults.size() == 8);
    for (const auto& m : d.mults) {
        CHECK(m.vertex == 1);
        CHECK(m.mult == 1);
    }
}

TEST_CASE("decomposition of Ind_F^G(1) uses only full-vertex rows") {
    FrobSpec spec = validate_spec(3, 8, Fusion::Maximal);
    Group g = Group::build(spec);
    CharTable X = irr_frobenius(spec);
    TSCT t = build_tsct_maximal(3, 8);

    auto indF = permutation_character(g, g.vertex_subgroup(3), X.cols);
    TSDecomp d = decompose_into_ts_rows(t, X, indF, 3);
    REQUIRE(d.ok);
    // Ind_F^G(1) is the inflation of the regular character of H = C_8
    REQUIRE(d.mults.size() == 8);
    for (const auto& m : d.mults) {
        CHECK(m.vertex == 3);
        CHECK(m.mult == 1);
    }
}

TEST_CASE("decomposition of Ind_{Q_2}^G(1) contains the trivial row once") {
    FrobSpec spec = validate_spec(3, 8, Fusion::Maximal);
    Group g = Group::build(spec);
    CharTable X = irr_frobenius(spec);
    TSCT t = build_tsct_maximal(3, 8);

    auto pc = permutation_character(g, g.vertex_subgroup(2), X.cols);
    TSDecomp d = decompose_into_ts_rows(t, X, pc, 2);
    REQUIRE(d.ok);
    CHECK(d.irr_coeffs[0] == 1); // trivial character appears exactly once
    bool vertex2 = false;
    for (const auto& m : d.mults)
        if (m.vertex == 2 && m.mult > 0) vertex2 = true;
    CHECK(vertex2); // the induced module has a summand with full vertex Q_2
}

TEST_CASE("the zero character decomposes into nothing") {
    FrobSpec spec = validate_spec(3, 8, Fusion::Maximal);
    CharTable X = irr_frobenius(spec);
    TSCT t = build_tsct_maximal(3, 8);
    std::vector<Cyclotomic> zero(X.num_cols());
    TSDecomp d = decompose_into_ts_rows(t, X, zero, 3);
    REQUIRE(d.ok);
    CHECK(d.mults.empty());
}

TEST_CASE("orthogonality relations") {
    CHECK(check_orthogonality(irr_frobenius(validate_spec(3, 8, Fusion::Maximal))).ok());
    CHECK(check_orthogonality(irr_frobenius(validate_spec(5, 4, Fusion::Minimal))).ok());

    // a duplicated row must be caught
    CharTable bad = irr_frobenius(validate_spec(3, 8, Fusion::Maximal));
    bad.vals[2] = bad.vals[1];
    Report rep = check_orthogonality(bad);
    CHECK_FALSE(rep.ok());

    // a corrupted entry breaks row orthogonality too
    CharTable bad2 = irr_frobenius(validate_spec(3, 8, Fusion::Maximal));
    bad2.vals[4][3] += Cyclotomic(1);
    CHECK_FALSE(check_orthogonality(bad2).ok());
}

TEST_CASE("closed-form group data against enumeration") {
    CHECK(closed_form_vs_enumeration(validate_spec(3, 8, Fusion::Maximal)).ok());
    CHECK(closed_form_vs_enumeration(validate_spec(5, 4, Fusion::Minimal)).ok());
    FrobSpec s73 = validate_spec(7, 3, Fusion::Minimal);
    CHECK(s73.num_vertices() == 10);
    CHECK(closed_form_vs_enumeration(s73).ok());
}

TEST_CASE("full verification battery on small specs") {
    for (auto spec : {validate_spec(3, 8, Fusion::Maximal), validate_spec(3, 2, Fusion::Minimal),
                      validate_spec(5, 4, Fusion::Minimal)}) {
        Report rep = verify_spec_report(spec, 2000);
        CHECK(rep.ok());
        bool reciprocity = false, perm = false, diag = false;
        for (const auto& c : rep.checks) {
            if (c.name == "frobenius_reciprocity") reciprocity = true;
            if (c.name.rfind("perm_char_v", 0) == 0) perm = true;
            if (c.name == "diagonal_blocks_projective") diag = true;
        }
        CHECK(reciprocity);
        CHECK(perm);
        CHECK(diag);
    }
}

TEST_CASE("oracle cap skips enumeration, keeps exact checks") {
    Report rep = verify_spec_report(validate_spec(3, 8, Fusion::Maximal), 10);
    CHECK(rep.ok());
    bool skipped = false;
    for (const auto& c : rep.checks)
        if (c.name == "enumeration_skipped") skipped = true;
    CHECK(skipped);
}

TEST_CASE("fixture comparison accepts the shipped tables") {
    CHECK(verify_chartab_fixture(irr_frobenius(validate_spec(3, 8, Fusion::Maximal)),
                                 load_json_file(fixture_path("table4.json")))
              .ok());
    CHECK(verify_tsct_fixture(build_tsct_maximal(3, 8), load_json_file(fixture_path("table5.json"))).ok());
    CHECK(verify_chartab_fixture(irr_frobenius(validate_spec(5, 4, Fusion::Minimal)),
                                 load_json_file(fixture_path("table10.json")))
              .ok());
    CHECK(verify_tsct_fixture(build_tsct_minimal(5, 4), load_json_file(fixture_path("table11.json"))).ok());
}

TEST_CASE("a perturbed fixture entry is reported exactly once") {
    auto fixture = load_json_file(fixture_path("table4.json"));
    fixture["rows"][2]["values"][3] = "E(8)"; // table says -E(8)^2 here
    Report rep =
        verify_chartab_fixture(irr_frobenius(validate_spec(3, 8, Fusion::Maximal)), fixture);
    CHECK_FALSE(rep.ok());
    CHECK(failing_checks(rep) == 1);

    auto tf = load_json_file(fixture_path("table5.json"));
    tf["blocks"]["2,2"][0][1] = "2";
    Report trep = verify_tsct_fixture(build_tsct_maximal(3, 8), tf);
    CHECK_FALSE(trep.ok());
    CHECK(failing_checks(trep) == 1);
}

TEST_CASE("a missing fixture block means the block must vanish") {
    auto tf = load_json_file(fixture_path("table5.json"));
    tf["blocks"].erase("2,2"); // this block is nonzero, so the check must fail
    Report rep = verify_tsct_fixture(build_tsct_maximal(3, 8), tf);
    CHECK_FALSE(rep.ok());

    auto tf2 = load_json_file(fixture_path("table5.json"));
    Report rep2 = verify_tsct_fixture(build_tsct_maximal(3, 8), tf2);
    CHECK(rep2.ok()); // zero blocks like T_{1,2} are simply absent from the file
    CHECK_FALSE(tf2["blocks"].contains("1,2"));
}

TEST_CASE("equal-value atoms in different spellings still match") {
    auto fixture = load_json_file(fixture_path("table4.json"));
    // E(8)^2 = E(4): values are parsed and compared exactly, not as strings
    fixture["rows"][1]["values"][2] = "E(4)";
    CHECK(verify_chartab_fixture(irr_frobenius(validate_spec(3, 8, Fusion::Maximal)), fixture).ok());
}

TEST_CASE("verification report renders as text") {
    Report rep = verify_spec_report(validate_spec(3, 2, Fusion::Minimal), 2000);
    std::string text = report_text(rep);
    CHECK(text.find("all checks passed") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);

    Report bad;
    bad.add("row_orthogonality", false, "rows 1, 2");
    std::string btext = report_text(bad);
    CHECK(btext.find("FAIL row_orthogonality") != std::string::npos);
    CHECK(btext.find("verification failed") != std::string::npos);
}
