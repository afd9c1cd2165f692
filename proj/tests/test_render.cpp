#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "frobtsct/render.hpp"

using namespace frobtsct;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("character table JSON carries atoms and class data") {
    CharTable X = irr_frobenius(validate_spec(3, 8, Fusion::Maximal));
    Json j = chartab_json(X);
    REQUIRE(j["rows"].size() == 9);
    REQUIRE(j["columns"].size() == 9);
    CHECK(j["columns"][0]["name"] == "1a");
    CHECK(j["columns"][0]["size"] == 1);
    CHECK(j["columns"][8]["order"] == 3);
    for (const auto& v : j["rows"][0]["values"]) CHECK(v.get<std::string>() == "1");
    CHECK(j["rows"][1]["values"][1].get<std::string>() == "E(8)");
    CHECK(j["rows"][1]["name"] == "chi_2");
}

TEST_CASE("JSON round-trips the table values") {
    CharTable X = irr_frobenius(validate_spec(5, 4, Fusion::Minimal));
    Json j = chartab_json(X);
    Json back = Json::parse(json_string(j));
    REQUIRE(back["rows"].size() == (size_t)X.rows());
    for (long i = 0; i < X.rows(); ++i)
        for (long c = 0; c < X.num_cols(); ++c) {
            Cyclotomic v = Cyclotomic::parse(back["rows"][i]["values"][c].get<std::string>());
            CHECK(v == X.vals[i][c]);
        }
}

TEST_CASE("TSCT JSON lists every block with canonical atoms") {
    TSCT t = build_tsct_maximal(3, 8);
    Json j = tsct_json(t);
    REQUIRE(j["vertices"].size() == 3);
    CHECK(j["vertices"][1]["shape"] == "(C3 x C3) : C2");
    CHECK(j["row_labels"][1][0] == "chi_1+chi_3+chi_5+chi_7+chi_9");

    bool found22 = false, found12 = false;
    for (const auto& blk : j["blocks"]) {
        if (blk["i"] == 2 && blk["v"] == 2) {
            found22 = true;
            CHECK(blk["entries"] == Json::parse(R"([["3","1"],["3","-1"]])"));
        }
        if (blk["i"] == 1 && blk["v"] == 2) {
            found12 = true; // zero block, serialized explicitly
            for (const auto& row : blk["entries"])
                for (const auto& x : row) CHECK(x.get<std::string>() == "0");
        }
    }
    CHECK(found22);
    CHECK(found12);
}

TEST_CASE("documents carry the schema header") {
    FrobSpec spec = validate_spec(3, 8, Fusion::Maximal);
    Json doc = document_json("tsct", spec, tsct_json(build_tsct_maximal(3, 8)));
    CHECK(doc["schema"] == "frobtsct/1");
    CHECK(doc["kind"] == "tsct");
    CHECK(doc["spec"]["p"] == 3);
    CHECK(doc["spec"]["case"] == "maximal");
    // serialization is deterministic
    CHECK(json_string(doc) == json_string(document_json("tsct", spec, tsct_json(build_tsct_maximal(3, 8)))));
}

TEST_CASE("CSV and JSON agree cell for cell") {
    CharTable X = irr_frobenius(validate_spec(3, 8, Fusion::Maximal));
    Json j = chartab_json(X);
    std::istringstream csv(chartab_csv(X));
    std::string line;
    std::getline(csv, line); // header
    std::getline(csv, line); // sizes
    for (size_t i = 0; std::getline(csv, line); ++i) {
        auto cells = split_csv_row(line);
        REQUIRE(cells.size() == 10);
        CHECK(cells[0] == j["rows"][i]["name"].get<std::string>());
        for (size_t c = 0; c + 1 < cells.size(); ++c)
            CHECK(cells[c + 1] == j["rows"][i]["values"][c].get<std::string>());
    }
}

TEST_CASE("TSCT CSV and JSON agree cell for cell") {
    TSCT t = build_tsct_minimal(5, 4);
    Json j = tsct_json(t);
    std::string csv = tsct_csv(t);
    // collect block entries from the JSON, keyed i,v
    for (const auto& blk : j["blocks"]) {
        int i = blk["i"], v = blk["v"];
        size_t row = 0;
        std::istringstream is(csv);
        std::string line;
        std::string prefix = std::to_string(i) + "," + std::to_string(v) + ",";
        while (std::getline(is, line)) {
            if (line.rfind(prefix, 0) != 0) continue;
            auto cells = split_csv_row(line);
            REQUIRE(row < blk["entries"].size());
            REQUIRE(cells.size() == 3 + blk["entries"][row].size());
            for (size_t c = 0; c < blk["entries"][row].size(); ++c)
                CHECK(cells[3 + c] == blk["entries"][row][c].get<std::string>());
            ++row;
        }
        CHECK(row == blk["entries"].size());
    }
}

TEST_CASE("LaTeX rendering") {
    CharTable X = irr_frobenius(validate_spec(3, 8, Fusion::Maximal));
    std::string ltx = chartab_latex(X);
    CHECK(ltx.find("\\begin{array}") != std::string::npos);
    CHECK(ltx.find("\\zeta_{8}") != std::string::npos);
    CHECK(ltx.find("\\chi_{9}") != std::string::npos);

    TSCT t = build_tsct_maximal(3, 8);
    std::string tl = tsct_latex(t);
    // column group headers name the normalizers
    CHECK(tl.find("N_{1} \\cong (C_{3} \\times C_{3}) \\rtimes C_{8}") != std::string::npos);
    CHECK(tl.find("N_{2} \\cong (C_{3} \\times C_{3}) \\rtimes C_{2}") != std::string::npos);
    CHECK(tl.find("\\multicolumn{8}") != std::string::npos);
    CHECK(tl.find("\\multicolumn{2}") != std::string::npos);
    // 18 value columns after the label column: 8 + 2 + 8
    std::istringstream is(tl);
    std::string line;
    std::getline(is, line);
    CHECK(line == "\\begin{array}{r|cccccccc|cc|cccccccc|}");
    // the full-vertex diagonal block is the 8x8 table of zeta_8 powers
    CHECK(tl.find("\\zeta_{8}^{3}") != std::string::npos);
    // zero blocks render as 0 with the right dimensions: the chi_1+chi_9 row
    // is 9, then 1s on H, then ten zeros over vertices 2 and 3
    CHECK(tl.find("\\chi_{1}+\\chi_{9} & 9 & 1 & 1 & 1 & 1 & 1 & 1 & 1 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 & 0 \\\\") !=
          std::string::npos);

    DecMatrix dec = decomposition_matrix(validate_spec(3, 8, Fusion::Maximal), 2);
    std::string dl = dec_latex(dec);
    CHECK(dl.find("\\begin{array}") != std::string::npos);
}

TEST_CASE("CLI output is byte-identical across runs") {
    const char* cli = FROBTSCT_CLI_PATH;
    struct Case {
        const char* args;
    } cases[] = {
        {"--p 3 --m 8 --case maximal --target tsct --format json"},
        {"--p 5 --m 4 --case minimal --target chartab --format csv"},
        {"--p 3 --m 8 --case maximal --target proj --format latex"},
    };
    int serial = 0;
    for (const auto& c : cases) {
        std::string base = "/tmp/frobtsct_determinism_" + std::to_string(++serial);
        std::string out1 = base + ".a";
        std::string out2 = base + ".b";
        std::string cmd1 = std::string(cli) + " " + c.args + " --out " + out1;
        std::string cmd2 = std::string(cli) + " " + c.args + " --out " + out2;
        REQUIRE(std::system(cmd1.c_str()) == 0);
        REQUIRE(std::system(cmd2.c_str()) == 0);
        std::string a = slurp(out1), b = slurp(out2);
        CHECK(a == b);
        CHECK_FALSE(a.empty());
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }
}

TEST_CASE("report text and JSON") {
    Report rep;
    rep.add("ordinary_row_orthogonality", true);
    rep.add("block_zero_pattern", true, "9 zero blocks");
    Json j = report_json(rep);
    CHECK(j["ok"] == true);
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "ordinary_row_orthogonality");
    CHECK(report_text(rep).find("all checks passed") != std::string::npos);
}
