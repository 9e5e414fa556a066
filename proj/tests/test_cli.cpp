#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "polychow/document.hpp"
#include "polychow/fixtures.hpp"
#include "polychow/report.hpp"

using namespace polychow;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(POLYCHOW_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

const char* kIrregularDoc = R"({
  "lattice_rank": 1,
  "vertices": [[0], ["1/2"]],
  "rays": [[-1], [1]],
  "maximal_cells": [
    {"vertices": [0], "rays": [0]},
    {"vertices": [0, 1], "rays": []},
    {"vertices": [1], "rays": [1]}
  ]
})";

const char* kOverlapDoc = R"({
  "lattice_rank": 1,
  "vertices": [[0], [2], [1], [3]],
  "rays": [],
  "maximal_cells": [
    {"vertices": [0, 1], "rays": []},
    {"vertices": [2, 3], "rays": []}
  ]
})";

void check_parse_fails(const std::string& text, const std::string& needle) {
    CAPTURE(text);
    CAPTURE(needle);
    try {
        build_from_document(parse_document(text));
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}

}  // namespace

TEST_CASE("documents roundtrip through serialization for every fixture") {
    for (const std::string& name :
         {"p1:1", "p1:2", "p1:5", "p1-half", "p2-model", "blp2-model", "projective:1",
          "projective:2", "projective:3", "canonical:blp2"}) {
        CAPTURE(name);
        PolyhedralComplex c = fixture(name);
        ComplexDocument d = document_of(c);
        std::string text = serialize(d);
        PolyhedralComplex c2 = build_from_document(parse_document(text));
        CHECK(c2.ambient_rank() == c.ambient_rank());
        CHECK(c2.cells() == c.cells());
        CHECK(c2.maximal() == c.maximal());
        // canonical form is a serialization fixpoint
        CHECK(serialize(document_of(c2)) == text);
    }
}

TEST_CASE("document parsing reports located errors") {
    check_parse_fails("{", "document:");
    check_parse_fails(R"({"lattice_rank": 0, "vertices": [], "rays": [], "maximal_cells": []})",
                      "lattice_rank");
    check_parse_fails(
        R"({"lattice_rank": 1, "vertices": [["1/x"]], "rays": [], "maximal_cells": []})",
        "vertices[0][0]");
    check_parse_fails(
        R"({"lattice_rank": 1, "vertices": [[0]], "rays": [["a"]], "maximal_cells": []})",
        "rays[0][0]");
    check_parse_fails(
        R"({"lattice_rank": 1, "vertices": [[0]], "rays": [[0]], "maximal_cells": []})",
        "zero vector");
    check_parse_fails(
        R"({"lattice_rank": 1, "vertices": [[0]], "rays": [],
            "maximal_cells": [{"vertices": [0], "rays": [3]}]})",
        "maximal_cells[0].rays[0]");
    check_parse_fails(
        R"({"lattice_rank": 1, "vertices": [[0]], "rays": [],
            "maximal_cells": [{"vertices": [0, 0], "rays": []}]})",
        "repeated index");
    check_parse_fails(
        R"({"lattice_rank": 1, "vertices": [[0]], "rays": [], "maximal_cells": [], "extra": 1})",
        "unknown field 'extra'");
    check_parse_fails(R"({"lattice_rank": 1, "vertices": [[0]], "maximal_cells": []})",
                      "missing field 'rays'");
    check_parse_fails(
        R"({"lattice_rank": 2, "vertices": [[0]], "rays": [], "maximal_cells": []})",
        "vertices[0]");
    // geometric violations surface with the offending cells
    check_parse_fails(kOverlapDoc, "do not meet in a common face");
}

TEST_CASE("piecewise affine companion documents") {
    PolyhedralComplex c = fixture("p1:2");
    REQUIRE(c.maximal() == std::vector<size_t>{2, 3, 4});

    PiecewiseAffine phi = parse_piecewise_affine(
        R"([{"cell": 2, "m": [0], "l": 0},
            {"cell": 3, "m": [-1], "l": 0},
            {"cell": 4, "m": [0], "l": -1}])",
        c);
    CHECK(phi.form(1) == QVec{Rat(-1)});
    CHECK(phi.offset(2) == Rat(-1));
    TWeilDivisor d = divisor_of(phi);
    CHECK(d.vertical == QVec{Rat(0), Rat(1)});

    auto fails = [&](const std::string& text, const std::string& needle) {
        try {
            parse_piecewise_affine(text, c);
            FAIL_CHECK("expected a validation error for " << text);
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails(R"([{"cell": 0, "m": [0], "l": 0}])", "not a maximal cell");
    fails(R"([{"cell": 2, "m": [0], "l": 0}])", "no record for maximal cell 3");
    fails(R"([{"cell": 2, "m": [0], "l": 0}, {"cell": 2, "m": [0], "l": 0},
              {"cell": 3, "m": [-1], "l": 0}, {"cell": 4, "m": [0], "l": -1}])",
          "repeated cell");
    fails(R"([{"cell": 2, "m": [0, 1], "l": 0}])", ".m");
    fails(R"([{"cell": 2, "m": [0], "l": "x"}])", ".l");
    // discontinuous data is rejected by the function itself
    CHECK_THROWS_AS(parse_piecewise_affine(
                        R"([{"cell": 2, "m": [0], "l": 0},
                            {"cell": 3, "m": [-1], "l": 0},
                            {"cell": 4, "m": [0], "l": 0}])",
                        c),
                    ValidationError);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("verify --fixture p1:4").exit_code == 0);
    CHECK(run_cli("chow --fixture nosuch").exit_code == 1);
    CHECK(run_cli("check --fixture p1:2 --seed 5").exit_code == 0);

    auto irregular = write_temp("polychow_irregular.json", kIrregularDoc);
    CHECK(run_cli("chow --input " + irregular.string()).exit_code == 2);
    CHECK(run_cli("chow --input " + irregular.string() + " --force").exit_code == 0);
    CHECK(run_cli("check --input " + irregular.string()).exit_code == 0);

    auto overlap = write_temp("polychow_overlap.json", kOverlapDoc);
    CHECK(run_cli("check --input " + overlap.string()).exit_code == 1);
}

TEST_CASE("cli worked examples") {
    RunResult verify = run_cli("verify --fixture p1:4");
    CHECK(verify.out.find("rank formula: OK (1 + 4z)") != std::string::npos);

    RunResult chow = run_cli("chow --fixture blp2-model --all --format json");
    REQUIRE(chow.exit_code == 0);
    ReportJson j = ReportJson::parse(chow.out);
    std::vector<size_t> dims;
    for (const auto& p : j.at("result").at("presentations"))
        dims.push_back(p.at("dimension").get<size_t>());
    CHECK(dims == std::vector<size_t>{0, 3, 4, 1});

    RunResult divisor = run_cli("divisor --fixture p1:2 --m 1 --l 0");
    CHECK(divisor.out.find("H[(-1)]: -1") != std::string::npos);
    CHECK(divisor.out.find("H[(1)]: 1") != std::string::npos);
    CHECK(divisor.out.find("V[1]: 1") != std::string::npos);

    // the p2-model report always carries the presentation-shape note
    RunResult note = run_cli("check --fixture p2-model");
    CHECK(note.out.find("10 generators") != std::string::npos);
    CHECK(note.out.find("9 generators") != std::string::npos);
}

TEST_CASE("cli reports are byte-deterministic") {
    for (const std::string& args :
         {std::string("chow --fixture blp2-model --all"),
          std::string("chow --fixture blp2-model --all --format json"),
          std::string("specialize --fixture p1-half --format json"),
          std::string("orbits --fixture p2-model")}) {
        CAPTURE(args);
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("text and json reports agree on the numbers") {
    RunResult text = run_cli("chow --fixture p2-model --k 1");
    RunResult json = run_cli("chow --fixture p2-model --k 1 --format json");
    REQUIRE(text.exit_code == 0);
    REQUIRE(json.exit_code == 0);
    ReportJson j = ReportJson::parse(json.out);
    const ReportJson& p = j.at("result").at("presentations").at(0);
    std::string line = "relations: " + std::to_string(p.at("relations").size()) +
                       ", rank: " + std::to_string(p.at("rank").get<size_t>()) +
                       ", dimension: " + std::to_string(p.at("dimension").get<size_t>());
    CHECK(text.out.find(line) != std::string::npos);
    CHECK(p.at("rank").get<size_t>() == 7);
    CHECK(p.at("dimension").get<size_t>() == 2);
    CHECK(p.at("generators").size() == 9);
    CHECK(p.at("relations").size() == 10);

    RunResult vtext = run_cli("verify --fixture p1:3");
    RunResult vjson = run_cli("verify --fixture p1:3 --format json");
    ReportJson vj = ReportJson::parse(vjson.out);
    std::string poly = vj.at("result").at("rank_formula").at("polynomial").at("text");
    CHECK(vj.at("result").at("rank_formula").at("ok").get<bool>());
    CHECK(poly == "1 + 3z");
    CHECK(vtext.out.find("rank formula: OK (" + poly + ")") != std::string::npos);

    RunResult stext = run_cli("specialize --fixture p1-half --k 1");
    RunResult sjson = run_cli("specialize --fixture p1-half --k 1 --format json");
    ReportJson sj = ReportJson::parse(sjson.out);
    const ReportJson& m = sj.at("result").at("specializations").at(0);
    CHECK(m.at("entries") == ReportJson({{"1"}, {"2"}, {"1"}}));
    for (const auto& row : m.at("entries"))
        CHECK(stext.out.find(row.at(0).get<std::string>()) != std::string::npos);
}

TEST_CASE("fixture command emits the canonical document") {
    RunResult r = run_cli("fixture --fixture p2-model --format json");
    REQUIRE(r.exit_code == 0);
    ReportJson j = ReportJson::parse(r.out);
    ReportJson expected = ReportJson::parse(serialize(document_of(fixture("p2-model"))));
    CHECK(j.at("result").at("document") == expected);

    // the text form is the document itself, reparseable as-is
    RunResult t = run_cli("fixture --fixture p1:3");
    size_t brace = t.out.find("{\n");
    REQUIRE(brace != std::string::npos);
    ComplexDocument d = parse_document(t.out.substr(brace));
    PolyhedralComplex c = build_from_document(d);
    CHECK(c.cells() == fixture("p1:3").cells());
}
