#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the tool with stderr dropped; captures stdout and the exit code.
RunResult run(const std::string& args) {
    std::string cmd = std::string(TOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("solve prints man- and woman-optimal matchings") {
    auto man = run("solve " + fixture("poset6.txt"));
    CHECK(man.status == 0);
    CHECK(man.out == "m1 -- w1\nm2 -- w2\nm3 -- w3\nm4 -- w4\nm5 -- w5\nm6 -- w6\n");

    auto woman = run("solve --side woman " + fixture("poset6.txt"));
    CHECK(woman.status == 0);
    CHECK(woman.out == "m1 -- w2\nm2 -- w6\nm3 -- w4\nm4 -- w5\nm5 -- w3\nm6 -- w1\n");

    auto json = run("solve --format json " + fixture("chain3.txt"));
    CHECK(json.status == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["pairs"].size() == 3);
}

TEST_CASE("solve reports singles explicitly") {
    auto res = run("gen -n 2 --women 1 --density 1 | " + std::string(TOOL_PATH) +
                   " solve -");
    CHECK(res.status == 0);
    CHECK(res.out.find("-- -\n") != std::string::npos);  // one single man
}

TEST_CASE("bad input exits 2, unknown flags exit nonzero") {
    CHECK(run("solve /nonexistent.txt").status == 2);
    CHECK(run("solve " + fixture("broken.txt")).status == 2);
    CHECK(run("solve --side dog " + fixture("chain3.txt")).status != 0);
    CHECK(run("frobnicate").status != 0);
}

TEST_CASE("export mirrors the instance as JSON") {
    auto res = run("export " + fixture("preds5.txt"));
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["men"] == 5);
    CHECK(j["men_prefs"][0] == nlohmann::json({1, 2, 3}));
}

TEST_CASE("rotations emits dot by default and json on request") {
    auto dot = run("rotations " + fixture("poset6.txt"));
    CHECK(dot.status == 0);
    CHECK(dot.out.find("digraph rotations") != std::string::npos);
    CHECK(dot.out.find("w1m1->w2m2") != std::string::npos);
    CHECK(dot.out.find("type=2") != std::string::npos);

    auto json = run("rotations --format json --stats " + fixture("poset6.txt"));
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["rotations"].size() == 3);
    CHECK(j["edges"].size() == 2);
    CHECK(j["stats"]["proposals"].get<int>() > 0);
}

TEST_CASE("rotations --gi-compare highlights the reconstruction bug") {
    auto res = run("rotations --gi-compare " + fixture("preds5.txt"));
    CHECK(res.status == 0);
    CHECK(res.out.find("corrected_matches_main: yes") != std::string::npos);
    CHECK(res.out.find("buggy: 0->2 1->0 1->2") != std::string::npos);
}

TEST_CASE("lattice lists matchings smallest closed set first") {
    auto res = run("lattice " + fixture("poset6.txt"));
    CHECK(res.status == 0);
    CHECK(res.out ==
          "m1:w1 m2:w2 m3:w3 m4:w4 m5:w5 m6:w6\n"
          "m1:w2 m2:w1 m3:w3 m4:w4 m5:w5 m6:w6\n"
          "m1:w1 m2:w2 m3:w4 m4:w5 m5:w3 m6:w6\n"
          "m1:w2 m2:w1 m3:w4 m4:w5 m5:w3 m6:w6\n"
          "m1:w2 m2:w6 m3:w4 m4:w5 m5:w3 m6:w1\n");

    auto checked = run("lattice --oracle " + fixture("poset6.txt"));
    CHECK(checked.status == 0);

    auto json = run("lattice --format json " + fixture("chain3.txt"));
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["count"] == 3);
    CHECK(j["truncated"] == false);
    CHECK(j["stable_matchings"][1]["closed_set"] == nlohmann::json({0}));
}

TEST_CASE("lattice truncation exits 3; oracle guard refuses big instances") {
    auto res = run("lattice --max-output 2 " + fixture("poset6.txt"));
    CHECK(res.status == 3);
    CHECK(res.out == "m1:w1 m2:w2 m3:w3 m4:w4 m5:w5 m6:w6\n"
                     "m1:w1 m2:w2 m3:w4 m4:w5 m5:w3 m6:w6\n");

    auto guard = run("gen -n 9 --seed 5 | " + std::string(TOOL_PATH) +
                     " lattice --oracle -");
    CHECK(guard.status == 2);
    auto forced = run("gen -n 9 --seed 5 | " + std::string(TOOL_PATH) +
                      " lattice --oracle --force -");
    CHECK(forced.status == 0);
}

TEST_CASE("gen produces parseable deterministic instances") {
    auto a = run("gen -n 5 --density 0.7 --seed 11");
    auto b = run("gen -n 5 --density 0.7 --seed 11");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, 7) == "men: 5\n");

    auto exp = run("gen --kind exponential -k 2");
    CHECK(exp.out.find("men: 4") != std::string::npos);
}

TEST_CASE("verify distinguishes stable from unstable matchings") {
    auto sol = run("solve " + fixture("poset6.txt"));
    std::string tmp = "/tmp/smtool_test_matching.txt";
    {
        std::FILE* f = std::fopen(tmp.c_str(), "w");
        REQUIRE(f);
        std::fwrite(sol.out.data(), 1, sol.out.size(), f);
        std::fclose(f);
    }
    auto ok = run("verify " + fixture("poset6.txt") + " " + tmp);
    CHECK(ok.status == 0);
    CHECK(ok.out == "stable\n");

    {
        std::FILE* f = std::fopen(tmp.c_str(), "w");
        REQUIRE(f);
        std::fputs("m1 -- w4\nm2 -- w2\nm3 -- w3\nm4 -- w5\nm6 -- w6\n", f);
        std::fclose(f);
    }
    auto bad = run("verify " + fixture("poset6.txt") + " " + tmp);
    CHECK(bad.status == 1);
    CHECK(bad.out.find("unstable") != std::string::npos);
    CHECK(bad.out.find("m1 -- w1") != std::string::npos);

    {
        std::FILE* f = std::fopen(tmp.c_str(), "w");
        REQUIRE(f);
        std::fputs("m1 -- w3\n", f);  // not mutually acceptable
        std::fclose(f);
    }
    CHECK(run("verify " + fixture("poset6.txt") + " " + tmp).status == 2);
    std::remove(tmp.c_str());
}

TEST_CASE("bench emits the documented CSV header") {
    auto res = run("bench --sizes 10,20 --seeds 2");
    CHECK(res.status == 0);
    CHECK(res.out.rfind("n,proposals,rejections,rotations,edges,ns\n", 0) == 0);
    int rows = 0;
    for (char c : res.out)
        if (c == '\n') ++rows;
    CHECK(rows == 5);  // header + 2 sizes x 2 seeds
}
