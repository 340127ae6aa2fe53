#include "catch2/catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "annulus/cli.hpp"

using namespace annulus;
using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "annulus-cli");
    std::vector<char*> argv;
    argv.reserve(args.size());
    for (auto& s : args) argv.push_back(s.data());

    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    CliResult r;
    try {
        r.code = run_cli(static_cast<int>(argv.size()), argv.data());
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_tmp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

std::string fan_file(const AnnulusConfig& cfg, const std::string& name) {
    return write_tmp(name, to_json(delta0(cfg)).dump(2) + "\n");
}

}  // namespace

TEST_CASE("enumerate verifies counts and the bijection", "[cli][enumerate]") {
    CliResult r = run({"enumerate", "--p", "2", "--q", "2", "--m", "1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["counts"]["angulations"] == 4);
    CHECK(j["counts"]["quivers"] == 4);
    CHECK(j["use_flip"] == true);
    CHECK(j["bijection"]["ran"] == true);
    CHECK(j["bijection"]["ok"] == true);
    CHECK(j["formula"]["value"] == 4);
    CHECK(j["formula"]["matches"] == true);
    CHECK(j["ok"] == true);
}

TEST_CASE("enumerate without the flip skips the bijection only when p equals q",
          "[cli][enumerate]") {
    CliResult sym = run({"enumerate", "--p", "2", "--q", "2", "--m", "1", "--no-flip"});
    REQUIRE(sym.code == 0);
    json js = json::parse(sym.out);
    CHECK(js["counts"]["angulations"] == 5);
    CHECK(js["bijection"]["ran"] == false);
    CHECK(js["bijection"]["reason"] == "flip disabled on p == q");
    CHECK(js["formula"]["value"] == 5);

    CliResult asym = run({"enumerate", "--p", "3", "--q", "2", "--m", "1", "--no-flip"});
    REQUIRE(asym.code == 0);
    json ja = json::parse(asym.out);
    CHECK(ja["counts"]["angulations"] == 12);
    CHECK(ja["bijection"]["ran"] == true);
}

TEST_CASE("enumerate trips the resource guard with exit code 2", "[cli][enumerate]") {
    CliResult r = run({"enumerate", "--p", "3", "--q", "2", "--m", "2", "--limit", "10"});
    REQUIRE(r.code == 2);
    CHECK(r.err.find("resource guard") != std::string::npos);
}

TEST_CASE("enumerate writes to a file on request", "[cli][enumerate]") {
    auto path = std::filesystem::temp_directory_path() / "annulus_enum_out.json";
    std::filesystem::remove(path);
    CliResult r =
        run({"enumerate", "--p", "2", "--q", "2", "--m", "2", "-o", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["counts"]["angulations"] == 15);

    CliResult bad = run({"enumerate", "--p", "2", "--q", "2", "-o",
                         "/no_such_directory_anywhere/out.json"});
    REQUIRE(bad.code == 1);
    CHECK(json::parse(bad.err)["rejected"] == true);
}

TEST_CASE("formula prints the closed-form value", "[cli][formula]") {
    CliResult r = run({"formula", "--p", "3", "--q", "2"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["value"] == 12);

    CliResult noflip = run({"formula", "--p", "2", "--q", "2", "--no-flip"});
    REQUIRE(noflip.code == 0);
    CHECK(json::parse(noflip.out)["value"] == 5);
    CHECK(json::parse(noflip.out)["with_flip"] == false);

    CliResult m2 = run({"formula", "--p", "2", "--q", "2", "--m", "2"});
    REQUIRE(m2.code == 1);
    json rej = json::parse(m2.err);
    CHECK(rej["rejected"] == true);
    CHECK(rej["reason"].get<std::string>().find("m = 1") != std::string::npos);
}

TEST_CASE("mutate applied m+1 times reproduces the input byte for byte", "[cli][mutate]") {
    for (const AnnulusConfig& cfg : {AnnulusConfig(2, 2, 1), AnnulusConfig(3, 2, 2)}) {
        std::string in = fan_file(cfg, "annulus_mutate_in_" + std::to_string(cfg.m) + ".json");
        CliResult r = run({"mutate", in, "--position", "1", "--times",
                           std::to_string(cfg.m + 1)});
        REQUIRE(r.code == 0);
        CHECK(r.out == to_json(delta0(cfg)).dump(2) + "\n");
    }
}

TEST_CASE("mutate can emit the quiver alongside", "[cli][mutate]") {
    AnnulusConfig cfg(2, 2, 1);
    std::string in = fan_file(cfg, "annulus_mutate_emit.json");
    auto out_path = std::filesystem::temp_directory_path() / "annulus_mutate_out.json";
    CliResult r = run({"mutate", in, "--position", "0", "--times", "1", "--emit-quiver",
                       "-o", out_path.string()});
    REQUIRE(r.code == 0);
    // the angulation went to the file, so stdout holds only the quiver
    json q = json::parse(r.out);
    CHECK(q["n"] == 4);
    CHECK(q["m"] == 1);
    std::ifstream back(out_path);
    json a = json::parse(back);
    CHECK(a["diagonals"].size() == 4);
    // and the mutated angulation differs from the fan
    CHECK(a != to_json(delta0(cfg)));
}

TEST_CASE("mutate rejects invalid input with a reasoned report", "[cli][mutate]") {
    AnnulusConfig cfg(2, 2, 1);
    json broken = to_json(delta0(cfg));
    broken["diagonals"] = json::array();  // wrong count
    std::string in = write_tmp("annulus_mutate_broken.json", broken.dump());
    CliResult r = run({"mutate", in, "--position", "0"});
    REQUIRE(r.code == 1);
    json rej = json::parse(r.err);
    CHECK(rej["ok"] == false);
    CHECK(rej["rejected"] == true);
    CHECK(rej["reason"].get<std::string>().find("expected") != std::string::npos);

    std::string good = fan_file(cfg, "annulus_mutate_pos.json");
    CliResult oob = run({"mutate", good, "--position", "7"});
    REQUIRE(oob.code == 1);
    CHECK(json::parse(oob.err)["reason"].get<std::string>().find("position") != std::string::npos);

    CliResult missing = run({"mutate", "/no/such/file.json", "--position", "0"});
    REQUIRE(missing.code == 1);

    std::string garbage = write_tmp("annulus_mutate_garbage.json", "not json at all");
    CliResult bad = run({"mutate", garbage, "--position", "0"});
    REQUIRE(bad.code == 1);
    CHECK(json::parse(bad.err)["reason"].get<std::string>().find("JSON") != std::string::npos);
}

TEST_CASE("quiver renders json and dot", "[cli][quiver]") {
    AnnulusConfig cfg(2, 2, 1);
    std::string in = fan_file(cfg, "annulus_quiver_in.json");

    CliResult j = run({"quiver", in});
    REQUIRE(j.code == 0);
    json q = json::parse(j.out);
    CHECK(q["n"] == 4);
    CHECK(q["arrows"].size() > 0);

    CliResult dot = run({"quiver", in, "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("digraph quiver") != std::string::npos);
    CHECK(dot.out.find("->") != std::string::npos);
    CHECK(dot.out.find("(1)") == std::string::npos);  // dual of colour 0, folded

    CliResult full = run({"quiver", in, "--format", "dot", "--full"});
    REQUIRE(full.code == 0);
    CHECK(full.out.find("(1)") != std::string::npos);

    CliResult badfmt = run({"quiver", in, "--format", "svg"});
    REQUIRE(badfmt.code != 0);
}

TEST_CASE("verify runs the seeded property suites", "[cli][verify]") {
    CliResult r = run({"verify", "--p", "2", "--q", "2", "--m", "1", "--samples", "5",
                       "--seed", "42", "--window", "3", "--length", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["seed"] == 42);
    std::vector<std::string> suites = j["suites"];
    REQUIRE(suites == std::vector<std::string>{"crossing", "walks", "translate_duality"});

    // both --seed and --samples are mandatory
    CliResult noseed =
        run({"verify", "--p", "2", "--q", "2", "--m", "1", "--samples", "5"});
    REQUIRE(noseed.code != 0);
    CliResult nosamples =
        run({"verify", "--p", "2", "--q", "2", "--m", "1", "--seed", "1"});
    REQUIRE(nosamples.code != 0);
}

TEST_CASE("arquiver reports core components on stderr", "[cli][arquiver]") {
    CliResult r = run({"arquiver", "--p", "2", "--q", "2", "--m", "1", "--window", "2",
                       "--length", "2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["core_components"] == 3);
    CHECK(r.err.find("core components: 3 / expected 3") != std::string::npos);
    CHECK(r.err.find("S x1") != std::string::npos);
    CHECK(r.err.find("Tp x1") != std::string::npos);
    CHECK(r.err.find("Tq x1") != std::string::npos);

    CliResult dot = run({"arquiver", "--p", "2", "--q", "2", "--m", "1", "--window", "2",
                         "--length", "2", "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("digraph ar") != std::string::npos);
}

TEST_CASE("the command line requires a subcommand", "[cli]") {
    REQUIRE(run({}).code != 0);
    REQUIRE(run({"frobnicate"}).code != 0);
    REQUIRE(run({"enumerate", "--q", "2"}).code != 0);  // --p is mandatory
}
