#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "genergy/canonical.hpp"
#include "genergy/family.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string canon(const char* family) {
    return genergy::canonical_label(genergy::make_named(genergy::parse_family(family))).graph6;
}

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = genergy::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("energy command") {
    const Run k4 = run({"energy", "K4"});
    CHECK(k4.code == 0);
    CHECK(k4.out.find("energy     6.0000000000") != std::string::npos);

    const Run json = run({"--format", "json", "energy"}, "S 7 7\nC~\n");
    REQUIRE(json.code == 0);
    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.size() == 2);
    CHECK(std::abs(doc[0]["energy"].get<double>() - 6.64681) <= 1e-5);
    CHECK(std::abs(doc[0]["energy_coulson"].get<double>() - doc[0]["energy"].get<double>()) <= 1e-6);
    CHECK(doc[1]["charpoly_text"] == "x^4 - 6x^2 - 8x - 3");
    CHECK(doc[1]["b"][3] == "8");

    const Run empty = run({"energy"}, "");
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());

    const Run bad = run({"energy"}, "K4\nS 5\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);

    const Run csv = run({"energy", "--format", "csv", "W 5"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("input,graph6", 0) == 0);
}

TEST_CASE("energy reads files") {
    const auto path = std::filesystem::temp_directory_path() / "genergy_cli_input.txt";
    {
        std::ofstream f(path);
        f << "# comment\nK 4\n\nKb 3 3\n";
    }
    const Run r = run({"--format", "json", "energy", "-i", path.string()});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 2);
    CHECK(run({"energy", "-i", "/nonexistent/genergy"}).code == 3);
    CHECK(run({"energy", "-i", path.string(), "K4"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("enumerate command") {
    const auto dir = std::filesystem::temp_directory_path() / "genergy_cli_enum";
    std::filesystem::remove_all(dir);
    const Run r = run({"enumerate", "7", "10", "-o", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "132\n");
    CHECK(std::filesystem::exists(dir / "connected_n7_e10.g6"));
    CHECK(std::filesystem::exists(dir / "connected_n7_e10.g6.meta"));
    CHECK(run({"enumerate", "5", "8", "-o", dir.string()}).out == "2\n");
    const Run big = run({"enumerate", "11", "20"});
    CHECK(big.code != 0);
    CHECK_FALSE(big.err.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("rank command") {
    const Run r = run({"--format", "json", "rank", "7", "8", "--top", "2"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][1]["graph6"] == canon("S 7 8"));

    const auto five = nlohmann::json::parse(run({"rank", "5", "6", "-k", "2", "--format", "json"}).out);
    CHECK(five["rows"][0]["graph6"] == canon("B 5 6"));
    CHECK(five["rows"][1]["graph6"] == canon("S 5 6"));

    const Run none = run({"--format", "json", "rank", "6", "7", "--top", "0"});
    CHECK(nlohmann::json::parse(none.out)["rows"].empty());
}

TEST_CASE("verify command") {
    const Run tetra = run({"verify", "--check", "tetracyclic"});
    CHECK(tetra.code == 0);
    CHECK(tetra.out.find("n=8 minimal in G(8,11) is B 8 11") != std::string::npos);
    CHECK(run({"verify", "--check", "closed-forms"}).code == 0);
    const Run bad = run({"verify", "--check", "no-such"});
    CHECK(bad.code == 2);

    const Run json = run({"--format", "json", "verify", "-c", "closed-forms", "-c", "edge-cut", "--seed", "5"});
    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["checks"].size() == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"energy", "--bogus-flag"}).code == 2);
    CHECK(run({"--format", "xml", "energy", "K4"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
