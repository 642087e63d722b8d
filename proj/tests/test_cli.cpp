#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "permclass/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = permclass::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PERMCLASS_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("permclass_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "--class", data("two-seg.json"), "--max-n", "5", "--quiet"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == "permclass/1");
    CHECK(j["status"] == "ok");
    CHECK(j["counts"] == json({1, 1, 2, 5, 12, 27}));
    CHECK(r.err.empty());
    const auto loud = run({"enumerate", "--class", data("two-seg.json"), "--max-n", "3"});
    CHECK(loud.err.find("length 3") != std::string::npos);
    CHECK(json::parse(loud.out) == json::parse(run({"enumerate", "--class", data("two-seg.json"), "--max-n", "3", "--quiet"}).out));
}

TEST_CASE("encode and decode") {
    CHECK(run({"encode", "3142", "--table"}).out == "1 2 1 3\n");
    const auto j = json::parse(run({"encode", "3142"}).out);
    CHECK(j["word"] == json({1, 2, 1, 3}));
    CHECK(j["perm"] == json({3, 1, 4, 2}));
    CHECK(json::parse(run({"encode", "--decode", "1 2 1 3"}).out)["perm"] == json({3, 1, 4, 2}));
    CHECK(json::parse(run({"encode", "--decode", "1,2,1,3"}).out)["perm"] == json({3, 1, 4, 2}));
    CHECK(json::parse(run({"encode", "--decode", "1213"}).out)["perm"] == json({3, 1, 4, 2}));
    CHECK(run({"encode", "--decode", "1 2x"}).code == 1);
    const auto per = json::parse(run({"encode", "--pi", data("oscillation.json")}).out);
    CHECK(per["rank_word"]["P"] == 2);
}

TEST_CASE("atomic") {
    const auto r = run({"atomic", "--class", data("a321-2143.json"), "--pair-len", "4"});
    REQUIRE(r.code == 0);
    const auto rep = json::parse(r.out)["report"];
    CHECK(rep["verdict"] == "refuted-certified");
    const std::set<json> pair{rep["witness_pair"][0], rep["witness_pair"][1]};
    CHECK(pair == std::set<json>{json({3, 1, 4, 2}), json({2, 4, 1, 3})});
    CHECK(rep["decomposition"][0]["basis"].size() == 3);
}

TEST_CASE("generating functions") {
    const auto r = run({"gf", "--pi", data("oscillation.json"), "--train-len", "6"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["gf"]["num"] == json({1, -1}));
    CHECK(j["gf"]["den"] == json({1, -2, 0, -1}));
    CHECK(j["counts"] == json({1, 1, 2, 5, 11, 24, 53, 117, 258, 569}));
    CHECK(j["alphabet"]["m"] == 3);
    const auto inc = json::parse(run({"gf", "--class", data("increasing.json"), "--train-len", "4"}).out);
    CHECK(inc["gf"]["den"] == json({1, -1}));
    CHECK(inc["alphabet"]["theoretical"] == 4);
    // The layered class has an unbounded alphabet.
    const auto layered = run({"gf", "--class", data("layered.json"), "--train-len", "8"});
    CHECK(layered.code == 1);
    CHECK(json::parse(layered.out)["status"] == "error");
    CHECK(run({"gf", "--train-len", "4"}).code == 1);
}

TEST_CASE("round trips between subcommands") {
    const auto twin = run({"examples", "twin", "--n", "2"});
    REQUIRE(twin.code == 0);
    const auto pi = write_temp("twin.json", twin.out);
    const auto sub = json::parse(run({"sub", "--pi", pi, "-k", "4"}).out);
    CHECK(sub["count"] == 13);
    const auto basis = run({"basis", "--pi", pi, "--max-n", "9", "--quiet"});
    REQUIRE(basis.code == 0);
    const auto cls = write_temp("twin-basis.json", basis.out);
    const auto rep = json::parse(run({"classify", "--pi", pi, "--class", cls, "--depth", "9"}).out);
    CHECK(rep["report"]["branch"] == "periodic");
    CHECK(rep["report"]["period"] == json({{"N", 3}, {"P", 5}}));
    // The class payload of one command feeds the next.
    const auto again = run({"basis", "--class", cls});
    CHECK(json::parse(again.out)["basis"] == json::parse(basis.out)["basis"]);

    const auto growing = run({"examples", "growing", "--depth", "30"});
    const auto g = json::parse(growing.out);
    CHECK(g["periodicity"].is_null());
    CHECK(g["xi"][0] == json({3, 2, 4, 1}));
    const auto prefix = write_temp("growing.json", growing.out);
    CHECK(json::parse(run({"sub", "--pi", prefix, "-k", "3"}).out)["prefix_empirical"] == true);
}

TEST_CASE("classify and landmarks") {
    const auto layered = json::parse(run({"classify", "--pi", data("layered-prefix.json"), "--class", data("layered.json"), "--depth", "7"}).out);
    CHECK(layered["report"]["branch"] == "sum-form");
    CHECK(layered["report"]["gamma"] == json::array());
    const auto lm = json::parse(run({"landmarks", "--pi", data("oscillation.json"), "--class", data("oscillation-class.json")}).out);
    CHECK(lm["found"] == false);
    const auto bad = run({"classify", "--pi", data("oscillation.json"), "--class", data("increasing.json"), "--depth", "4"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("excludes") != std::string::npos);
}

TEST_CASE("usage and domain errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"enumerate", "--class", data("two-seg.json"), "--bogus"}).code == 2);
    CHECK(run({"enumerate"}).code == 2);
    CHECK(run({"encode", "3142", "--json", "--table"}).code == 2);
    CHECK(run({"enumerate", "--class", data("two-seg.json"), "--max-n", "many"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const auto dup = run({"encode", "3143"});
    CHECK(dup.code == 1);
    CHECK(json::parse(dup.out)["diagnostics"][0].get<std::string>().find("duplicated") != std::string::npos);
    CHECK(run({"enumerate", "--class", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"enumerate", "--class", write_temp("broken.json", "{\"basis\": [[1,1]]}")}).code == 1);
    CHECK(run({"examples", "nothing"}).code == 1);
}

TEST_CASE("output is deterministic and independent of the thread count") {
    const std::vector<std::string> args{"basis", "--pi", data("twin.json"), "--max-n", "8", "--quiet"};
    const auto first = run(args);
    CHECK(first.out == run(args).out);
    setenv("PERMCLASS_THREADS", "1", 1);
    const auto single = run(args);
    setenv("PERMCLASS_THREADS", "0", 1);
    CHECK(single.out == first.out);
}
