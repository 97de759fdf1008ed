#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nlbell/cli.hpp"
#include "nlbell/json_io.hpp"
#include "nlbell/machine.hpp"

using namespace nlbell;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "nlbell");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("nlbell_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("gen prints the table layout") {
    const auto r = call({"gen", "--family", "I", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-2 |  1  1  1") != std::string::npos);
    const auto j = call({"--format", "json", "gen", "--family", "M4422"});
    CHECK(j.code == 0);
    CHECK(io::functional_from_json(io::Json::parse(j.out)) == make_mnn22(4));
}

TEST_CASE("unknown family lists the valid names") {
    const auto r = call({"gen", "--family", "Q"});
    CHECK(r.code == 1);
    CHECK(r.err.find("CHSH") != std::string::npos);
    CHECK(call({"gen", "--family", "I"}).code == 1);
    CHECK(call({"--bogus"}).code == 1);
    CHECK(call({}).code == 1);
}

TEST_CASE("eval") {
    const auto path = write_temp("pr.json", io::to_json(machine_behavior(pr_box())).dump());
    const auto r = call({"eval", "--family", "CHSH", "--behavior", path});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2\n");
    CHECK(call({"eval", "--family", "I3322", "--machine", "pr:3"}).out == "1\n");
    CHECK(call({"eval", "--family", "CHSH", "--behavior", "/nonexistent.json"}).code == 1);
    const auto bad = write_temp("bad.json", "{not json");
    CHECK(call({"eval", "--family", "CHSH", "--behavior", bad}).code == 1);
}

TEST_CASE("machine subcommands") {
    const auto recipe = call({"--format", "json", "machine", "recipe", "--family", "I", "--n", "4"});
    CHECK(io::machine_from_json(io::Json::parse(recipe.out)) == pr_n(4));
    const auto wire = call({"--format", "json", "machine", "wire", "--prn", "5"});
    CHECK(io::machine_from_json(io::Json::parse(wire.out)["machine"]) == pr_n(5));
    CHECK(call({"machine", "check", "--machine", "pr:3"}).out == "true\n");
    CHECK(call({"machine", "check", "--machine", "pr"}).code == 1);
}

TEST_CASE("verify-facet exit status follows the certificate") {
    CHECK(call({"verify-facet", "--ineq", "M3322", "--class", "box:pr"}).code == 0);
    CHECK(call({"verify-facet", "--ineq", "CHSH", "--class", "box:pr"}).code == 2);
    CHECK(call({"verify-facet", "--ineq", "M3322", "--class", "local"}).code == 2);
    CHECK(call({"verify-facet", "--ineq", "CHSH", "--class", "box:xx"}).code == 1);
}

TEST_CASE("census and enumeration") {
    const auto r = call({"census"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S3     576      2      12") != std::string::npos);
    const auto e = call({"enum-ns", "--n", "2"});
    CHECK(e.out.find("non-local vertices: 8") != std::string::npos);
    CHECK(call({"enum-local", "--n", "3"}).out == "local vertices: 64\n");
    CHECK(call({"enum-local", "--n", "7"}).code == 1);
}

TEST_CASE("lemma1 and quantum output are deterministic") {
    const auto a = call({"--format", "json", "lemma1", "--n", "3", "--samples", "300"});
    const auto b = call({"--format", "json", "lemma1", "--n", "3", "--samples", "300"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto q1 = call({"--seed", "3", "quantum", "sweep", "--ineq", "CHSH", "--grid", "5"});
    const auto q2 = call({"--seed", "3", "quantum", "sweep", "--ineq", "CHSH", "--grid", "5"});
    CHECK(q1.out == q2.out);
    CHECK(q1.out.rfind("theta,value\n", 0) == 0);
    CHECK(call({"quantum", "seesaw", "--ineq", "CHSH"}).out.find("value: 0.207106781") != std::string::npos);
}
