#include "unitpoly/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace unitpoly;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "unitpoly");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("unitpoly_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    [[nodiscard]] std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("decide json carries the exact coefficients") {
    const auto r = run_cli({"decide", "--m", "5", "--n0", "7", "--n1", "9", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["status"] == "solvable");
    REQUIRE(doc["solutions"].size() == 1);
    const Json& sol = doc["solutions"][0];
    CHECK(sol["x"].dump() == R"(["14","18"])");
    CHECK(sol["y"].dump() == R"(["7","16","9"])");
    CHECK(sol["z"].dump() == R"(["2","2"])");
    CHECK(sol["params"].dump() == R"({"k":"2","l":"1","s":"1","r":"1"})");
    CHECK(sol["degrees"]["pattern"].dump() == "[1,1,2]");
}

TEST_CASE("unsolvable decide reports the family and search range") {
    const auto r = run_cli({"decide", "--m", "5", "--n0", "7", "--n1", "19", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json doc = Json::parse(r.out);
    CHECK(doc["status"] == "unsolvable");
    CHECK(doc["solutions"].empty());
    REQUIRE(doc["evidence"].size() == 1);
    CHECK(doc["evidence"][0]["family"] == "s=5+7t, r=13+19t");
    CHECK(doc["evidence"][0]["verdict"] == "no_base_triple_with_x0");
    CHECK(doc["evidence"][0]["family_search"]["t_max"] == "10000");
    CHECK(doc["evidence"][0]["family_search"]["found"].is_null());

    const auto text = run_cli({"decide", "--m", "5", "--n0", "7", "--n1", "19"});
    CHECK_THAT(text.out, ContainsSubstring("unsolvable"));
    CHECK_THAT(text.out, ContainsSubstring("s=5+7t, r=13+19t"));
}

TEST_CASE("verify accepts a correct triple and rejects broken ones") {
    TempFile good(R"({"x":["14","18"],"y":["7","16","9"],"z":["2","2"]})");
    auto r = run_cli({"verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", good.path()});
    CHECK(r.code == cli::kExitOk);
    CHECK_THAT(r.out, ContainsSubstring("verified"));

    TempFile zero(R"({"x":["14","18"],"y":["7","16","9"],"z":[]})");
    r = run_cli({"verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", zero.path()});
    CHECK(r.code == cli::kExitPrecondition);
    CHECK_THAT(r.err, ContainsSubstring("'z'"));

    TempFile off(R"({"m":"5","n0":"7","n1":"9","x":["14","18"],"y":["7","17","9"],"z":["2","2"]})");
    r = run_cli({"verify", "--file", off.path()});
    CHECK(r.code == cli::kExitNotVerified);
    CHECK_THAT(r.out, ContainsSubstring("identity fails"));
    CHECK_THAT(r.out, ContainsSubstring("residual"));

    r = run_cli({"verify", "--file", off.path(), "--format", "json"});
    CHECK(r.code == cli::kExitNotVerified);
    CHECK(Json::parse(r.out)["verified"] == false);

    // explicit instance overrides the recorded one
    r = run_cli({"verify", "--n1", "19", "--file", good.path(), "--m", "5", "--n0", "7"});
    CHECK(r.code == cli::kExitNotVerified);
}

TEST_CASE("parse errors report file, line and column") {
    TempFile broken("{\n  \"x\": [\"1\",,\"2\"]\n}\n");
    const auto r = run_cli({"verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", broken.path()});
    CHECK(r.code == cli::kExitPrecondition);
    CHECK_THAT(r.err, ContainsSubstring(broken.path() + ":2:"));
    CHECK_THAT(r.err, ContainsSubstring("invalid JSON"));

    const auto missing = run_cli({"verify", "--m", "5", "--n0", "7", "--n1", "9", "--file", "/nonexistent/t.json"});
    CHECK(missing.code == cli::kExitPrecondition);
}

TEST_CASE("decide output always verifies") {
    for (const auto& [m, n0, n1] : std::vector<std::array<int, 3>>{{5, 7, 9}, {5, 23, 29}, {4, 2, 3}, {5, 4, 9}, {5, 8, 9}}) {
        const auto d = run_cli({"decide", "--m", std::to_string(m), "--n0", std::to_string(n0), "--n1",
                                std::to_string(n1), "--format", "json"});
        REQUIRE(d.code == cli::kExitOk);
        TempFile f(d.out);
        const auto v = run_cli({"verify", "--file", f.path(), "--format", "json"});
        CAPTURE(m, n0, n1, v.out);
        REQUIRE(v.code == cli::kExitOk);
        CHECK(Json::parse(v.out)["verified"] == true);
    }

    // nothing to verify in an unsolvable decision
    const auto d = run_cli({"decide", "--m", "5", "--n0", "7", "--n1", "19", "--format", "json"});
    TempFile f(d.out);
    CHECK(run_cli({"verify", "--file", f.path()}).code == cli::kExitNotVerified);
}

TEST_CASE("output does not depend on the thread count") {
    const std::vector<std::vector<std::string>> cmds{
        {"scan", "--m", "5", "--n1", "29", "--format", "json"},
        {"scan", "--m", "4", "--n1", "101", "--format", "csv"},
        {"base", "--m", "4", "--n0", "401", "--format", "json"},
        {"audit", "--corollary", "3", "--m", "5", "--bound", "61", "--format", "json"},
    };
    for (auto cmd : cmds) {
        auto one = cmd, four = cmd;
        one.insert(one.end(), {"--threads", "1"});
        four.insert(four.end(), {"--threads", "4"});
        const auto a = run_cli(one);
        const auto b = run_cli(four);
        CAPTURE(cmd[0]);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("subcommand outputs") {
    auto r = run_cli({"base", "--m", "5", "--n0", "7", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(Json::parse(r.out)["triples"].size() == 4);

    r = run_cli({"scan", "--m", "5", "--n1", "9", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(Json::parse(r.out)["summary"]["admissible"].dump() == R"(["4","7","8"])");

    r = run_cli({"family", "--m", "5", "--n0", "7", "--n1", "9", "--base", "2,7,14", "--roles", "14,7,2", "--branch", "minus", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json fam = Json::parse(r.out);
    CHECK(fam["z"].dump() == R"(["2","72/35"])");
    CHECK(fam["integral"] == false);

    r = run_cli({"scan", "--m", "5", "--n1", "9", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK_THAT(r.out, ContainsSubstring("\n"));
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"decide", "--m", "3", "--n0", "1", "--n1", "2"}).code == cli::kExitPrecondition);
    CHECK(run_cli({"decide", "--m", "5", "--n0", "3", "--n1", "9"}).code == cli::kExitPrecondition);
    CHECK(run_cli({"decide", "--m", "x", "--n0", "3", "--n1", "9"}).code == cli::kExitPrecondition);
    CHECK(run_cli({"decide", "--m", "5"}).code == cli::kExitPrecondition);
    CHECK(run_cli({"nonsense"}).code == cli::kExitPrecondition);
    CHECK(run_cli({"family", "--m", "5", "--n0", "7", "--n1", "9", "--base", "2,7,14", "--roles", "14,7,3"})
              .code == cli::kExitPrecondition);

    const auto audit = run_cli({"audit", "--corollary", "3", "--m", "5", "--bound", "29"});
    CHECK(audit.code == cli::kExitDiscrepancy);
    CHECK_THAT(audit.out, ContainsSubstring("5/(23 + 29λ)"));
    CHECK(run_cli({"audit", "--corollary", "3", "--m", "4", "--bound", "100"}).code == cli::kExitOk);
    CHECK(run_cli({"audit", "--corollary", "4", "--m", "5", "--bound", "50"}).code == cli::kExitOk);
}
