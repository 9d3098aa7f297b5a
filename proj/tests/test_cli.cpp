#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "rado/checker.hpp"
#include "rado/coloring.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/rado_cli_test_out.txt";
    const std::string cmd =
        std::string(RADO_CLI_BIN) + " " + args + " >" + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

}  // namespace

TEST_CASE("formula command") {
    CHECK(run("formula --m 4 --c 2").out == "7\n");
    CHECK(run("formula --m 4 --c 2").code == 0);
    CHECK(run("formula --m 2 --c 3").out == "infinite (parity)\n");
    CHECK(run("formula --m 1 --c 4 --a 3").out == "2\n");
    CHECK(run("formula --m 1 --c 3 --a 3").out == "infinite (divisibility)\n");
    CHECK(run("formula --m 1 --c 5 --a 1").out == "infinite (coefficient-one)\n");
    CHECK(run("formula --m 0 --c 2").code == 2);
    CHECK(run("formula --m 4 --c 2 --a 3").code == 2);  // no closed form off a = 2
    CHECK(run("formula --m 4").code == 2);              // missing required flag
}

TEST_CASE("brute command writes a checkable certificate") {
    const std::string cert = "/tmp/rado_cli_test_cert.json";
    const auto r = run("brute --m 3 --c 1 --cert " + cert);
    CHECK(r.code == 0);
    CHECK(r.out.find("4\n") == 0);
    CHECK(r.out.find("certificate: " + cert) != std::string::npos);

    std::ifstream in(cert);
    const auto coloring = rado::Coloring::from_json(nlohmann::json::parse(in));
    CHECK(coloring.size() == 3);
    CHECK(!rado::find_monochromatic_solution(coloring, {3, 1, 2}));
}

TEST_CASE("brute reports unknown with the formula's obstruction") {
    const auto r = run("brute --m 2 --c 1 --max-n 30");
    CHECK(r.code == 3);
    CHECK(r.out.find("unknown above 30") == 0);
    CHECK(r.out.find("infinite (parity)") != std::string::npos);
}

TEST_CASE("json output is schema-stable and repeatable") {
    const auto first = run("brute --m 4 --c 2 --format json");
    const auto second = run("brute --m 4 --c 2 --format json");
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    const auto doc = nlohmann::json::parse(first.out);
    for (const char* key : {"command", "params", "result", "certificate", "diagnostics", "budget_used"})
        REQUIRE(doc.contains(key));
    CHECK(doc["result"]["kind"] == "finite");
    CHECK(doc["result"]["value"] == 7);
}

TEST_CASE("check-coloring accepts both document forms") {
    const std::string json_path = "/tmp/rado_cli_test_parity.json";
    write_file(json_path, rado::parity_coloring(40).to_json().dump());
    CHECK(run("check-coloring " + json_path + " --m 2 --c 1").code == 0);

    const std::string compact_path = "/tmp/rado_cli_test_compact.txt";
    write_file(compact_path, rado::parity_coloring(40).compact());
    CHECK(run("check-coloring " + compact_path + " --m 2 --c 1").code == 0);

    const std::string all_red = "/tmp/rado_cli_test_allred.txt";
    write_file(all_red, std::string(10, 'R'));
    const auto hit = run("check-coloring " + all_red + " --m 2 --c 2");
    CHECK(hit.code == 1);
    CHECK(hit.out.find("monochromatic solution") != std::string::npos);

    write_file("/tmp/rado_cli_test_bad.txt", "{\"n\": 2, \"red\": [1], \"blue\": []}");
    CHECK(run("check-coloring /tmp/rado_cli_test_bad.txt --m 2 --c 2").code == 2);
}

TEST_CASE("chain verification") {
    const std::string dir = RADO_CHAIN_DIR;
    CHECK(run("chain verify " + dir + "/m04_c02_rbb.json").code == 0);
    const auto bad = run("chain verify " + dir + "/m03_c01_rbb.json");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL (range)") != std::string::npos);

    CHECK(run("chain corpus --dir " + dir).code == 0);

    write_file("/tmp/rado_cli_test_chain.json", "{\"m\": 2}");
    CHECK(run("chain verify /tmp/rado_cli_test_chain.json").code == 2);
}

TEST_CASE("continuous verification") {
    CHECK(run("continuous verify --c 3 --a 2").code == 0);
    CHECK(run("continuous verify --c 7/2 --a 3/2 --k-max 30").code == 0);
    CHECK(run("continuous verify --c 5 --a 1").code == 0);  // translation chain
    const auto r = run("continuous verify --c 5 --a 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("interval-chain: PASS") != std::string::npos);
    CHECK(r.out.find("discrete-blocks: PASS") != std::string::npos);
}

TEST_CASE("table command flags disagreement only when there is one") {
    const auto r = run("table --m 2..3 --c 1..3 --format csv --max-n 40");
    CHECK(r.code == 0);
    CHECK(r.out.find("m,c,formula,brute,agree,nodes,seconds") == 0);
    CHECK(r.out.find("2,2,3,3,yes") != std::string::npos);
    CHECK(r.out.find(",no,") == std::string::npos);
}

TEST_CASE("output to file") {
    const std::string out = "/tmp/rado_cli_test_redirect.txt";
    std::remove(out.c_str());
    const auto r = run("formula --m 4 --c 2 --out " + out);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "7");
}
