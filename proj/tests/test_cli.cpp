#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "plethyx/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* p = std::getenv("PLETHYX_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PLETHYX_BIN must point at the plethyx binary");
    return p;
}

std::string golden_dir() {
    const char* p = std::getenv("PLETHYX_GOLDEN");
    REQUIRE_MESSAGE(p != nullptr, "PLETHYX_GOLDEN must point at tests/golden");
    return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = (env_prefix.empty() ? "" : env_prefix + " ") + binary_path() + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("missing golden file: " + path).c_str());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("lr command") {
    CHECK(run("lr 3,2,1 2,1 2,1").out == "2\n");
    CHECK(run("lr 2,1 [] 2,1").out == "1\n");
    CHECK(run("lr 2 1,1 1").out == "0\n");
    RunResult shown = run("lr 3,2,1 2,1 2,1 --show-tableaux");
    CHECK(shown.exit_code == 0);
    CHECK(shown.out.substr(0, 2) == "2\n");
    CHECK(shown.out.find("[[") != std::string::npos);
}

TEST_CASE("pieri command") {
    CHECK(run("pieri h 2 2,1").out == "s[4,1] + s[3,2] + s[3,1,1] + s[2,2,1]\n");
    CHECK(run("pieri e 1 []").out == "s[1]\n");
}

TEST_CASE("plethysm command") {
    CHECK(run("plethysm s:2 h:2").out == "s[4] + s[2,2]\n");
    CHECK(run("plethysm e:2 h:3").out == "s[5,1] + s[3,3]\n");
    CHECK(run("plethysm s:1 s:2,1").out == "s[2,1]\n");
    // oracle path agrees
    CHECK(run("plethysm s:2 h:2 --oracle").out == "s[4] + s[2,2]\n");
}

TEST_CASE("exit codes: parse 2, cap 3, scope 2") {
    CHECK(run("lr bogus 1 1").exit_code == 2);
    CHECK(run("plethysm s:2 h:1,x").exit_code == 2);
    CHECK(run("restriction 4 4 --method closed").exit_code == 2);
    CHECK(run("pleth-coeff 4,1 2 2").exit_code == 2); // lambda_1 > r + 1
    RunResult cap = run("plethysm s:4 h:4 --oracle");  // 16 > default cap 10
    CHECK(cap.exit_code == 3);
    CHECK(run("nonsense").exit_code == 2);

    // PLETHYX_CAP tightens the oracle bound
    RunResult tight = run("plethysm s:2 h:2 --oracle", "PLETHYX_CAP=3");
    CHECK(tight.exit_code == 3);
    RunResult loose = run("plethysm s:2 h:2 --oracle", "PLETHYX_CAP=4");
    CHECK(loose.exit_code == 0);
    CHECK(loose.out == "s[4] + s[2,2]\n");
}

TEST_CASE("pleth-coeff command") {
    CHECK(run("pleth-coeff 2,2 2 2").out == "1\n");
    CHECK(run("pleth-coeff 2,2 2 2 --method oracle").out == "1\n");
    CHECK(run("pleth-coeff 3,1 2 2 --method oracle").out == "0\n");
}

TEST_CASE("adjoint command") {
    CHECK(run("adjoint s:2,2 h:2").out == "s[2]\n");
    CHECK(run("adjoint s:2,2 h:2 --method closed").out == "s[2]\n");
    CHECK(run("adjoint s:[] h:0 --method closed --max-degree 2").out == "s[2] + s[1] + 1\n");
}

TEST_CASE("frobenius command") {
    CHECK(run("frobenius e:2").out == "H*(s[1,1])\n");
    CHECK(run("frobenius s:3").out == "H*(s[3] + s[2] + s[1,1] + s[1])\n");
    CHECK(run("frobenius s:4").exit_code == 2);
    CHECK(run("frobenius s:4 --method oracle").exit_code == 0);
}

TEST_CASE("restriction command") {
    CHECK(run("restriction 1,1 2,1 --method all").out == "1 1 1\n");
    CHECK(run("restriction 1,1 2 --method oracle").out == "0\n");
    CHECK(run("restriction 1,1 2,1").out == "1\n");
    CHECK(run("restriction 1,1 2,1 --method tuples").out == "1\n");
    // lambda_1 > 3: only the oracle applies; r_{(4)}^{(4)} counts the
    // S_n-invariants of Sym^4, one per partition of 4
    RunResult wide = run("restriction 4 4 --method all");
    CHECK(wide.exit_code == 0);
    CHECK(wide.out == "5\n");
}

TEST_CASE("table command and golden lock") {
    RunResult table = run("table 1,1 --max-mu 3 --format json");
    CHECK(table.exit_code == 0);
    CHECK(table.out == read_file(golden_dir() + "/table_11_maxmu3.json"));

    // rows carry exactly the nonzero restriction coefficients
    nlohmann::json j = nlohmann::json::parse(table.out);
    CHECK(j["lambda"] == nlohmann::json({1, 1}));
    for (const auto& row : j["rows"]) CHECK(row["value"].get<long long>() > 0);

    RunResult empty_lambda = run("table [] --max-mu 2");
    CHECK(empty_lambda.out == "[2] 1\n[1] 1\n[] 1\n");

    RunResult one_box = run("table 1 --max-mu 2");
    CHECK(one_box.out == "[2] 1\n[1,1] 1\n[1] 1\n");
}

TEST_CASE("json output round-trips through the SchurPoly schema") {
    RunResult r = run("plethysm s:2,1 h:2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    plethyx::SchurPoly poly = plethyx::schur_from_json(j);
    CHECK(plethyx::to_json(poly).dump() == j.dump());
    // terms arrive in canonical order: degree descending, then lex descending
    std::vector<plethyx::Partition> order;
    for (const auto& t : j["terms"])
        order.emplace_back(t["partition"].get<std::vector<int>>());
    for (size_t i = 0; i + 1 < order.size(); ++i)
        CHECK(plethyx::canonical_less(order[i], order[i + 1]));
}

TEST_CASE("verify command exit codes and output") {
    RunResult ok = run("verify --suite plethysm-hr --max-size 4 --r-max 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("mismatches: 0") != std::string::npos);

    RunResult json_run = run("verify --suite restriction --max-size 2 --max-mu 3 --format json");
    CHECK(json_run.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j["checked"] == 28);
    CHECK(j["mismatches"].empty());

    CHECK(run("verify --suite bogus").exit_code == 2);
}

TEST_CASE("byte-identical output across parallelism levels (timing masked)") {
    RunResult p1 = run("verify --suite restriction --max-size 3 --max-mu 3 --format json --parallelism 1");
    RunResult p4 = run("verify --suite restriction --max-size 3 --max-mu 3 --format json --parallelism 4");
    nlohmann::json a = nlohmann::json::parse(p1.out), b = nlohmann::json::parse(p4.out);
    a["elapsed_ms"] = 0;
    b["elapsed_ms"] = 0;
    CHECK(a.dump() == b.dump());
}
