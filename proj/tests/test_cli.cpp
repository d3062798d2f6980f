// Black-box tests of the command-line tool: output schemas, exit codes,
// byte-identical reruns, config handling.

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef SCHUBERT_CLI_PATH
#error "SCHUBERT_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string command = env + " " + std::string(SCHUBERT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("mult command") {
    CliResult r = run_cli("mult 1 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"1,1\":1,\"2\":1}\n");

    r = run_cli("mult 2,1 2,1 --rect 2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"scale\":2,\"shape\":{\"m\":2,\"n\":2},\"terms\":{}}\n");

    r = run_cli("mult 1 2,1 --rect 2 2");
    CHECK(r.out == "{\"scale\":2,\"shape\":{\"m\":2,\"n\":2},\"terms\":{\"2,2\":1}}\n");

    r = run_cli("mult 1 1 --rect 2 2 --sp");
    CHECK(nlohmann::json::parse(r.out)["scale"] == 4);

    CHECK(run_cli("mult 1,3 1").exit_code == 2);
    CHECK(run_cli("mult").exit_code == 2);
}

TEST_CASE("lr, pieri, giambelli, betti commands") {
    CHECK(run_cli("lr 2,1 2,1 3,2,1").out == "{\"coefficient\":2}\n");
    CHECK(run_cli("pieri 2,1 2").out == "{\"2,1,1,1\":1,\"2,2,1\":1,\"3,1,1\":1,\"3,2\":1}\n");
    CHECK(run_cli("giambelli 2,1").out == "{\"2,1\":1,\"3\":-1}\n");
    CHECK(run_cli("betti 2 2").out == "{\"betti\":[1,1,2,1,1],\"m\":2,\"n\":2}\n");
    CHECK(run_cli("betti 2 2 2").out == "{\"betti\":2,\"k\":2,\"m\":2,\"n\":2}\n");
}

TEST_CASE("rho command reads inline JSON and stdin") {
    CliResult r = run_cli("rho {\\\"3\\\":1,\\\"2,1\\\":2} --rect 2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"scale\":2,\"shape\":{\"m\":2,\"n\":2},\"terms\":{\"2,1\":2}}\n");

    r = run_cli("rho - --rect 2 2", "echo '{\"2,2\":1}' |");
    CHECK(r.out == "{\"scale\":2,\"shape\":{\"m\":2,\"n\":2},\"terms\":{\"2,2\":1}}\n");

    CHECK(run_cli("rho not-json --rect 2 2").exit_code == 2);
}

TEST_CASE("matrix commands") {
    write_file("/tmp/schubert_cli_a.json", "[[1,2],[3,4]]");
    CHECK(run_cli("schur-matrix 1,1 /tmp/schubert_cli_a.json").out ==
          "{\"matrix\":[[-2]],\"order\":1,\"trace\":-2}\n");
    CHECK(run_cli("schur-matrix 1 /tmp/schubert_cli_a.json").out ==
          "{\"matrix\":[[1,2],[3,4]],\"order\":2,\"trace\":5}\n");

    write_file("/tmp/schubert_cli_diag.json", "[[1,0],[0,2]]");
    CHECK(run_cli("trace 2 /tmp/schubert_cli_diag.json").out == "{\"trace\":7}\n");

    CHECK(run_cli("exterior 2 /tmp/schubert_cli_a.json").out == "{\"matrix\":[[-2]],\"order\":1,\"trace\":-2}\n");
    CHECK(run_cli("exterior 3 /tmp/schubert_cli_a.json").exit_code == 2);
    CHECK(run_cli("trace 2 /tmp/no_such_file.json").exit_code == 2);
    write_file("/tmp/schubert_cli_bad.json", "[[1,2],[3]]");
    CHECK(run_cli("schur-matrix 1 /tmp/schubert_cli_bad.json").exit_code == 2);
}

TEST_CASE("chern command") {
    CHECK(run_cli("chern 2 --rank 3").out == "{\"rank\":3,\"terms\":{\"0,1,1\":1,\"1,0,1\":1,\"1,1,0\":1}}\n");
    CHECK(run_cli("chern 3 --symplectic 2").out == "{\"rank\":2,\"terms\":{}}\n");
    CHECK(run_cli("chern 1 --rank 1").out == "{\"rank\":1,\"terms\":{\"1\":1}}\n");
    CliResult r = run_cli("chern 2 --element {\\\"rank\\\":2,\\\"terms\\\":{\\\"1,0\\\":1,\\\"0,1\\\":1}}");
    CHECK(r.out == "{\"rank\":2,\"terms\":{\"1,1\":1}}\n");
    CHECK(run_cli("chern 2").exit_code == 2);
    CHECK(run_cli("chern 2 --rank 3 --symplectic 2").exit_code == 2);
}

TEST_CASE("forms command") {
    CliResult r = run_cli("forms 1 1 2 2");
    CHECK(r.out == "{\"decomposition\":{\"1,1\":1,\"2\":1},\"lambda\":\"1\",\"m\":2,\"mu\":\"1\",\"n\":2}\n");
    nlohmann::json with_monos = nlohmann::json::parse(run_cli("forms 2,1 1 2 2 --monomials").out);
    CHECK(with_monos["decomposition"].dump() == "{\"2,2\":1}");
    CHECK(with_monos.contains("monomials"));
    CHECK(!with_monos["monomials"].empty());
}

TEST_CASE("verify command and exit codes") {
    CliResult r = run_cli("verify symmetrizer --max-weight 4");
    CHECK(r.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(r.out);
    CHECK(report["suite"] == "symmetrizer");
    CHECK(report["failures"].empty());
    CHECK(report["cases"].get<long long>() > 0);
    CHECK(report["engine"] == "schubert 0.1.0");

    CHECK(run_cli("verify theorem --max-weight 4 --max-shape 3 3").exit_code == 0);
    CHECK(run_cli("verify forms --max-shape 2 2").exit_code == 0);

    CHECK(run_cli("verify nonsense").exit_code == 2);
    // weight bound above p_max is a budget violation
    CHECK(run_cli("verify oracle --max-weight 9").exit_code == 3);
}

TEST_CASE("budget config file") {
    write_file("/tmp/schubert_cli_budget.ini", "p_max = 2\n");
    write_file("/tmp/schubert_cli_diag3.json", "[[1,0,0],[0,2,0],[0,0,3]]");
    CHECK(run_cli("trace 2,1 /tmp/schubert_cli_diag3.json").exit_code == 0);
    CHECK(run_cli("--config /tmp/schubert_cli_budget.ini trace 2,1 /tmp/schubert_cli_diag3.json").exit_code == 3);
    CHECK(run_cli("trace 2,1 /tmp/schubert_cli_diag3.json", "SCHUBERT_CONFIG=/tmp/schubert_cli_budget.ini").exit_code == 3);
    write_file("/tmp/schubert_cli_badbudget.ini", "frobnicate = 9\n");
    CHECK(run_cli("--config /tmp/schubert_cli_badbudget.ini mult 1 1").exit_code == 2);
}

TEST_CASE("output is byte-identical across reruns") {
    for (const std::string args : {"mult 2,1 2,1", "chern 2 --rank 4", "forms 2 1 2 2 --monomials",
                                   "schur-matrix 2 /tmp/schubert_cli_a.json"}) {
        CliResult a = run_cli(args), b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
    // verify reports differ only in wall time
    CliResult first = run_cli("verify lambda --seed 5");
    CliResult second = run_cli("verify lambda --seed 5");
    CHECK(first.exit_code == 0);
    nlohmann::json a = nlohmann::json::parse(first.out);
    nlohmann::json b = nlohmann::json::parse(second.out);
    CHECK(a["seed"] == 5);
    a.erase("wall_time_s");
    b.erase("wall_time_s");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("pretty printing is opt-in") {
    CliResult compact = run_cli("mult 1 1");
    CliResult pretty = run_cli("--pretty mult 1 1");
    CHECK(compact.out.find('\n') == compact.out.size() - 1);
    CHECK(pretty.out.find("  \"1,1\": 1") != std::string::npos);
    CHECK(nlohmann::json::parse(pretty.out) == nlohmann::json::parse(compact.out));
}
