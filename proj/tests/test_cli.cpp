#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

std::string cli_binary() {
    const char* bin = std::getenv("STRENGTHLAB_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

struct RunOutput {
    int exit_status = -1;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args, const std::string& tag) {
    const std::string out_path = "cli_out_" + tag + ".json";
    const std::string cmd = "'" + cli_binary() + "' " + args + " > " + out_path + " 2> cli_err_" + tag + ".txt";
    const int status = std::system(cmd.c_str());
    RunOutput out;
    REQUIRE(WIFEXITED(status));
    out.exit_status = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    out.stdout_text = buf.str();
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_CASE("reports are byte-identical across reruns with the same seed") {
    const std::string args = "slice-rank -n 3 -f 'x0*x1 + x2*x3' --seed 99";
    const RunOutput a = run_cli(args, "det_a");
    const RunOutput b = run_cli(args, "det_b");
    REQUIRE(a.exit_status == 0);
    REQUIRE_FALSE(a.stdout_text.empty());
    REQUIRE(a.stdout_text == b.stdout_text);

    const json report = json::parse(a.stdout_text);
    REQUIRE(report.at("command") == "slice-rank");
    REQUIRE(report.at("result").at("value") == 2);
    REQUIRE(report.at("seed") == 99);
    REQUIRE(report.at("exit_status") == 0);

    SECTION("the randomized oracle command is deterministic too") {
        const std::string loci = "loci dims -i 1 -j 2 -d 5 --seed 7";
        const RunOutput c = run_cli(loci, "det_c");
        const RunOutput d = run_cli(loci, "det_d");
        REQUIRE(c.exit_status == 0);
        REQUIRE(c.stdout_text == d.stdout_text);
        const json rep = json::parse(c.stdout_text);
        REQUIRE(rep.at("result").at("dim_Z") == 5);
        REQUIRE(rep.at("result").at("oracle") == 5);
        REQUIRE(rep.at("provenance").at(0).at("agree") == true);
    }
}

TEST_CASE("an empty corpus passes vacuously with a warning") {
    write_file("cli_corpus_empty.jsonl", "");
    const RunOutput r = run_cli("corpus run cli_corpus_empty.jsonl", "empty");
    REQUIRE(r.exit_status == 0);
    const json report = json::parse(r.stdout_text);
    REQUIRE(report.at("result").at("total") == 0);
    REQUIRE(report.at("result").contains("warning"));
}

TEST_CASE("one wrong expectation yields exactly one failure and a nonzero exit") {
    write_file(
        "cli_corpus_fault.jsonl",
        R"({"id": "good-case", "command": "cohomology", "args": ["--space", "2", "--bundle", "2", "--i", "0"], "expected": {"h": 6}, "tag": "hand-checked"})"
        "\n"
        R"({"id": "wrong-case", "command": "cohomology", "args": ["--space", "2", "--bundle", "2", "--i", "0"], "expected": {"h": 7}, "tag": "hand-checked"})"
        "\n");
    const RunOutput r = run_cli("corpus run cli_corpus_fault.jsonl", "fault");
    REQUIRE(r.exit_status == 1);
    const json report = json::parse(r.stdout_text);
    REQUIRE(report.at("result").at("total") == 2);
    REQUIRE(report.at("result").at("passed") == 1);
    REQUIRE(report.at("result").at("failed") == 1);
    REQUIRE(report.at("result").at("failures").at(0).at("id") == "wrong-case");
}

TEST_CASE("a malformed corpus line is reported and the run continues") {
    write_file(
        "cli_corpus_malformed.jsonl",
        "this line is not json\n"
        R"({"id": "still-runs", "command": "cone obstruct", "args": ["-d", "5"], "expected": {"infeasible": true}, "tag": "hand-checked"})"
        "\n");
    const RunOutput r = run_cli("corpus run cli_corpus_malformed.jsonl", "malformed");
    REQUIRE(r.exit_status == 1); // malformed input is never a silent pass
    const json report = json::parse(r.stdout_text);
    REQUIRE(report.at("result").at("total") == 1);
    REQUIRE(report.at("result").at("passed") == 1);
    REQUIRE(report.at("result").at("malformed").size() == 1);
}

TEST_CASE("usage and domain errors map to the documented exit codes") {
    SECTION("unknown subcommands are usage errors") {
        REQUIRE(run_cli("no-such-command", "usage").exit_status == 64);
    }
    SECTION("bad input data is a usage error") {
        REQUIRE(run_cli("quad --gram '1,x;y,1'", "badgram").exit_status == 64);
        REQUIRE(run_cli("cone obstruct -d 3", "lowdeg").exit_status == 64);
    }
    SECTION("the decision budget surfaces as exit 3") {
        const RunOutput r = run_cli(
            "strength decide -n 3 -f 'x0^4 + x1^4 + x2^4 + x3^4' -k 2 --type 1,2",
            "budget");
        REQUIRE(r.exit_status == 3);
        const json report = json::parse(r.stdout_text);
        REQUIRE(report.at("result").contains("error"));
    }
    SECTION("exit status is recorded inside the report") {
        const RunOutput r = run_cli("cohomology --space 2 --bundle 2 --i 0", "ok");
        REQUIRE(r.exit_status == 0);
        const json report = json::parse(r.stdout_text);
        REQUIRE(report.at("exit_status") == 0);
        REQUIRE(report.at("result").at("h") == 6);
    }
}

TEST_CASE("the strength prefix spellings reach the same handlers") {
    const RunOutput direct = run_cli("slice-rank -n 2 -f 'x0^3' --seed 5", "alias_a");
    const RunOutput nested = run_cli("strength slice-rank -n 2 -f 'x0^3' --seed 5", "alias_b");
    REQUIRE(direct.exit_status == 0);
    REQUIRE(direct.stdout_text == nested.stdout_text);
}

TEST_CASE("certificates round-trip through the realify command") {
    write_file("cli_cert.json",
               R"({"n": 2, "d": 2, "target": "x0^2 + x1^2",)"
               R"( "type": [1], "pairs": [{"f": "x0 + i*x1", "g": "x0 - i*x1"}]})");
    const RunOutput r = run_cli("realify --cert cli_cert.json", "realify");
    REQUIRE(r.exit_status == 0);
    const json report = json::parse(r.stdout_text);
    REQUIRE(report.at("result").at("verified") == true);
    REQUIRE(report.at("result").at("original_length") == 1);
    REQUIRE(report.at("result").at("length") <= 2);
    SECTION("a tampered certificate is refused") {
        write_file("cli_cert_bad.json",
                   R"({"n": 2, "d": 2, "target": "x0^2 - x1^2",)"
                   R"( "type": [1], "pairs": [{"f": "x0 + i*x1", "g": "x0 - i*x1"}]})");
        REQUIRE(run_cli("realify --cert cli_cert_bad.json", "realify_bad").exit_status == 64);
    }
}
