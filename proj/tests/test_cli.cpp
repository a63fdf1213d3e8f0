#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("sdc_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

Run run(const std::string& args) {
    const auto out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
    const std::string cmd = std::string(SDC_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string corpus(const std::string& file) { return std::string(SDC_CORPUS_DIR) + "/" + file; }

std::vector<nlohmann::json> json_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] == '{') out.push_back(nlohmann::json::parse(line));
    return out;
}

const char* kSmallJob = "construction=I\nring=F2\nn=2\nstrategy=random\nseed=3\nbudget=300\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify") {
    auto r = run("classify 1138 13568 68");
    CHECK(r.status == 0);
    auto j = json_lines(r.out).at(0);
    CHECK(j["family"] == "W68_2");
    CHECK(j["beta"] == 174);
    CHECK(j["gamma"] == 0);
    CHECK(j["novelty"] == "new");
    CHECK(json_lines(run("--include-additions classify 1138 13568 68").out).at(0)["novelty"] == "known");

    j = json_lines(run("classify 442 14960 68").out).at(0);
    CHECK(j["beta"] == 0);
    CHECK(j["gamma"] == 0);
    CHECK(json_lines(run("classify 1312 23040 64").out).at(0)["family"] == "W64_2");

    r = run("classify 2976 0 64");
    CHECK(r.status == 1);
    CHECK(r.err.find("unclassifiable") != std::string::npos);
}

TEST_CASE("construct") {
    auto r = run("construct --spec " + corpus("D6.spec"));
    CHECK(r.status == 0);
    const auto j = json_lines(r.out).at(0);
    CHECK(j["label"] == "D6");
    CHECK(j["d"] == 12);
    CHECK(j["A_12"] == 2592);
    CHECK(j["A_14"] == 17920);
    CHECK(j["beta"] == 80);

    const auto out = scratch() / "records.jsonl";
    r = run("--out " + out.string() + " construct --spec " + corpus("C68_26.spec"));
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    const auto rec = json_lines(slurp(out)).at(0);
    CHECK(rec["gamma"] == 3);
    CHECK(rec["beta"] == 106);
    CHECK(rec["extension"]["c"] == "3");
}

TEST_CASE("exit codes") {
    const auto bad_rows = write_file("zero.spec", "ring=F2\nconstruction=I\nn=2\nlambda=1\nrA=00\nrB=00\nrC=00\nrD=00\n");
    CHECK(run("construct --spec " + bad_rows.string()).status == 3);

    const auto wrong = write_file("wrong.spec", slurp(corpus("C5.spec")) + "expect.A_12=1\n");
    auto r = run("construct --spec " + wrong.string());
    CHECK(r.status == 4);
    CHECK(r.err.find("A_12") != std::string::npos);

    const auto malformed = write_file("bad.spec", "ring=F2\nconstruction=I\nn=2\nlambda=1\nrA=1x\n");
    r = run("construct --spec " + malformed.string());
    CHECK(r.status == 2);
    CHECK(r.err.find(":5:") != std::string::npos);

    CHECK(run("construct").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("construct --spec /nonexistent.spec").status == 1);

    const auto big = write_file("big.job", "construction=II\nring=F2U\nn=4\nlambda=1,3\nstrategy=exhaustive\n");
    r = run("search --spec " + big.string());
    CHECK(r.status == 5);
    CHECK(r.err.find("8589934592") != std::string::npos);
}

TEST_CASE("search output is reproducible and serial matches parallel") {
    const auto job = write_file("small.job", kSmallJob);
    const auto a = run("search --spec " + job.string());
    const auto b = run("search --spec " + job.string() + " --serial");
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    auto hits = [](const std::string& text) {
        std::vector<nlohmann::json> out;
        for (auto& j : json_lines(text))
            if (!j.contains("summary")) out.push_back(j);
        return out;
    };
    CHECK(hits(a.out) == hits(b.out));
    CHECK_FALSE(hits(a.out).empty());
    const auto lines = json_lines(a.out);
    REQUIRE(lines.back().contains("summary"));
    CHECK(lines.back()["summary"]["candidates"] == 300);
    CHECK(a.err.find("candidates") != std::string::npos);

    const auto c = run("search --spec " + job.string() + " --seed 4");
    CHECK(hits(c.out) != hits(a.out));
    const auto none = run("search --spec " + job.string() + " --budget 0");
    CHECK(json_lines(none.out).back()["summary"]["hits"] == 0);
    const auto strict = run("search --spec " + job.string() + " --min-d 4 --target \"W64_2\"");
    CHECK(strict.status == 0);
    CHECK(hits(strict.out).empty());
}

TEST_CASE("extend with the list sampler") {
    const auto r = run("extend --spec " + corpus("C68_25.spec") + " --sampler list --min-d 12");
    REQUIRE(r.status == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() >= 1);
    CHECK(lines[0]["gamma"] == 3);
    CHECK(lines[0]["beta"] == 98);
    CHECK(lines[0]["novelty"] == "new");
}

TEST_CASE("reproduce a table") {
    const auto r = run("reproduce --table 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("reproduce: 6/6 rows match") != std::string::npos);
    CHECK(r.out.find("D6       PASS") != std::string::npos);
}

}  // TEST_SUITE
