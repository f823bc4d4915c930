#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "secdom/graph6.hpp"
#include "secdom/mycielskian.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
    int status;
    std::string out;
};

// Runs the tool through the shell; stderr is folded into stdout when asked.
Run run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("'") + SECDOM_CLI_PATH + "' " + args;
    if (merge_stderr) cmd += " 2>&1";
    else cmd += " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int raw = ::pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// Same, feeding `input` on standard input.
Run run_with_input(const std::string& args, const std::string& input) {
    const auto file = fs::temp_directory_path() / ("secdom-cli-in-" + std::to_string(::getpid()));
    std::ofstream(file) << input;
    auto r = run(args + " < '" + file.string() + "'");
    fs::remove(file);
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(SECDOM_GOLDEN_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempDir {
public:
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "secdom-cli-XXXXXX").string();
        path_ = ::mkdtemp(tmpl.data());
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

json compute_json(const std::string& args) {
    const auto r = run("compute --json --no-cache " + args);
    EXPECT_EQ(r.status, 0) << args;
    return json::parse(r.out);
}

std::size_t value_of(const json& j, const std::string& param) {
    for (const auto& e : j.at("results"))
        if (e.at("parameter") == param) return e.at("value").get<std::size_t>();
    ADD_FAILURE() << "no " << param;
    return 0;
}

TEST(Compute, DocumentedExamples) {
    EXPECT_EQ(value_of(compute_json("--family path --n 7 --param gamma_s"), "gamma_s"), 3u);
    EXPECT_EQ(value_of(compute_json("--family path --n 7 --mycielskian --param gamma_s"), "gamma_s"), 5u);
    EXPECT_EQ(value_of(compute_json("--graph6 @ --mycielskian --param gamma_s"), "gamma_s"), 2u);
}

TEST(Compute, TextOutput) {
    const auto r = run("compute --no-cache --family path --n 7 --certificate");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("compute_p7.txt"));
}

TEST(Compute, JsonGolden) {
    const auto r = run("compute --no-cache --json --family path --n 7");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("compute_p7.json"));
}

TEST(Compute, RejectsBadInputNamingLine) {
    TempDir dir;
    const auto file = dir.path() / "in.g6";
    std::ofstream(file) << "# comment\nCh\nC!\n";
    const auto r = run("compute --no-cache --file '" + file.string() + "'", true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("position 1"), std::string::npos) << r.out;
}

TEST(Compute, RejectsOverWidth) {
    EXPECT_EQ(run("compute --no-cache --family path --n 40 --mycielskian").status, 2);
    EXPECT_EQ(run("compute --no-cache --family path --n 65").status, 2);
    EXPECT_EQ(run("compute --no-cache --family path").status, 2);
    EXPECT_EQ(run("compute --no-cache --family path --n 3 --graph6 Ch").status, 2);
    EXPECT_EQ(run("compute --bogus").status, 2);
}

TEST(Compute, StdinStream) {
    const auto r = run("compute --no-cache --json --param gamma --stdin < /dev/null");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    const auto s = run_with_input("compute --no-cache --json --param gamma --stdin", "Ch\nDhc\n");
    ASSERT_EQ(s.status, 0);
    std::istringstream lines(s.out);
    std::string a, b;
    std::getline(lines, a);
    std::getline(lines, b);
    EXPECT_EQ(value_of(json::parse(a), "gamma"), 2u);
    EXPECT_EQ(value_of(json::parse(b), "gamma"), 2u);
}

TEST(Cache, SameValuesWithAndWithout) {
    TempDir dir;
    const std::string cache = "--cache-dir '" + dir.path().string() + "'";
    const auto stream = "generate random --n 7 --p 0.4 --count 15 --seed 5";
    const auto graphs = run(stream).out;
    const auto file = dir.path() / "graphs.g6";
    std::ofstream(file) << graphs << "Ch\nCp\n";  // two labellings of P_4
    const std::string src = "--file '" + file.string() + "'";
    const auto plain = run("compute --json --no-cache " + src);
    const auto cold = run("compute --json " + cache + " " + src);
    const auto warm = run("compute --json " + cache + " " + src);
    const auto checked = run("compute --json --recheck " + cache + " " + src);
    ASSERT_EQ(plain.status, 0);
    ASSERT_EQ(cold.status, 0);
    ASSERT_EQ(warm.status, 0);
    ASSERT_EQ(checked.status, 0);
    std::istringstream a(plain.out), b(warm.out);
    std::string la, lb;
    std::size_t lines = 0;
    while (std::getline(a, la) && std::getline(b, lb)) {
        const auto ja = json::parse(la), jb = json::parse(lb);
        for (const char* p : {"gamma", "gamma_s"}) EXPECT_EQ(value_of(ja, p), value_of(jb, p));
        ++lines;
    }
    EXPECT_EQ(lines, 17u);
    EXPECT_TRUE(fs::exists(dir.path() / "runs.ndjson"));
}

TEST(Cache, RecheckCatchesCorruptRecord) {
    TempDir dir;
    const std::string cache = "--cache-dir '" + dir.path().string() + "'";
    ASSERT_EQ(run("compute --param gamma_s " + cache + " --family path --n 4").status, 0);
    // Rewrite the stored value to a wrong one.
    const auto file = dir.path() / "runs.ndjson";
    std::ifstream in(file);
    auto rec = json::parse(in);
    in.close();
    rec["value"] = 1;
    std::ofstream(file) << rec.dump() << "\n";
    EXPECT_EQ(run("compute --param gamma_s --recheck " + cache + " --family path --n 4").status, 1);
    const auto r = run("compute --json --param gamma_s " + cache + " --family path --n 4", true);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("discarding invalid cache record"), std::string::npos);
}

TEST(Cache, EnvironmentVariable) {
    TempDir dir;
    const auto r = run("compute --param gamma --family cycle --n 5");
    EXPECT_EQ(r.status, 0);
    const auto e = ::setenv("SECDOM_CACHE_DIR", dir.path().c_str(), 1);
    ASSERT_EQ(e, 0);
    EXPECT_EQ(run("compute --param gamma --family cycle --n 5").status, 0);
    ::unsetenv("SECDOM_CACHE_DIR");
    EXPECT_TRUE(fs::exists(dir.path() / "runs.ndjson"));
}

TEST(Mycielskian, Transform) {
    const auto r = run("mycielskian --family path --n 4");
    ASSERT_EQ(r.status, 0);
    const auto g = secdom::from_graph6(r.out.substr(0, r.out.size() - 1));
    EXPECT_EQ(g.order(), 9u);
    EXPECT_EQ(g, secdom::mycielski_graph(secdom::make_path(4)));
    const auto once = run("mycielskian --family complete --n 2");
    const auto twice = run_with_input("mycielskian --stdin", once.out);
    EXPECT_EQ(secdom::from_graph6(twice.out.substr(0, twice.out.size() - 1)).order(), 11u);
}

TEST(Construct, Examples) {
    EXPECT_EQ(run("construct gap-positive --k 3").out, golden("construct_gap_positive_3.txt"));
    const auto p = json::parse(run("construct prescribed --a 3 --b 5 --json").out);
    EXPECT_EQ(p.at("expected").at("gamma_s"), 3);
    EXPECT_EQ(p.at("expected").at("gamma_s_mu"), 5);
    EXPECT_EQ(p.at("order"), 6);
    const auto s = json::parse(run("construct gap-nonneg --k 0 --json").out);
    EXPECT_EQ(s.at("family"), "K_{1,3}");
    EXPECT_EQ(s.at("expected").at("gamma_s"), 3);
    EXPECT_EQ(run("construct prescribed --a 3 --b 6").status, 2);
    EXPECT_EQ(run("construct gap-positive --k 0").status, 2);
}

// Every path and cycle agrees with the closed form except C_3 = K_3.
TEST(Verify, PathBaselineExitStatus) {
    const auto r = run("verify T2 --n-max 14");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("26 instances: 25 pass, 1 fail, 0 skipped"), std::string::npos) << r.out;
    EXPECT_EQ(run("verify T2 --n-min 4 --n-max 14").status, 0);
    EXPECT_EQ(run("verify T2 --n-max 2").status, 0);
}

TEST(Verify, CsvGolden) {
    const auto r = run("verify T17 --n-max 8 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("verify_t17_csv.txt"));
}

TEST(Verify, JsonSchema) {
    const auto r = run("verify GAP0 --k-max 2 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("verify_gap0.json"));
}

// The tabulated value at K_{2,2} disagrees with the solver; the command
// reports it and exits with the failure status.
TEST(Verify, BipartiteMycielskianExitStatus) {
    const auto r = run("verify T20 --sum-max 10 --format csv");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("T20,\"K_{2,2}\",4,3,fail"), std::string::npos) << r.out;
}

TEST(Verify, UsageErrors) {
    EXPECT_EQ(run("verify T99").status, 2);
    EXPECT_EQ(run("verify T2 --n-max 40").status, 2);
    EXPECT_EQ(run("verify T2 --format xml").status, 2);
}

TEST(Survey, StdinRows) {
    const auto r = run_with_input("survey --stdin --format csv", "Bw\nC~\n");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("survey_small.csv"));
}

TEST(Generate, DeterministicSeed) {
    EXPECT_EQ(run("generate random --n 9 --count 4").out, run("generate random --n 9 --count 4 --seed 20240611").out);
    EXPECT_NE(run("generate random --n 9 --count 4 --seed 1").out, run("generate random --n 9 --count 4").out);
    const auto all = run("generate all --n 5 --connected");
    EXPECT_EQ(std::count(all.out.begin(), all.out.end(), '\n'), 21);
}

}  // namespace
