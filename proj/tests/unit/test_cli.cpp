#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../golden_arrays.hpp"
#include "oafrac/cli.hpp"
#include "test_support.hpp"

using namespace oafrac;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("oafrac_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    f << content;
}

}  // namespace

TEST_CASE("bounds command") {
    CliResult r = cli({"bounds", "8", "12", "18", "27"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("d = 3") != std::string::npos);
    CHECK(r.out.find("L_1 = 216") != std::string::npos);
    CHECK(r.out.find("L_3 = 46656") != std::string::npos);

    r = cli({"bounds", "2", "3", "5", "6", "10", "15"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("d = 3") != std::string::npos);
    CHECK(r.out.find("strength 3: no proper fraction") != std::string::npos);

    r = cli({"bounds", "2", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("L_1 = 2") != std::string::npos);
    CHECK(r.out.find("L_2 = 4") != std::string::npos);
    CHECK(r.out.find("d = 2") != std::string::npos);

    CHECK(cli({"bounds", "2", "x"}).code == kExitUsage);
    CHECK(cli({"bounds", "2", "1"}).code == kExitUsage);
    CHECK(cli({"bounds"}).code == kExitUsage);
}

TEST_CASE("construct command prints the array with a verification footer") {
    CliResult r = cli({"construct", "6", "2", "2", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.substr(0, std::string(golden::k6x2x2x2_built).size()) == golden::k6x2x2x2_built);
    CHECK(r.out.find("# strength 3: pass") != std::string::npos);
    CHECK(r.out.find("# conjugacy: pass") != std::string::npos);
    CHECK(r.out.find("fraction 1/2") != std::string::npos);

    r = cli({"construct", "6", "5", "5"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("gcd") != std::string::npos);
}

TEST_CASE("construct writes files with a json mirror") {
    TempDir tmp;
    fs::path out_file = tmp.path / "quarter.txt";
    CliResult r = cli({"construct", "8", "4", "4", "--output", out_file.string()});
    CHECK(r.code == kExitOk);
    REQUIRE(fs::exists(out_file));
    REQUIRE(fs::exists(tmp.path / "quarter.json"));

    std::ifstream in(out_file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().substr(0, std::string(golden::k8x4x4_built).size()) == golden::k8x4x4_built);

    // the emitted file parses back through verify
    CliResult v = cli({"verify", out_file.string(), "--strength", "2"});
    CHECK(v.code == kExitOk);

    // a .json output path must not collide with its mirror
    fs::path json_out = tmp.path / "direct.json";
    CHECK(cli({"construct", "8", "2", "2", "--output", json_out.string()}).code == kExitOk);
    CHECK(fs::exists(json_out));
    CHECK(fs::exists(tmp.path / "direct.json.json"));
}

TEST_CASE("construct row-1 ordering override") {
    CliResult r = cli({"construct", "6", "3", "3", "--row1-ordering", "first"});
    // the alternate listing may or may not keep the conjugacy property;
    // the command must still produce the array and report what it found
    CHECK((r.code == kExitOk || r.code == kExitVerifyFailed));
    CHECK(r.out.find("S3 Z3 Z3") != std::string::npos);
    CHECK(cli({"construct", "8", "2", "2", "--row1-ordering", "second"}).code == kExitUsage);
}

TEST_CASE("verify command") {
    TempDir tmp;
    fs::path file = tmp.path / "classic.txt";
    write(file, golden::k3x12_strength2);

    CliResult pass = cli({"verify", file.string(), "--strength", "2"});
    CHECK(pass.code == kExitOk);
    CHECK(pass.out.find("strength 2: pass") != std::string::npos);
    CHECK(pass.out.find("max strength: 2") != std::string::npos);

    CliResult fail = cli({"verify", file.string(), "--strength", "3"});
    CHECK(fail.code == kExitVerifyFailed);
    CHECK(fail.out.find("strength 3: FAIL") != std::string::npos);

    fs::path half = tmp.path / "half.txt";
    write(half, golden::k8x2x2);
    CliResult conj = cli({"verify", half.string(), "--strength", "2", "--groups", "D4", "Z2", "Z2"});
    CHECK(conj.code == kExitOk);
    CHECK(conj.out.find("conjugacy: pass") != std::string::npos);

    fs::path bad = tmp.path / "bad.txt";
    write(bad, "2 4\nZ2 Z2\n0 0 1 1\n0 1 0\n");
    CliResult parse_fail = cli({"verify", bad.string(), "--strength", "1"});
    CHECK(parse_fail.code == kExitUsage);
    CHECK(parse_fail.err.find("line 4") != std::string::npos);

    CHECK(cli({"verify", (tmp.path / "missing.txt").string()}).code == kExitUsage);
}

TEST_CASE("catalog command materializes all designs") {
    TempDir tmp;
    fs::path dir = tmp.path / "catalog";
    CliResult r = cli({"catalog", "--output", dir.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("31 designs verified") != std::string::npos);
    CHECK(r.out.find("10x6x6x6") != std::string::npos);

    size_t txt = 0, json = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".txt") ++txt;
        if (entry.path().extension() == ".json") ++json;
    }
    CHECK(txt == 32);   // 31 arrays + summary.txt
    CHECK(json == 32);  // 31 mirrors + summary.json

    // an emitted file round-trips through verify with its conjugacy groups
    CliResult v = cli({"verify", (dir / "6x3x3.txt").string(), "--strength", "2", "--groups",
                       "S3b", "Z3", "Z3"});
    CHECK(v.code == kExitOk);
}

TEST_CASE("search command") {
    CliResult r = cli({"search", "3", "2", "2", "--size", "12", "--strength", "2",
                       "--exclude-complete"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("found 1") != std::string::npos);

    r = cli({"search", "2", "2", "--size", "4", "--strength", "2", "--exclude-complete"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("found 0") != std::string::npos);
    CHECK(r.out.find("exhausted yes") != std::string::npos);

    r = cli({"search", "2", "2", "2", "--size", "4", "--strength", "2", "--limit", "0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("found 2") != std::string::npos);

    r = cli({"search", "6", "6", "6", "6", "--size", "36", "--strength", "2"});
    CHECK(r.code == kExitInconclusive);
    CHECK(r.out.find("exhausted no") != std::string::npos);

    r = cli({"search", "3", "2", "2", "--strength", "2", "--uniqueness"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("not unique") != std::string::npos);

    r = cli({"search", "2", "2", "--strength", "2", "--uniqueness"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find(": unique") != std::string::npos);

    CHECK(cli({"search", "3", "2", "2", "--strength", "2"}).code == kExitUsage);  // no --size
}

TEST_CASE("budget precedence: flag > config > environment > default") {
    TempDir tmp;
    fs::path config = tmp.path / "limits.conf";
    write(config, "# limits\nbudget = 100\n");

    std::vector<std::string> base{"search", "6", "6", "6", "6", "--size", "36", "--strength", "2"};

    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return cli(args);
    };

    CliResult from_config = with({"--config", config.string()});
    CHECK(from_config.code == kExitInconclusive);
    CHECK(from_config.out.find("explored 100 ") != std::string::npos);

    setenv("OAFRAC_BUDGET", "250", 1);
    CliResult from_env = with({});
    CHECK(from_env.out.find("explored 250 ") != std::string::npos);

    CliResult config_beats_env = with({"--config", config.string()});
    CHECK(config_beats_env.out.find("explored 100 ") != std::string::npos);

    CliResult flag_beats_all = with({"--config", config.string(), "--budget", "60"});
    CHECK(flag_beats_all.out.find("explored 60 ") != std::string::npos);
    unsetenv("OAFRAC_BUDGET");

    write(tmp.path / "bad.conf", "budget: 5\n");
    CHECK(with({"--config", (tmp.path / "bad.conf").string()}).code == kExitUsage);
    write(tmp.path / "unknown.conf", "fuel = 5\n");
    CHECK(with({"--config", (tmp.path / "unknown.conf").string()}).code == kExitUsage);
}

TEST_CASE("top-level usage") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"search", "--help"}).code == 0);
    CliResult version = cli({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("oafrac") != std::string::npos);
}

TEST_CASE("uniqueness probe through the CLI") {
    // strength k at size L_k: the complete design is forced (every run
    // exactly once), so excluding it exhausts quickly
    CliResult unique = cli({"search", "6", "6", "6", "6", "--strength", "4", "--uniqueness"});
    CHECK(unique.code == kExitOk);
    CHECK(unique.out.find(": unique") != std::string::npos);

    // a starved budget turns the same probe inconclusive, with exit code 3
    CliResult starved = cli({"search", "6", "6", "6", "6", "--strength", "4", "--uniqueness",
                             "--budget", "50"});
    CHECK(starved.code == kExitInconclusive);
    CHECK(starved.out.find("inconclusive") != std::string::npos);

    CliResult below_d = cli({"search", "6", "6", "6", "6", "--strength", "2", "--uniqueness"});
    CHECK(below_d.code == kExitUsage);
}

TEST_CASE("verify with no requested checks still reports the max strength") {
    TempDir tmp;
    fs::path file = tmp.path / "plain.txt";
    write(file, golden::k8x2x2);
    CliResult r = cli({"verify", file.string()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("max strength: 2") != std::string::npos);
}
