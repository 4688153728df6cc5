#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "semihom/io.hpp"
#include "semihom/oracle.hpp"

using namespace semihom;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    static fs::path dir = [] {
        // ctest runs each case in its own process, possibly in parallel.
        auto d = fs::temp_directory_path() / ("semihom_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, const std::string& out_name = "stdout.txt") {
    std::string cmd = std::string(SEMIHOM_CLI_PATH) + " " + args + " > " + (scratch() / out_name).string() + " 2> " +
                      (scratch() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string write(const std::string& name, const std::string& text) {
    auto p = scratch() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string module_file(const std::string& name, const DiagramModule& x) { return write(name, dump_module(x)); }

std::string map_file(const std::string& name, const ModuleMap& f) {
    return write(name, dump_canonical(map_to_json(f)));
}

class RemoveScratch : public ::testing::Environment {
public:
    void TearDown() override { fs::remove_all(scratch()); }
};

const auto* const kRemoveScratch = ::testing::AddGlobalTestEnvironment(new RemoveScratch);

}  // namespace

TEST(Cli, CounterexampleSucceeds) {
    EXPECT_EQ(run("counterexample --format json"), 0);
    auto j = nlohmann::json::parse(slurp(scratch() / "stdout.txt"));
    EXPECT_EQ(j["format"], kReportFormat);
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(Cli, ValidateExitCodes) {
    auto good = module_file("good.json", representable(Kind::scube, 1, 3));
    EXPECT_EQ(run("validate --in " + good), 0);

    auto j = nlohmann::json::parse(dump_module(representable(Kind::ssimp, 2, 2)));
    j["actions"]["delta 0 1"][0][0] = "5";
    EXPECT_EQ(run("validate --in " + write("bad.json", j.dump())), 1);

    EXPECT_EQ(run("validate --in " + write("malformed.json", "{\"format\": ")), 2);
    EXPECT_EQ(run("validate --in " + (scratch() / "missing.json").string()), 2);
    EXPECT_EQ(run("no-such-command"), 2);
}

TEST(Cli, ConvertRoundTripsModules) {
    auto text = dump_module(induce(Functor::v, representable(Kind::aug_ssimp, 0, 3)).module);
    auto in = write("induced.json", text);
    auto out = (scratch() / "converted.json").string();
    EXPECT_EQ(run("convert --in " + in + " --to json --out " + out), 0);
    EXPECT_EQ(slurp(out), text);
    EXPECT_EQ(run("convert --in " + in + " --to text"), 0);
    EXPECT_NE(slurp(scratch() / "stdout.txt").find("cube 1 0 1:"), std::string::npos);
}

TEST(Cli, HomologyAndRestriction) {
    auto x = module_file("edge.json", representable(Kind::ssimp, 1, 3));
    EXPECT_EQ(run("homology --in " + x + " --format json"), 0);
    auto j = nlohmann::json::parse(slurp(scratch() / "stdout.txt"));
    EXPECT_EQ(j["degrees"][0]["degree"], 0);
    EXPECT_EQ(j["degrees"][0]["dim"], 1);
    EXPECT_EQ(j["degrees"][1]["dim"], 0);
    auto out = (scratch() / "restricted.json").string();
    EXPECT_EQ(run("restrict --in " + x + " --along u_delta --out " + out), 0);
    EXPECT_EQ(load_module(out).kind(), Kind::chain0);
}

TEST(Cli, WeqAndFibVerdicts) {
    auto x = representable(Kind::scube, 1, 3);
    auto y = representable(Kind::scube, 2, 3);
    EXPECT_EQ(run("weq --in " + map_file("id.json", identity_map(x))), 0);
    EXPECT_EQ(run("weq --in " + map_file("unit.json", unit_map(Functor::v, representable(Kind::aug_ssimp, 0, 4)))), 1);
    EXPECT_EQ(run("fib --in " + map_file("zero.json", zero_map(x, y))), 1);
    EXPECT_EQ(run("fib --in " + map_file("onto_zero.json", zero_map(x, DiagramModule::zero(Kind::scube, 3)))), 0);
}

TEST(Cli, BatteryArgumentsAndDeterminism) {
    EXPECT_EQ(run("battery --trunc 99"), 2);
    int a = run("battery --trunc 3 --seed 5 --threads 1 --format json", "battery1.json");
    int b = run("battery --trunc 3 --seed 5 --threads 2 --format json", "battery2.json");
    EXPECT_EQ(a, b);
    EXPECT_EQ(slurp(scratch() / "battery1.json"), slurp(scratch() / "battery2.json"));
    auto report = report_from_json(nlohmann::json::parse(slurp(scratch() / "battery1.json")));
    EXPECT_EQ(a, report.ok() ? 0 : 1);
}

TEST(Cli, CorpusWritesModules) {
    auto dir = scratch() / "corpus";
    EXPECT_EQ(run("corpus --trunc 3 --seed 2 --out " + dir.string()), 0);
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json")
            ++count;
    EXPECT_GT(count, 0u);
}
