#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qreuse/circuit.hpp"
#include "qreuse/verify.hpp"

namespace qreuse {
namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qreuse_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
    int status = std::system((std::string(QREUSE_BIN) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, const fs::path& tmp) {
    fs::path capture = tmp / "stdout.txt";
    int status = std::system((std::string(QREUSE_BIN) + " " + args + " > " +
                              capture.string() + " 2>/dev/null")
                                 .c_str());
    EXPECT_EQ(WEXITSTATUS(status), 0);
    std::ifstream in(capture);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

TEST(CliTest, CheckExitCodes) {
    TempDir tmp;
    fs::path qft = tmp.path / "qft4.json";
    fs::path bv = tmp.path / "bv5.json";
    ASSERT_EQ(run("generate qft --n 4 --out " + qft.string()), 0);
    ASSERT_EQ(run("generate bv --n 4 --out " + bv.string()), 0);
    EXPECT_EQ(run("check " + qft.string()), 1);  // irreducible
    EXPECT_EQ(run("check " + bv.string()), 0);   // reducible
    EXPECT_EQ(run("check " + (tmp.path / "missing.json").string()), 2);
    EXPECT_EQ(run("check --method reach " + bv.string()), 0);
    EXPECT_EQ(run("check --method bogus " + bv.string()), 2);
}

TEST(CliTest, GenerateCompileRoundTrip) {
    TempDir tmp;
    fs::path input = tmp.path / "simon2.json";
    fs::path output = tmp.path / "simon2_compiled.json";
    ASSERT_EQ(run("generate simon --n 2 --out " + input.string()), 0);
    ASSERT_EQ(run("compile --algo exact --out " + output.string() + " " + input.string()), 0);

    Circuit original = parse_circuit(slurp(input));
    Circuit compiled = parse_circuit(slurp(output));
    EXPECT_EQ(original.width(), 4);
    EXPECT_EQ(compiled.width(), 3);
    EXPECT_TRUE(compiled.is_valid_dynamic());
}

TEST(CliTest, CompileSummaryLine) {
    TempDir tmp;
    fs::path simon = tmp.path / "simon2.json";
    fs::path qft = tmp.path / "qft4.json";
    fs::path out = tmp.path / "out.json";
    ASSERT_EQ(run("generate simon --n 2 --out " + simon.string()), 0);
    ASSERT_EQ(run("generate qft --n 4 --out " + qft.string()), 0);

    std::string summary = run_capture(
        "compile --algo exact --out " + out.string() + " " + simon.string(), tmp.path);
    EXPECT_NE(summary.find("width 4 -> 3"), std::string::npos) << summary;
    EXPECT_NE(summary.find("optimal=yes"), std::string::npos);

    summary = run_capture(
        "compile --algo mrv --out " + out.string() + " " + qft.string(), tmp.path);
    EXPECT_NE(summary.find("width 4 -> 4"), std::string::npos) << summary;
    EXPECT_NE(summary.find("no candidate edges"), std::string::npos);
}

TEST(CliTest, CompileAlgorithms) {
    TempDir tmp;
    fs::path input = tmp.path / "linear.json";
    ASSERT_EQ(run("generate linear --n 6 --l 2 --out " + input.string()), 0);
    for (const char* algo : {"mrv", "greedy", "hybrid", "dckf", "exact"}) {
        EXPECT_EQ(run("compile --algo " + std::string(algo) + " --seed 1 " +
                      input.string()),
                  0)
            << algo;
    }
    EXPECT_EQ(run("compile --algo bogus " + input.string()), 2);
}

TEST(CliTest, BenchWritesCsv) {
    TempDir tmp;
    fs::path suite = tmp.path / "suite.json";
    fs::path csv = tmp.path / "out.csv";
    std::ofstream(suite) << R"({
      "circuits": [{"id": "bv4", "family": "bv", "params": {"n": 4}}],
      "algorithms": [{"algo": "mrv"}, {"algo": "dckf"}]
    })";
    ASSERT_EQ(run("bench " + suite.string() + " --out " + csv.string()), 0);
    std::string content = slurp(csv);
    EXPECT_NE(content.find("id,family,params"), std::string::npos);
    EXPECT_NE(content.find("bv4"), std::string::npos);
    // Two data rows plus version line and header.
    EXPECT_EQ(std::count(content.begin(), content.end(), '\n'), 4);
}

}  // namespace
}  // namespace qreuse
