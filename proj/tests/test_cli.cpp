#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gcode/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run gcf(std::vector<std::string> args) {
    args.insert(args.begin(), "gcf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = gcode::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("gcf_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and usage errors") {
    CHECK(gcf({"--help"}).code == 0);
    CHECK(gcf({"search", "--help"}).code == 0);
    CHECK(gcf({"classify", "--bogus"}).code == 2);
    CHECK(gcf({"rm-experiment", "-p", "2"}).code == 2);
}

TEST_CASE("library errors exit with status 1") {
    auto r = gcf({"classify", "--preset", "klein4", "--field", "GF(6)"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NonPrime") != std::string::npos);
}

TEST_CASE("classify prints the predicate") {
    auto r = gcf({"classify", "--preset", "klein4", "--field", "GF(2)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("code-checkable: false") != std::string::npos);
    r = gcf({"classify", "--preset", "c6", "--field", "GF(3)"});
    CHECK(r.out.find("code-checkable: true") != std::string::npos);
}

TEST_CASE("a zero code has no distance") {
    const auto file = temp_path("zero.code");
    auto b = gcf({"code", "build", "--preset", "s3", "--field", "GF(2)", "--element", "0", "--out",
                  file.string()});
    REQUIRE(b.code == 0);
    auto p = gcf({"code", "params", "--code", file.string()});
    CHECK(p.code == 0);
    CHECK(p.out.find("[6,0] d undefined (zero code)") != std::string::npos);
    std::filesystem::remove(file);
}

TEST_CASE("build, dual and check a code") {
    const auto file = temp_path("aug.code"), dual = temp_path("aug_dual.code");
    REQUIRE(gcf({"code", "build", "--preset", "klein4", "--field", "GF(2)", "--element", "1 + a",
                 "--out", file.string()})
                .code == 0);
    CHECK(gcf({"code", "dual", "--code", file.string(), "--out", dual.string()}).code == 0);
    auto d = gcf({"code", "distance", "--code", dual.string()});
    CHECK(d.code == 0);
    CHECK(gcf({"check", "--code", file.string()}).code == 0);
    std::filesystem::remove(file);
    std::filesystem::remove(dual);
}

TEST_CASE("search export honours the seed from the environment") {
    const auto a = temp_path("a.csv"), b = temp_path("b.csv"), c = temp_path("c.csv");
    ::setenv("GCF_SEED", "4242", 1);
    REQUIRE(gcf({"search", "--preset", "s3", "--field", "GF(3)", "--trials", "5", "--out",
                 a.string(), "--format", "csv"})
                .code == 0);
    REQUIRE(gcf({"search", "--preset", "s3", "--field", "GF(3)", "--trials", "5", "--out",
                 b.string(), "--format", "csv"})
                .code == 0);
    ::unsetenv("GCF_SEED");
    REQUIRE(gcf({"search", "--preset", "s3", "--field", "GF(3)", "--trials", "5", "--seed", "4242",
                 "--out", c.string(), "--format", "csv"})
                .code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));
    CHECK(slurp(a).find(",4242,") != std::string::npos);
    ::setenv("GCF_SEED", "abc", 1);
    CHECK(gcf({"search", "--preset", "s3", "--field", "GF(3)", "--trials", "1"}).code == 2);
    ::unsetenv("GCF_SEED");
    for (const auto& p : {a, b, c}) std::filesystem::remove(p);
}

TEST_CASE("reed-muller experiment command") {
    auto r = gcf({"rm-experiment", "-p", "2", "-m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("J^") != std::string::npos);
}

}
