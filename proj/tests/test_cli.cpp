#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// end-to-end checks against the built binary
namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MINIATURES_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

class TempJsonFile {
public:
    explicit TempJsonFile(const nlohmann::json& j) {
        path_ = std::filesystem::temp_directory_path() /
                ("miniatures_test_" + std::to_string(counter_++) + "_" +
                 std::to_string(::getpid()) + ".json");
        std::ofstream out(path_);
        out << j.dump();
    }
    ~TempJsonFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("cli census") {
    auto result = run_cli("census square --n 2 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "class,multiplicity,volume\n"
          "\"(1,0)\",4,1/4\n"
          "\"(1,1)\",1,1/2\n"
          "\"(2,0)\",1,1\n");

    SECTION("byte-identical across invocations") {
        CHECK(run_cli("census square --n 7 --format json").output ==
              run_cli("census square --n 7 --format json").output);
    }

    SECTION("simplex census with dimension") {
        auto simplex = run_cli("census simplex --d 2 --n 2 --format csv");
        CHECK(simplex.exit_code == 0);
        CHECK(simplex.output ==
              "class,multiplicity,volume\n"
              "1/2,3,1/8\n"
              "1,1,1/2\n");
    }
}

TEST_CASE("cli average") {
    auto result = run_cli("average square --n 2");
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.output);
    CHECK(j["n"] == 2);
    CHECK(j["count"] == "6");
    CHECK(j["volume_sum"] == "5/2");
    CHECK(j["average"] == "5/12");

    auto cube = nlohmann::json::parse(run_cli("average hypercube --d 2 --n 2").output);
    CHECK(cube["average"] == "2/5");
}

TEST_CASE("cli converge") {
    auto result = run_cli("converge --shape square-av --n 1,10,100,1000");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("n,value,limit,abs_error\n") == 0);
    // last row: exact error at n = 1000
    CHECK(result.output.find("1000,668003/5000000,2/15,4009/15000000\n") != std::string::npos);

    CHECK(run_cli("converge --shape simplex-nl --d 1 --n 10").output.find("10,2/5,1/3,1/15") !=
          std::string::npos);
}

TEST_CASE("cli verify") {
    CHECK(run_cli("verify --sums --max-n 60 --binomial-identity --max-d 25").exit_code == 0);
    CHECK(run_cli("verify --square-sweep --square-max-n 5").exit_code == 0);
    CHECK(run_cli("verify --simplex-numbers --reduction").exit_code == 0);
}

TEST_CASE("cli bruteforce diff") {
    CHECK(run_cli("bruteforce square --n 4 --diff").exit_code == 0);
    CHECK(run_cli("bruteforce simplex --d 2 --n 4 --diff").exit_code == 0);
    CHECK(run_cli("bruteforce hypercube --d 2 --n 3 --diff").exit_code == 0);

    SECTION("bruteforce output matches census output for the unit square") {
        CHECK(run_cli("bruteforce square --n 5 --format csv").output ==
              run_cli("census square --n 5 --format csv").output);
    }

    SECTION("a tilted host genuinely disagrees with the unit census") {
        TempJsonFile tilted(nlohmann::json{
            {"family", "square2d"}, {"dim", 2}, {"vertices", {{0, 0}, {2, 1}, {3, -1}, {1, -2}}}});
        auto result = run_cli("bruteforce --input " + tilted.path() + " --n 2 --diff");
        CHECK(result.exit_code == 1);
    }
}

TEST_CASE("cli reduce") {
    TempJsonFile big_square(nlohmann::json{
        {"family", "square2d"}, {"dim", 2}, {"vertices", {{0, 0}, {0, 2}, {2, 2}, {2, 0}}}});
    auto result = run_cli("reduce --input " + big_square.path());
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.output);
    CHECK(j["ratio"] == "1/2");
    CHECK(j["irreducible"] == false);
    CHECK(j["translates"].size() == 4);

    TempJsonFile tilted(nlohmann::json{
        {"family", "square2d"}, {"dim", 2}, {"vertices", {{0, 0}, {2, 1}, {3, -1}, {1, -2}}}});
    auto irr = nlohmann::json::parse(run_cli("reduce --input " + tilted.path()).output);
    CHECK(irr["ratio"] == "1");
    CHECK(irr["irreducible"] == true);
}

TEST_CASE("cli error handling") {
    CHECK(run_cli("census square").exit_code == 2);            // missing --n
    CHECK(run_cli("census dodecahedron --n 2").exit_code == 2);
    CHECK(run_cli("census square --n 0").exit_code == 2);
    CHECK(run_cli("reduce --input /nonexistent.json").exit_code == 2);
    CHECK(run_cli("converge --shape bogus --n 1,2").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli output file") {
    auto path = std::filesystem::temp_directory_path() /
                ("miniatures_out_" + std::to_string(::getpid()) + ".csv");
    auto result = run_cli("census square --n 2 --format csv -o " + path.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output.empty());
    std::ifstream in(path);
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contents.find("\"(1,0)\",4,1/4") != std::string::npos);
    std::filesystem::remove(path);
}
