#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "splitmeasure/io.hpp"

using namespace splitmeasure;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("measure command") {
    const auto r = run({"measure", "-n", "3", "-z", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "partition,class_size,value,decimal\n<3>,2,1/2,0.5\n\"<1,2>\",3,1/2,0.5\n<1^3>,1,0,0\n");
    const auto neg = run({"measure", "-n", "2", "-z", "-2"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("<2>,1,1/2") != std::string::npos);
    CHECK(neg.out.find("<1^2>,1,1/2") != std::string::npos);
    const auto filtered = run({"measure", "-n", "3", "-z", "2", "--type", "<3>"});
    CHECK(parse_csv(filtered.out).size() == 2);
    const auto json = run({"measure", "-n", "3", "-z", "5/2", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"z\": \"5/2\"") != std::string::npos);
    const auto pretty = run({"measure", "-n", "3", "-z", "2", "--format", "pretty"});
    CHECK(pretty.out.find("-----") != std::string::npos);
}

TEST_CASE("exit codes") {
    auto pole = run({"measure", "-n", "3", "-z", "1"});
    CHECK(pole.code == cli::domain);
    CHECK(pole.err.find("pole at z=1") != std::string::npos);
    CHECK(run({"measure", "-n", "3", "-z", "0"}).code == cli::domain);
    CHECK(run({"measure", "-n", "3", "-z", "1/x"}).code == cli::usage);
    CHECK(run({"measure", "-n", "3"}).code == cli::usage);
    CHECK(run({"measure", "-n", "3", "-z", "2", "--type", "<1^2,1>"}).code == cli::usage);
    CHECK(run({"measure", "-n", "3", "-z", "2", "--type", "<2>"}).code == cli::domain);
    CHECK(run({"measure", "-n", "3", "-z", "2", "--format", "xml"}).code == cli::usage);
    CHECK(run({"frobnicate"}).code == cli::usage);
    CHECK(run({}).code == cli::usage);
    CHECK(run({"--help"}).code == cli::ok);
    CHECK(run({"oracle", "-n", "3", "-p", "4"}).code == cli::domain);
    CHECK(run({"oracle", "-n", "3", "-q", "6"}).code == cli::domain);
    CHECK(run({"oracle", "-n", "3", "-q", "4", "-p", "2"}).code == cli::usage);
    CHECK(run({"oracle", "-n", "3"}).code == cli::usage);
    CHECK(run({"oracle", "-n", "9", "-p", "7", "--budget", "1000"}).code == cli::budget);
    CHECK(run({"box", "-n", "4", "-B", "100", "--primes", "2"}).code == cli::budget);
    CHECK(run({"box", "-n", "3", "-B", "0", "--primes", "2"}).code == cli::domain);
    CHECK(run({"box", "-n", "3", "-B", "5", "--primes", "2", "--sample", "10"}).code == cli::usage);
    CHECK(run({"curve", "-n", "3", "-p", "2", "-B", "10,400"}).code == cli::budget);
    CHECK(run({"cyclepoly"}).code == cli::usage);
    CHECK(run({"cyclepoly", "-n", "3", "--type", "<3>"}).code == cli::usage);
    CHECK(run({"necklace", "-m", "65"}).code == cli::usage);
    CHECK(run({"compare", "-n", "3", "-p", "9"}).code == cli::domain);
}

TEST_CASE("budget from the environment") {
    ::setenv(cli::kBudgetEnv, "1000", 1);
    CHECK(run({"oracle", "-n", "3", "-p", "11"}).code == cli::budget);
    CHECK(run({"oracle", "-n", "3", "-p", "11", "--budget", "2000"}).code == cli::ok);
    ::setenv(cli::kBudgetEnv, "lots", 1);
    CHECK(run({"oracle", "-n", "2", "-p", "2"}).code == cli::usage);
    ::unsetenv(cli::kBudgetEnv);
    CHECK(run({"oracle", "-n", "3", "-p", "11"}).code == cli::ok);
}

TEST_CASE("oracle command") {
    const auto r = run({"oracle", "-n", "3", "-p", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(r.out.find("nonsquarefree,4,4,MATCH") != std::string::npos);
    const auto q = run({"oracle", "-n", "3", "-q", "9"});
    CHECK(q.code == 0);
    CHECK(q.out == run({"oracle", "-n", "3", "-p", "3", "-f", "2"}).out);
}

TEST_CASE("vanishing and compare commands") {
    const auto v = run({"vanishing", "-n", "4"});
    CHECK(v.code == 0);
    const auto rows = parse_csv(v.out);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].back() == "yes");
    const auto c = run({"compare", "-n", "2", "-p", "3"});
    CHECK(c.code == 0);
    CHECK(c.out.find("ramification,,1/3,0.33333333333333333333,1/4,0.25") != std::string::npos);
}

TEST_CASE("box and curve commands") {
    const auto b = run({"box", "-n", "3", "-B", "64", "--primes", "2", "--type", "<3>"});
    CHECK(b.code == 0);
    CHECK(b.out.find("split_ratio,1/2,0.5") != std::string::npos);
    CHECK(b.out.find("split_deviation,0,0") != std::string::npos);
    const auto c = run({"curve", "-n", "2", "-p", "2", "-B", "2,4,8,16"});
    CHECK(c.code == 0);
    const auto rows = parse_csv(c.out);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][5] == "0");
}

TEST_CASE("necklace and cyclepoly commands") {
    const auto m = run({"necklace", "-m", "3", "-z", "2"});
    CHECK(m.code == 0);
    CHECK(m.out == "m,polynomial,value,decimal\n3,1/3*X^3 - 1/3*X,2,2\n");
    CHECK(parse_csv(run({"necklace", "-m", "6", "--upto"}).out).size() == 7);
    const auto c = run({"cyclepoly", "--type", "<1,2>"});
    CHECK(c.out == "partition,polynomial\n\"<1,2>\",1/2*X^3 - 1/2*X^2\n");
}

TEST_CASE("output is deterministic across runs and worker counts") {
    const std::vector<std::vector<std::string>> commands{
        {"oracle", "-n", "5", "-q", "4"},
        {"box", "-n", "3", "-B", "9", "--primes", "2,3", "--certify"},
        {"box", "-n", "3", "-B", "50", "--primes", "5", "--sample", "5000", "--seed", "17"},
        {"curve", "-n", "3", "-p", "3", "-B", "3,6,9", "--format", "json"},
    };
    for (auto cmd : commands) {
        auto one = cmd, many = cmd;
        one.insert(one.end(), {"--workers", "1"});
        many.insert(many.end(), {"--workers", "6"});
        const auto a = run(one), b = run(many), c = run(one);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "splitmeasure_cli_test.csv";
    const auto r = run({"measure", "-n", "4", "-z", "3", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == run({"measure", "-n", "4", "-z", "3"}).out);
    CHECK(write_csv(parse_csv(text)) == text);
    std::filesystem::remove(path);
    CHECK(run({"measure", "-n", "4", "-z", "3", "-o", "/nonexistent_dir/x.csv"}).code == cli::usage);
}
