#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = fuzzylab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

size_t count_lines(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("verify subcommand") {
    CliResult r = run({"verify", "--d", "2", "--lambda", "3"});
    CHECK(r.code == 0);
    // header comment + column header + six checks
    CHECK(count_lines(r.out) == 8);

    CHECK(run({"verify", "--d", "3", "--lambda", "2", "--k", "36"}).code == 0);
    CHECK(run({"verify", "--d", "3", "--lambda", "0"}).code == 2);
    CHECK(run({"verify", "--lambda", "2", "--badflag"}).code == 2);
    CHECK(run({"verify"}).code == 2);  // --lambda required

    // an unreachable tolerance turns pass into fail -> exit 1
    CHECK(run({"verify", "--d", "2", "--lambda", "3", "--suite", "so3", "--tol", "1e-30"}).code == 1);

    CliResult j = run({"verify", "--d", "3", "--lambda", "2", "--suite", "all", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"all_pass\": true") != std::string::npos);
    CHECK(j.out.find("\"check_name\"") != std::string::npos);
}

TEST_CASE("spectrum values") {
    CliResult r = run({"spectrum", "--d", "3", "--lambda", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Hbar,0,1\n") != std::string::npos);
    CHECK(r.out.find("Hbar,2,3\n") != std::string::npos);
    CHECK(r.out.find("Hbar,6,5\n") != std::string::npos);

    CliResult d2 = run({"spectrum", "--d", "2", "--lambda", "2"});
    CHECK(d2.out.find("Hbar,0,1\n") != std::string::npos);
    CHECK(d2.out.find("Hbar,1,2\n") != std::string::npos);
    CHECK(d2.out.find("Hbar,4,2\n") != std::string::npos);
}

TEST_CASE("converge sweep and witness") {
    CliResult sweep = run({"converge", "--d", "2", "--lambda", "6", "--lambda-min", "2",
                           "--schedule", "prop-circle"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("lambda,k,error,bound,pass\n") != std::string::npos);
    CHECK(count_lines(sweep.out) == 2 + 5);

    CliResult wit = run({"converge", "--d", "2", "--lambda", "3", "--witness"});
    CHECK(wit.code == 0);
    CHECK(wit.out.find("circle,3,1,") != std::string::npos);
    CHECK(wit.out.find("sphere-xpm,3,") != std::string::npos);
    CHECK(wit.out.find("sphere-x0,3,") != std::string::npos);
}

TEST_CASE("oracle sweeps") {
    CliResult cl = run({"oracle", "--check", "cl"});
    CHECK(cl.code == 0);
    CHECK(cl.out.find("slope:cl") != std::string::npos);

    CliResult ml = run({"oracle", "--check", "ml"});
    CHECK(ml.code == 0);
    CHECK(ml.out.find("slope:ml") != std::string::npos);

    CliResult allchecks = run({"oracle", "--check", "all", "--d", "3"});
    CHECK(allchecks.code == 0);

    CliResult tail = run({"oracle", "--check", "tail"});
    CHECK(tail.code == 0);
    CHECK(count_lines(tail.out) == 2 + 5);

    CHECK(run({"oracle", "--check", "nonsense"}).code == 2);
}

TEST_CASE("dump schemas") {
    CliResult ladders = run({"dump", "--d", "3", "--lambda", "1", "--what", "ladders"});
    CHECK(ladders.code == 0);
    CHECK(ladders.out.find("a,l,m,A,B\n") != std::string::npos);

    CliResult op = run({"dump", "--d", "2", "--lambda", "1", "--k", "4", "--what", "circle-op",
                        "--op", "xi+"});
    CHECK(op.code == 0);
    CHECK(op.out.find("row,col,re,im\n") != std::string::npos);
    CHECK(op.out.find("1,0,0.70710678118654746,0\n") != std::string::npos);

    CliResult yhat = run({"dump", "--d", "3", "--lambda", "1", "--what", "yhat"});
    CHECK(yhat.code == 0);
    CHECK(yhat.out.find("l,m,row,col,re,im\n") != std::string::npos);

    CHECK(run({"dump", "--d", "2", "--lambda", "1", "--what", "circle-op", "--op", "zz"}).code == 2);
}

TEST_CASE("identical config gives byte-identical output across thread counts") {
    const std::vector<std::vector<std::string>> determinism_cases{
        {"converge", "--d", "2", "--lambda", "8", "--lambda-min", "2", "--schedule",
         "prop-circle"},
        {"oracle", "--check", "cl"},
        {"spectrum", "--d", "3", "--lambda", "3"}};
    for (const auto& base : determinism_cases) {
        std::vector<std::string> one = base, many = base;
        one.insert(one.end(), {"--threads", "1"});
        many.insert(many.end(), {"--threads", "7"});
        const CliResult a = run(one);
        const CliResult b = run(many);
        const CliResult c = run(one);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}
