#include "bellmoves/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace bellmoves;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
    const auto r = call({"count", "--variant", "Bprime", "--t", "4", "--n", "4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "4\n");
    const auto m = call({"count", "--variant", "B", "--t", "7", "--n", "4", "--method", "shuffle-dp"});
    CHECK(m.out == "715\n");
}

TEST_CASE("table csv") {
    const auto r = call({"table", "--variant", "B", "--t-max", "1", "--n-max", "1", "--csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "t,n,value\n0,0,1\n0,1,1\n1,0,0\n1,1,1\n");
}

TEST_CASE("verify") {
    CHECK(call({"verify", "--identity", "bernhart"}).code == cli::kExitOk);
    CHECK(call({"verify", "--identity", "type-d-sum-literal"}).code == cli::kExitFailed);
    const auto list = call({"verify", "--list"});
    CHECK(list.out.find("dagger-ddagger") != std::string::npos);
}

TEST_CASE("spectrum json") {
    const auto r = call({"spectrum", "--family", "A", "--n", "3", "--k", "1", "--json"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"pass\"") != std::string::npos);
}

TEST_CASE("rsk search") {
    const auto r = call({"rsk", "search", "--n", "3", "--trajectory", "(3),(2,1),(3)"});
    CHECK(r.out.find("1 sequences") != std::string::npos);
    CHECK(r.out.find("1 move paths") != std::string::npos);
}

TEST_CASE("suite single criterion") {
    const auto r = call({"suite", "--criterion", "12"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("[PASS] 12") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(call({"nope"}).code == cli::kExitUsage);
    CHECK(call({"count", "--variant", "C", "--t", "2", "--n", "2"}).code == cli::kExitUsage);
    CHECK(call({"count", "--variant", "B", "--t", "13", "--n", "2", "--method", "enumeration"}).code == cli::kExitUsage);
    CHECK(call({}).code == cli::kExitUsage);
}
