#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "splitpoly/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = splitpoly::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
    const auto r = call(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("equation for n = 5") {
    const auto j = call_json({"equation", "--n", "5", "--component", "odd"});
    CHECK(j["coefficients"] == json::array({"15", "-13", "-3", "1"}));
    CHECK(j["matches_product"] == true);
    CHECK(j["command"] == "equation --n 5 --component odd");
}

TEST_CASE("even equations and sigma form") {
    const auto b = call_json({"equation", "--n", "8", "--component", "B"});
    CHECK(b["coefficients"] == json::array({"448", "-16", "-28", "1"}));
    const auto p = call_json({"equation", "--n", "8", "--component", "P"});
    CHECK(p["coefficients"] == json::array({"-28", "12", "1"}));
    const auto four = call_json({"equation", "--n", "4", "--component", "B"});
    CHECK(four["source"] == "product");
    CHECK(four["roots"] == json::array({"-2", "6"}));
    const auto s = call_json({"equation", "--n", "8", "--sigma"});
    CHECK(s["at_sigma_plus"] == b["coefficients"]);
    CHECK(s["consistent"] == true);
}

TEST_CASE("dims for n = 8") {
    const auto j = call_json({"dims", "--n", "8", "--symbolic"});
    CHECK(j["dims"]["d_2"] == json({{"gx", "15"}, {"gy", "-64"}, {"c", "0"}}));
    CHECK(j["status"] == "pass");
    const auto v = call_json({"dims", "--n", "9", "--gx", "20", "--gy", "1"});
    CHECK(v["values"]["d_1"] == "665");
    CHECK(v["values"]["d_9"] == "1");
}

TEST_CASE("csv output") {
    const auto r = call({"krawtchouk", "--n", "8", "--k", "6", "--ell", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,k,ell,value\n8,6,3,2\n");
    const auto d = call({"dims", "--n", "5", "--format", "csv"});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("label,component,eigenvalue,gx,gy,c\n", 0) == 0);
}

TEST_CASE("krawtchouk table") {
    const auto j = call_json({"krawtchouk", "--n", "4"});
    CHECK(j["table"].size() == 25);
    const auto one = call_json({"krawtchouk", "--n", "6", "--k", "4", "--ell", "2"});
    CHECK(one["value"] == "-1");
}

TEST_CASE("spectrum, tridiag and covering") {
    const auto s = call_json({"spectrum", "--n", "8", "--k", "6", "--subspace", "+e"});
    CHECK(s["dimension"] == 3);
    CHECK(s["minimal"] == json::array({"448", "-16", "-28", "1"}));
    const auto t = call_json({"tridiag", "--n", "3"});
    CHECK(t["determinant"] == json::array({"-3", "-2", "1"}));
    CHECK(t["status"] == "pass");
    const auto c1 = call({"covering", "--n", "4", "--branches", "8", "--seed", "1"});
    const auto c2 = call({"covering", "--n", "4", "--branches", "8", "--seed", "1"});
    CHECK(c1.code == 0);
    CHECK(c1.out == c2.out);
    const auto c = json::parse(c1.out);
    CHECK(c["orbits"]["liftings"] == 2);
    CHECK(c["two_cycles_per_branch"][0] == "4");
}

TEST_CASE("verify sweep") {
    const auto r = call({"verify", "--n-from", "3", "--n-to", "6", "--suite", "all", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["counts"]["fail"] == 0);
    CHECK(j["records"].size() > 50);
    const auto again = call({"verify", "--n-from", "3", "--n-to", "6", "--suite", "all", "--format", "json"});
    CHECK(again.out == r.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"bogus"}).code == 2);
    CHECK(call({"equation"}).code == 2);
    CHECK(call({"equation", "--n", "5", "--component", "B"}).code == 2);
    CHECK(call({"equation", "--n", "6", "--component", "odd"}).code == 2);
    CHECK(call({"spectrum", "--n", "7", "--k", "3", "--subspace", "e"}).code == 2);
    CHECK(call({"spectrum", "--n", "7", "--k", "2", "--subspace", "q"}).code == 2);
    CHECK(call({"dims", "--n", "11"}).code == 2);
    CHECK(call({"dims", "--n", "8", "--gx", "3"}).code == 2);
    CHECK(call({"tridiag", "--n", "4"}).code == 2);
    CHECK(call({"tridiag", "--n", "5", "--format", "csv"}).code == 2);
    CHECK(call({"verify", "--n-from", "5", "--n-to", "3"}).code == 2);
    CHECK(call({"verify", "--n-from", "3", "--n-to", "4", "--suite", "nope"}).code == 2);
    const auto r = call({"covering", "--n", "4", "--branches", "3", "--seed", "1"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
}

TEST_CASE("help exits cleanly") {
    const auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
}
