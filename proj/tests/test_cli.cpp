#include <doctest.h>

#include "jagged/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int status = jagged::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("enumerate lists the 01-partitions of 3")
{
    const auto r = call({"enumerate", "--family", "01", "--weight", "3"});
    CHECK(r.status == 0);
    const std::vector<std::string> expected = {"(0,1,0,1,0,1)", "(1,0,1,0,1)", "(1,1,0,1)", "(1,1,1)",
                                               "(1,2)",         "(2,0,1)",     "(2,1)",     "(3)"};
    CHECK(lines(r.out) == expected);

    const auto j = json::parse(call({"enumerate", "--weight", "3", "--format", "json"}).out);
    CHECK(j["count"] == 8);
    CHECK(j["partitions"][0] == json::array({0, 1, 0, 1, 0, 1}));

    const auto five = call({"enumerate", "--family", "02", "--weight", "9", "--length", "5"});
    CHECK(lines(five.out).size() == 7);
    CHECK(lines(call({"enumerate", "--family", "d1:1,d2:0;tail=1", "--weight", "3"}).out) == expected);
}

TEST_CASE("congruence exit codes")
{
    CHECK(call({"congruence", "--r", "8", "--s", "7", "--modulus", "64", "--upto", "500"}).status == 0);

    const auto fail = call({"congruence", "--r", "8", "--s", "7", "--modulus", "128", "--upto", "500", "--format", "json"});
    CHECK(fail.status == 1);
    const auto doc = json::parse(fail.out);
    CHECK(doc["status"] == "fail");
    CHECK(doc["counterexample"]["n"] == 7);
    CHECK(doc["counterexample"]["j"] == "64");

    const auto predicted = json::parse(call({"congruence", "--r", "7", "--s", "5", "--upto", "300", "--format", "json"}).out);
    CHECK(predicted["prediction"]["modulus"] == "8");
    CHECK(predicted["status"] == "pass");
    CHECK(call({"congruence", "--r", "1", "--s", "0", "--modulus", "2", "--upto", "300", "--min-index", "2"}).status == 0);
}

TEST_CASE("identity reports")
{
    const auto r = call({"identity", "--name", "eq48", "--order", "100", "--format", "json"});
    CHECK(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["mismatch"].is_null());
    CHECK(doc["order"] == 100);

    const auto group = json::parse(call({"identity", "--name", "eq18", "--order", "30", "--format", "json"}).out);
    CHECK(group["status"] == "pass");
    CHECK(group["entries"].size() == 9);

    const auto text = call({"identity", "--name", "eq97"});
    CHECK(text.out.rfind("PASS eq97 (order 100)", 0) == 0);
}

TEST_CASE("text and JSON carry the same values")
{
    const auto text = lines(call({"count", "--upto", "30"}).out);
    const auto doc = json::parse(call({"count", "--upto", "30", "--format", "json"}).out);
    REQUIRE(text.size() == 31);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(text[n] == std::to_string(n) + " " + doc["j"][n].get<std::string>());
    CHECK(doc["j"][15] == "1472");

    // Big integers stay exact strings.
    const auto big = json::parse(call({"count", "--upto", "500", "--format", "json"}).out);
    CHECK(big["j"][500].is_string());
    CHECK(big["j"][500].get<std::string>().size() > 20);

    const auto slice_text = call({"slice", "--r", "8", "--s", "7", "--order", "5"}).out;
    const auto slice_doc = json::parse(call({"slice", "--r", "8", "--s", "7", "--order", "5", "--format", "json"}).out);
    CHECK(slice_text == "64 1472 17728 150144 1008448\n");
    CHECK(slice_doc["coefficients"] == json::array({"64", "1472", "17728", "150144", "1008448"}));

    const auto squares = json::parse(call({"count", "--weight", "15", "--format", "json"}).out);
    CHECK(squares["j"] == "1472");
    CHECK(squares["squares"].size() == 6);
    CHECK(squares["squares"][0]["contribution"] == "-192");
}

TEST_CASE("generating function tables")
{
    const auto doc = json::parse(call({"genfun", "--family", "01", "--zmax", "7", "--order", "4", "--format", "json"}).out);
    json q3 = json::array();
    for (const auto& row : doc["rows"]) q3.push_back(row[3]);
    CHECK(q3 == json::array({"0", "1", "2", "2", "1", "1", "1", "0"}));

    for (const char* source : {"enumeration", "system"}) {
        const auto other = json::parse(
            call({"genfun", "--family", "01", "--zmax", "7", "--order", "4", "--source", source, "--format", "json"}).out);
        CHECK(other["rows"] == doc["rows"]);
    }

    const auto shifted =
        json::parse(call({"genfun", "--family", "02", "--staircase", "--zmax", "6", "--order", "25", "--format", "json"}).out);
    CHECK(shifted["rows"][5][24] == "7");
    const auto summed = json::parse(
        call({"genfun", "--source", "multisum", "--name", "restricted02", "--zmax", "6", "--order", "25", "--format",
              "json"})
            .out);
    CHECK(summed["rows"] == shifted["rows"]);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(call({}).status == 2);
    CHECK(call({"frobnicate"}).status == 2);
    CHECK(call({"enumerate"}).status == 2);
    CHECK(call({"enumerate", "--weight", "-1"}).status == 2);
    CHECK(call({"enumerate", "--weight", "3", "--family", "x9"}).status == 2);
    CHECK(call({"enumerate", "--weight", "3", "--format", "xml"}).status == 2);
    CHECK(call({"slice", "--r", "3", "--s", "3"}).status == 2);
    CHECK(call({"congruence", "--r", "8", "--s", "7", "--modulus", "zero", "--upto", "50"}).status == 2);
    CHECK(call({"identity", "--name", "eq999"}).status == 2);
    CHECK(call({"genfun", "--family", "0p1:3"}).status == 2);
    CHECK(call({"genfun", "--source", "multisum"}).status == 2);
    CHECK(call({"count"}).status == 2);

    const auto r = call({"enumerate", "--weight", "3", "--family", "x9"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    CHECK(call({"--help"}).status == 0);
}

TEST_CASE("--out writes the JSON report")
{
    const std::string path = "test_cli_report.json";
    std::remove(path.c_str());
    const auto r = call({"identity", "--name", "eq20", "--order", "20", "--out", path});
    CHECK(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto doc = json::parse(in);
    CHECK(doc["name"] == "eq20");
    CHECK(doc["status"] == "pass");
    std::remove(path.c_str());
}

TEST_CASE("suite status matches its report")
{
    const auto r = call({"suite", "--format", "json"});
    const auto doc = json::parse(r.out);
    CHECK(doc["criteria"].size() == 11);
    bool all = true;
    for (const auto& c : doc["criteria"]) all = all && c["status"] == "pass";
    CHECK(r.status == (all ? 0 : 1));
    CHECK(doc["status"] == (all ? "pass" : "fail"));
}
