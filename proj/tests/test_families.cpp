#include <doctest.h>

#include "jagged/families.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace jagged;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<JaggedPartition>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.parts);
    return out;
}

std::vector<int> digits(const std::string& s)
{
    std::vector<int> d;
    for (char c : s) d.push_back(c - '0');
    return d;
}

std::vector<std::pair<int, int>> as_pairs(const FamilySpec& f)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& c : f.constraints()) out.emplace_back(c.distance, c.slack);
    return out;
}

}  // namespace

TEST_CASE("built-in families carry their defining constraints")
{
    CHECK(family_01().constraints() == std::vector<Constraint>{{1, 1}, {2, 0}});
    CHECK(family_01().tail_min() == 1);
    CHECK(family_02().constraints() == std::vector<Constraint>{{1, 2}, {2, 0}});
    CHECK(family_02().tail_min() == 2);
    CHECK(family_012().constraints() == std::vector<Constraint>{{1, 1}, {2, 2}, {3, 0}});
    CHECK(family_012().tail_min() == 2);
    CHECK(family_001().constraints() == std::vector<Constraint>{{1, 1}, {2, 1}, {3, 0}});
    CHECK(family_0p1(4).constraints() == std::vector<Constraint>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 0}});

    CHECK(family_02().staircase().slope == 2);
    CHECK(family_02().staircase().offset == -1);
    CHECK(family_012().staircase().offset == -1);
    CHECK(family_01().staircase().weight(5) == 10);
    CHECK(family_02().staircase().weight(5) == 15);
    CHECK(family_012().staircase().weight(5) == 5);
    CHECK(family_001().staircase().weight(4) == 6);
}

TEST_CASE("family spec parsing")
{
    CHECK(parse_family("01").constraints() == family_01().constraints());
    CHECK(parse_family("0p1:3").constraints() == family_0p1(3).constraints());
    const auto custom = parse_family("d1:1,d2:0;tail=1");
    CHECK(custom.constraints() == family_01().constraints());
    CHECK(custom.tail_min() == 1);
    CHECK(parse_family("d1:2,d2:0;tail=2").staircase().slope == 2);

    CHECK_THROWS_AS(parse_family("d1:1"), std::invalid_argument);  // nothing anchors growth
    CHECK_THROWS_AS(parse_family("x1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("d1:0;tail=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("d1:0;foo=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("d0:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("0p1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("d1:a"), std::invalid_argument);
}

TEST_CASE("validity checks")
{
    const auto f01 = family_01();
    CHECK(is_valid(f01, {{1, 2, 1, 0, 1}}));
    CHECK(is_valid(f01, {{0, 1, 0, 1}}));
    CHECK_FALSE(is_valid(f01, {{1, 0, 0, 1}}));
    CHECK_FALSE(is_valid(f01, {{}}));
    CHECK_FALSE(is_valid(f01, {{1, 0}}));
    CHECK(is_valid(family_02(), {{3, 1, 2, 1, 2}}));
    CHECK_FALSE(is_valid(family_02(), {{3, 1, 2, 1, 1}}));
}

TEST_CASE("length-5 01-partitions of weight at most 7")
{
    const std::vector<std::string> golden = {"10101", "20101", "11101", "30101", "21101", "11111",
                                             "12101", "40101", "31101", "22101", "21111", "12111",
                                             "21201", "50101", "41101", "32101", "31111", "22111",
                                             "23101", "21211", "12121", "31201", "22201"};
    std::set<std::vector<int>> expected;
    for (const auto& s : golden) expected.insert(digits(s));

    std::set<std::vector<int>> got;
    for (long n = 0; n <= 7; ++n)
        for (const auto& p : enumerate(family_01(), n, 5)) got.insert(p.parts);
    CHECK(got.size() == 23);
    CHECK(got == expected);
}

TEST_CASE("02-partitions of weight 9 and length 5")
{
    const std::vector<std::vector<int>> expected = {digits("22212"), digits("23202"), digits("31212"),
                                                    digits("31302"), digits("32202"), digits("41202"),
                                                    digits("50202")};
    CHECK(parts_of(enumerate(family_02(), 9, 5)) == expected);
}

TEST_CASE("01-partitions of weight 3")
{
    const std::vector<std::vector<int>> expected = {digits("010101"), digits("10101"), digits("1101"), digits("111"),
                                                    digits("12"),     digits("201"),   digits("21"),   digits("3")};
    CHECK(parts_of(enumerate(family_01(), 3)) == expected);
    CHECK(enumerate(family_01(), 0).empty());
    CHECK(enumerate(family_01(), 3, 0).empty());
}

TEST_CASE("enumeration agrees with filtering every weak composition")
{
    for (const auto& f : {family_01(), family_02(), family_012(), family_001(), family_0p1(3)}) {
        const auto constraints = as_pairs(f);
        for (int n = 1; n <= 7; ++n) {
            const int longest = static_cast<int>(max_length(f, n));
            for (int m = 1; m <= longest + 2; ++m) {
                const auto brute = oracle::jagged_by_filter(constraints, f.tail_min(), n, m);
                CHECK(parts_of(enumerate(f, n, m)) == brute);
                if (m > longest) CHECK(brute.empty());
            }
        }
    }
}

TEST_CASE("maximum length")
{
    const auto f01 = family_01();
    CHECK(max_length(f01, 0) == 0);
    CHECK(max_length(f01, 1) == 2);
    CHECK(max_length(f01, 2) == 4);
    CHECK(enumerate(f01, 2, 4).size() == 1);
    CHECK(enumerate(f01, 2, 4)[0].parts == std::vector<int>{0, 1, 0, 1});
    for (int n = 1; n <= 12; ++n) {
        CHECK(max_length(f01, n) == static_cast<std::size_t>(2 * n));
        CHECK(max_length(family_0p1(3), n) == static_cast<std::size_t>(4 * n));
        CHECK(max_length(family_02(), n) <= static_cast<std::size_t>(n + 2));
        CHECK(max_length(family_012(), n) <= static_cast<std::size_t>(n + 2));
    }
    CHECK(max_length(family_02(), 2) == 2);
    CHECK(max_length(family_02(), 1) == 0);
    CHECK(enumerate(family_02(), 2, 2)[0].parts == std::vector<int>{0, 2});
}

TEST_CASE("enumeration output is sorted and duplicate free")
{
    for (const auto& f : {family_01(), family_02(), family_012(), family_001()}) {
        for (long n = 1; n <= 12; ++n) {
            const auto all = enumerate(f, n);
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const auto& p : all) {
                CHECK(is_valid(f, p));
                CHECK(p.weight() == n);
            }
        }
    }
}

TEST_CASE("0^1 1-partitions are the 01-partitions")
{
    for (long n = 1; n <= 15; ++n) CHECK(enumerate(family_0p1(1), n) == enumerate(family_01(), n));
}

TEST_CASE("staircase map")
{
    CHECK(staircase_map(family_01(), {{0, 1, 0, 1}}).parts == std::vector<int>{3, 3, 1, 1});
    CHECK(staircase_map(family_02(), {{5, 0, 2, 0, 2}}).parts == std::vector<int>{12, 5, 5, 1, 1});
    CHECK(staircase_map(family_01(), {{1}}).parts == std::vector<int>{1});
    CHECK_THROWS_AS(staircase_map(family_01(), {{1, 0, 0, 1}}), std::invalid_argument);

    const auto lambda = staircase_map(family_02(), {{5, 0, 2, 0, 2}});
    for (std::size_t i = 0; i + 2 < lambda.length(); ++i) CHECK(lambda.parts[i] >= lambda.parts[i + 2] + 4);
}

TEST_CASE("restricted conditions of each family")
{
    CHECK(restricted_conditions(family_01()) == std::vector<Gap>{{1, 0}, {2, 2}});
    CHECK(restricted_conditions(family_02()) == std::vector<Gap>{{1, 0}, {2, 4}});
    CHECK(restricted_conditions(family_012()) == std::vector<Gap>{{1, 0}, {2, 0}, {3, 3}});
    CHECK(restricted_conditions(family_001()) == std::vector<Gap>{{1, 0}, {2, 1}, {3, 3}});
}

TEST_CASE("restricted partition enumeration")
{
    const std::vector<Partition> two_parts{{{2, 2}}, {{3, 1}}};
    CHECK(enumerate_restricted({{2, 2}}, 4, 2) == two_parts);
    CHECK(enumerate_restricted({{1, 0}}, 4, 2) == two_parts);
    CHECK(enumerate_restricted({{2, 4}}, 24, 5).size() == 7);
    CHECK(enumerate_restricted({}, 0, 0).size() == 1);
    CHECK(enumerate_restricted({}, 3, 0).empty());

    // Brute force over all partitions of 24 into 5 parts.
    std::size_t brute = 0;
    oracle::weak_compositions(24, 5, [&](const std::vector<int>& p) {
        for (std::size_t i = 0; i < 5; ++i) {
            if (p[i] < 1) return;
            if (i + 1 < 5 && p[i] < p[i + 1]) return;
            if (i + 2 < 5 && p[i] < p[i + 2] + 4) return;
        }
        ++brute;
    });
    CHECK(brute == 7);
}

TEST_CASE("staircase map is a bijection onto the restricted partitions")
{
    for (const auto& f : {family_01(), family_02(), family_012(), family_001()}) {
        const auto conditions = restricted_conditions(f);
        for (long n = 1; n <= 20; ++n) {
            const auto longest = max_length(f, n);
            for (std::size_t m = 1; m <= longest; ++m) {
                std::vector<Partition> image;
                for (const auto& p : enumerate(f, n, m)) image.push_back(staircase_map(f, p));
                std::sort(image.begin(), image.end());
                CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
                const long shifted = n + f.staircase().weight(static_cast<long>(m));
                CHECK(image == enumerate_restricted(conditions, shifted, m));
            }
        }
    }
}
