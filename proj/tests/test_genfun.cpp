#include <doctest.h>

#include "jagged/counting.hpp"
#include "jagged/genfun.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace jagged;

namespace {

BiSeries row_literal(std::size_t m, std::initializer_list<long> coeffs, std::size_t z_max, std::size_t q_order)
{
    BiSeries out(z_max, q_order);
    out.set_row(m, IntSeries::from(coeffs, q_order));
    return out;
}

}  // namespace

TEST_CASE("bivariate arithmetic")
{
    const auto zq = BiSeries::monomial(1, 1, 1, 4, 6);
    const auto one = BiSeries::one(4, 6);
    const auto prod = (one + zq) * (one - zq);
    CHECK(prod == one - BiSeries::monomial(1, 2, 2, 4, 6));
    CHECK(prod * one == prod);
    CHECK(prod + BiSeries(4, 6) == prod);

    // Mixed truncations take the minimum.
    const auto small = BiSeries::one(2, 3);
    CHECK((small * prod).z_max() == 2);
    CHECK((small * prod).q_order() == 3);

    CHECK(scale(one, 3, 2, 1).at(2, 1) == 3);
    CHECK(dilate(BiSeries::monomial(1, 1, 0, 3, 5), 1) == zq.truncated(3, 5));
    CHECK(dilate(prod, 0) == prod);
    CHECK(at_z_one(prod) == IntSeries::from({1, 0, -1}, 6));
}

TEST_CASE("in-place factors match term-by-term products")
{
    const std::size_t M = 8, N = 12;
    auto x = BiSeries::one(M, N);
    mul_factor(x, 1, 1, 2);
    mul_factor(x, -1, 2, 3);
    auto direct = (BiSeries::one(M, N) + BiSeries::monomial(1, 1, 2, M, N)) *
                  (BiSeries::one(M, N) - BiSeries::monomial(1, 2, 3, M, N));
    CHECK(x == direct);

    div_factor(x, 1, 1, 2);
    div_factor(x, -1, 2, 3);
    CHECK(x == BiSeries::one(M, N));

    // 1/(1 - z q) = sum z^k q^k
    auto geo = BiSeries::one(M, N);
    div_factor(geo, -1, 1, 1);
    for (std::size_t m = 0; m <= M; ++m)
        for (std::size_t n = 0; n < N; ++n) CHECK(geo.at(m, n) == (m == n ? 1 : 0));
    CHECK_THROWS_AS(mul_factor(geo, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(div_factor(geo, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("closed form of the 01 generating function")
{
    const auto J = closed_form("01", 8, 12);
    // Row by row the coefficient of q^3 is z + 2z^2 + 2z^3 + z^4 + z^5 + z^6.
    const long q3[] = {0, 1, 2, 2, 1, 1, 1, 0, 0};
    for (std::size_t m = 0; m <= 8; ++m) CHECK(J.at(m, 3) == q3[m]);
    CHECK(J.at(4, 2) == 1);
    CHECK(J.row(0) == IntSeries::constant(1, 12));

    // (1 - z^2 q)(1 - z^2 q^2) J(z) = (1 + zq) J(zq)
    auto lhs = J;
    mul_factor(lhs, -1, 2, 1);
    mul_factor(lhs, -1, 2, 2);
    auto rhs = dilate(J, 1);
    mul_factor(rhs, 1, 1, 1);
    CHECK(lhs == rhs);

    // Summing over z recovers the one-variable series.
    const auto wide = closed_form("01", 30, 15);
    CHECK(at_z_one(wide) == IntSeries(j_by_recurrence(14)));

    // K counts the 01-partitions without a zero part.
    const auto K = closed_form("01k", 8, 12);
    const auto t = jk_tables(8, 11);
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n < 12; ++n) CHECK(K.at(m, n) == t.k.at(m, n));
    CHECK_THROWS_AS(closed_form("03", 4, 4), std::invalid_argument);
}

TEST_CASE("closed form of the 02 generating function")
{
    const auto F = closed_form("02", 8, 16);
    const long z5[] = {0, 0, 0, 0, 0, 0, 1, 2, 4, 7};
    for (std::size_t n = 0; n < 10; ++n) CHECK(F.at(5, n) == z5[n]);
}

TEST_CASE("closed forms agree with enumeration")
{
    const std::size_t N = 13;
    for (const auto& [name, f] : {std::pair{"01", family_01()}, std::pair{"02", family_02()},
                                  std::pair{"012", family_012()}, std::pair{"001", family_001()}}) {
        const std::size_t M = max_length(f, N - 1);
        const auto counts = enumeration_counts(f, M, N);
        const auto form = closed_form(name, M, N);
        CAPTURE(name);
        CHECK(form == counts);
        CHECK(form.row(0) == IntSeries::constant(1, N));
    }
}

TEST_CASE("q-difference systems reproduce the closed forms")
{
    const std::size_t M = 8, N = 14;
    CHECK(qdiff_solve(system_01(), M, N).at("J") == closed_form("01", M, N));
    CHECK(qdiff_solve(system_01(), M, N).at("K") == closed_form("01k", M, N));
    CHECK(qdiff_solve(system_02(), M, N).at("J") == closed_form("02", M, N));
    CHECK(qdiff_solve(system_012(), M, N).at("J") == closed_form("012", M, N));
    CHECK(qdiff_solve(system_001(), M, N).at("J") == closed_form("001", M, N));
    CHECK(qdiff_solve(system_001(), M, N).at("J") == enumeration_counts(family_001(), M, N));
}

TEST_CASE("third-order staircase system")
{
    const std::size_t M = 6, N = 18;
    const auto A = qdiff_solve(system_staircase01(), M, N).at("A");
    CHECK(A == multisum(MultiSum::staircase01, M, N));
    CHECK(A == staircase_transform(closed_form("01", M, N), family_01().staircase()));

    // A(z) = (1 + zq) A(zq) + z^2 q^2 A(zq^2) - z^3 q^5 A(zq^3)
    auto first = dilate(A, 1);
    mul_factor(first, 1, 1, 1);
    const auto rhs = first + scale(dilate(A, 2), 1, 2, 2) - scale(dilate(A, 3), 1, 3, 5);
    CHECK(A == rhs);
}

TEST_CASE("q-difference solver rejects ill-posed systems")
{
    QDiffSystem loop{{"X", "Y"}, {{"X", {{1, 0, 0, "Y"}}}, {"Y", {{1, 0, 0, "X"}}}}};
    CHECK_THROWS_AS(qdiff_solve(loop, 3, 3), IllPosedSystem);

    QDiffSystem unknown_ref{{"X"}, {{"X", {{1, 1, 1, "Z"}}}}};
    CHECK_THROWS_AS(qdiff_solve(unknown_ref, 3, 3), IllPosedSystem);

    QDiffSystem missing{{"X", "Y"}, {{"X", {{1, 1, 1, "Y"}}}}};
    CHECK_THROWS_AS(qdiff_solve(missing, 3, 3), IllPosedSystem);

    QDiffSystem duplicate{{"X", "X"}, {{"X", {{1, 1, 1, "X"}}}}};
    CHECK_THROWS_AS(qdiff_solve(duplicate, 3, 3), IllPosedSystem);

    // Row 0 would need Y = 2Y + qX, which no empty-partition row satisfies.
    QDiffSystem inconsistent{{"X", "Y"}, {{"X", {{1, 0, 0, "Y"}}}, {"Y", {{2, 0, 0, "Y", 1}, {1, 0, 1, "X"}}}}};
    CHECK_THROWS_AS(qdiff_solve(inconsistent, 2, 4), IllPosedSystem);

    // X = zq X with nothing feeding row 0.
    QDiffSystem unfed{{"X"}, {{"X", {{1, 1, 1, "X"}}}}};
    CHECK_THROWS_AS(qdiff_solve(unfed, 3, 3), IllPosedSystem);

    // 1/(1 - zq): X = zq X + Y, with Y = Y(zq) = 1.
    QDiffSystem geometric{{"X", "Y"}, {{"X", {{1, 1, 1, "X"}, {1, 0, 0, "Y"}}}, {"Y", {{1, 0, 0, "Y", 1}}}}};
    auto expect = BiSeries::one(5, 8);
    div_factor(expect, -1, 1, 1);
    CHECK(qdiff_solve(geometric, 5, 8).at("X") == expect);
}

TEST_CASE("staircase transform")
{
    const auto J = closed_form("01", 6, 16);
    CHECK(staircase_transform(J, [](long) { return 0L; }) == J);

    // Two parts: the distance-2 gap condition is vacuous, so row 2 counts p(2, n).
    const auto T = staircase_transform(J, family_01().staircase());
    for (long n = 0; n < 16; ++n) CHECK(T.at(2, n) == p_mn(2, n));

    // Row 5 of the shifted 02 series at q^24 counts the seven length-5 02-partitions of 9.
    const auto S = staircase_transform(closed_form("02", 6, 26), family_02().staircase());
    CHECK(S.q_order() == 25);
    CHECK(S.at(5, 24) == 7);

    // Negative shifts need an empty low end.
    const auto bad = row_literal(1, {1, 1}, 2, 4);
    CHECK_THROWS_AS(staircase_transform(bad, [](long m) { return -m; }), std::invalid_argument);
    const auto fine = row_literal(1, {0, 1}, 2, 4);
    CHECK(staircase_transform(fine, [](long m) { return -m; }).at(1, 0) == 1);
}

TEST_CASE("multi-sums equal their product and shifted forms")
{
    const std::size_t M = 6, N = 16;
    CHECK(multisum(MultiSum::staircase01, M, N) ==
          staircase_transform(closed_form("01", M, N), family_01().staircase()));
    CHECK(multisum(MultiSum::jagged02, M, N) == closed_form("02", M, N));
    CHECK(multisum(MultiSum::jagged012, M, N) == closed_form("012", M, N));
    CHECK(multisum(MultiSum::restricted02, M, N) ==
          staircase_transform(closed_form("02", M, N + 1), family_02().staircase()));
    CHECK(multisum(MultiSum::restricted012, M, N) ==
          staircase_transform(closed_form("012", M, N + 1), family_012().staircase()));
    CHECK(multisum(MultiSum::restricted001, M, N) ==
          staircase_transform(closed_form("001", M, N), family_001().staircase()));

    for (const auto which : {MultiSum::staircase01, MultiSum::jagged02, MultiSum::restricted02, MultiSum::jagged012,
                             MultiSum::restricted012, MultiSum::restricted001}) {
        const auto s = multisum(which, M, N);
        for (std::size_t m = 0; m <= M; ++m)
            for (std::size_t n = 0; n < N; ++n) CHECK(s.at(m, n) >= 0);
        CHECK(parse_multisum(to_string(which)) == which);
    }
    CHECK_THROWS_AS(parse_multisum("eq1"), std::invalid_argument);
}

TEST_CASE("shifted series count restricted partitions")
{
    const std::size_t M = 6, N = 16;
    for (const auto& f : {family_01(), family_02(), family_012(), family_001()}) {
        const auto shifted = staircase_transform(closed_form(f.name(), M, N + 1), f.staircase());
        CAPTURE(f.name());
        CHECK(restricted_counts(restricted_conditions(f), M, N) == shifted);
    }
}
