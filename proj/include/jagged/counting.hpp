#pragma once

#include "jagged/qseries.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jagged {

// p(0..n_max), the coefficients of 1/(q)_inf.
std::vector<Integer> partition_numbers(std::size_t n_max);
// d(0..n_max), the coefficients of (-q)_inf.
std::vector<Integer> distinct_partition_numbers(std::size_t n_max);

// j(0..n_max) from j(n) = 2 sum_{m >= 1} (-1)^{m+1} j(n - m^2).
std::vector<Integer> j_by_recurrence(std::size_t n_max);
// j(n) = sum_m p(n - m) d(m).
std::vector<Integer> j_by_convolution(std::size_t n_max);
// Coefficients of (-q)_inf / (q)_inf.
std::vector<Integer> j_by_series(std::size_t n_max);

// One p-term of the signed sum-of-squares expansion:
// sign * 2^parts * representations, where `representations` counts ordered
// tuples of `parts` positive integers whose squares sum to n.
struct SquaresTerm {
    int parts;
    int sign;
    Integer representations;
    Integer contribution;
};

struct SquaresExpansion {
    Integer total;
    std::vector<SquaresTerm> terms;  // only p with a non-zero count, ascending
};

SquaresExpansion j_by_squares(long n);

// Dense (m, n) table; reads outside the stored range (including negative
// indices) give 0, which is what every recurrence here wants.
class CountTable2D {
public:
    CountTable2D(std::size_t m_max, std::size_t n_max);

    std::size_t m_max() const noexcept { return m_max_; }
    std::size_t n_max() const noexcept { return n_max_; }

    Integer at(long m, long n) const;
    Integer& cell(std::size_t m, std::size_t n) { return values_[m * (n_max_ + 1) + n]; }

private:
    std::size_t m_max_;
    std::size_t n_max_;
    std::vector<Integer> values_;
};

// p(m, n): partitions of n into exactly m parts.
CountTable2D p_table(std::size_t m_max, std::size_t n_max);
Integer p_mn(long m, long n);

// j(m, n) (01-partitions of n with m parts) and k(m, n) (those without a zero part).
struct JKTables {
    CountTable2D j;
    CountTable2D k;
};

JKTables jk_tables(std::size_t m_max, std::size_t n_max);

// 01-partitions of n with at most m parts, by both available routes.
struct AtMostCount {
    Integer by_difference;  // j(m, n+m) - j(m-2, n+m-1)
    Integer by_k;           // k(m, n+m)
};

AtMostCount j_at_most(long m, long n);
AtMostCount j_at_most(const JKTables& tables, long m, long n);

// Ramanujan's closed-form estimate of j(n), in double precision.
double ramanujan_estimate(long n);

// Least number of positive squares summing to each k <= n_max (index 0 holds 0).
std::vector<int> min_squares_table(std::size_t n_max);
int min_squares(long n);

struct CongruencePrediction {
    long r;
    long s;
    int p_prime;        // least number of squares over the progression window
    long compositions;  // ordered p'-tuples of non-zero square residues summing to s mod r
    long orbit_gcd;     // gcd of the permutation-orbit sizes of those tuples
    bool upgraded;      // no (p'+1)-tuple of residues reaches s, so up to 4 may be used
    long modulus;
};

// Predicts a power-of-two congruence for j(rn + s) from sums of squares.
// Requires 1 <= s < r (std::invalid_argument otherwise).
CongruencePrediction congruence_predict(long r, long s);

inline constexpr long kCongruenceWindow = 64;

struct CongruenceReport {
    std::string claim;
    long r;
    long s;
    Integer modulus;
    long min_index;
    long upto;
    bool passed;
    std::optional<std::pair<long, Integer>> counterexample;  // (index, j(index))
};

// Checks modulus | j(rn + s) for every index rn + s in [min_index, upto].
CongruenceReport congruence_verify(long r, long s, const Integer& modulus, long upto, long min_index = 0);
CongruenceReport congruence_verify(std::span<const Integer> j, long r, long s, const Integer& modulus, long upto,
                                   long min_index = 0);

// 2^{min_squares(n)} | j(n) for 1 <= n <= upto.
CongruenceReport verify_square_bound(long upto);

}  // namespace jagged
