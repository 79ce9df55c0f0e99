#pragma once

#include "jagged/families.hpp"
#include "jagged/qseries.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jagged {

// sum_{m <= z_max, n < q_order} c_{m,n} z^m q^n, stored as one IntSeries per z-degree.
class BiSeries {
public:
    BiSeries() = default;
    BiSeries(std::size_t z_max, std::size_t q_order);

    static BiSeries one(std::size_t z_max, std::size_t q_order);
    static BiSeries monomial(const Integer& c, std::size_t z_power, std::size_t q_power, std::size_t z_max,
                             std::size_t q_order);

    std::size_t z_max() const noexcept { return rows_.empty() ? 0 : rows_.size() - 1; }
    std::size_t q_order() const noexcept { return q_order_; }

    const IntSeries& row(std::size_t m) const { return rows_.at(m); }
    // Coefficient of z^m q^n; 0 outside the tracked range.
    Integer at(std::size_t m, std::size_t n) const;

    void set_row(std::size_t m, IntSeries row);
    void add_to(std::size_t m, std::size_t n, const Integer& c);

    BiSeries truncated(std::size_t z_max, std::size_t q_order) const;

private:
    std::vector<IntSeries> rows_;
    std::size_t q_order_ = 0;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const Integer& c, const BiSeries& a);

// Row-wise equality up to the common truncation.
bool operator==(const BiSeries& a, const BiSeries& b);
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const BiSeries& a, const BiSeries& b);

// c z^a q^b * x
BiSeries scale(const BiSeries& x, const Integer& c, std::size_t z_power, std::size_t q_power);

// x(z q^k): z^m q^n -> z^m q^{n + k m}.
BiSeries dilate(const BiSeries& x, std::size_t k);

// In place: x *= (1 + sign z^a q^b) and x /= (1 + sign z^a q^b), sign = +1 or -1.
void mul_factor(BiSeries& x, int sign, std::size_t a, std::size_t b);
void div_factor(BiSeries& x, int sign, std::size_t a, std::size_t b);

// x(1; q), the sum of all rows.
IntSeries at_z_one(const BiSeries& x);

// Product forms of the length-graded generating functions.
// Names: "01" (J), "01k" (K, no zero parts), "02", "012", "001".
BiSeries closed_form(const std::string& family, std::size_t z_max, std::size_t q_order);

// Coefficient table |enumerate(f, n, m)| for m <= z_max, n < q_order.
BiSeries enumeration_counts(const FamilySpec& f, std::size_t z_max, std::size_t q_order);
// Same for enumerate_restricted.
BiSeries restricted_counts(const std::vector<Gap>& conditions, std::size_t z_max, std::size_t q_order);

// Shifts row m by q^{sigma(m)}. Negative shifts drop low coefficients, which
// must be zero (std::invalid_argument otherwise); the result's q_order shrinks
// by max(0, -min sigma) so every kept coefficient is exact.
BiSeries staircase_transform(const BiSeries& x, const std::function<long(long)>& sigma);
BiSeries staircase_transform(const BiSeries& x, const Staircase& s);

enum class MultiSum {
    staircase01,    // sum q^{(m0+m1)^2 + m1^2} z^{m0+2m1} / ((q)_{m0} (q)_{m1})
    jagged02,       // signed triple sum for the 02 closed form
    restricted02,   // jagged02 with z^L -> z^L q^{L(L-2)}
    jagged012,      // triple sum for the 012 closed form
    restricted012,  // jagged012 with z^L -> z^L q^{L(L-3)/2}
    restricted001,  // quadruple sum for the shifted 001 series
};

BiSeries multisum(MultiSum which, std::size_t z_max, std::size_t q_order);
MultiSum parse_multisum(const std::string& name);
std::string to_string(MultiSum which);

struct QTerm {
    long coefficient;
    std::size_t z_power;
    std::size_t q_power;
    std::string unknown;
    std::size_t dilation = 0;  // the unknown is evaluated at z q^dilation
};

struct QDiffSystem {
    std::vector<std::string> unknowns;
    std::map<std::string, std::vector<QTerm>> equations;
};

class IllPosedSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Jacobi iteration from the empty partition, with every unknown's z^0 row held at 1.
// Throws IllPosedSystem for malformed systems, for cycles of weight-zero undilated
// references, for row-0 equations that contradict the pin, and when iteration does
// not settle in (M+1)(N+1)+1 rounds.
std::map<std::string, BiSeries> qdiff_solve(const QDiffSystem& system, std::size_t z_max, std::size_t q_order);

// First-order systems obtained by removing the first part or the leading pair.
QDiffSystem system_01();
QDiffSystem system_02();
QDiffSystem system_012();
QDiffSystem system_001();
// Third-order system for the staircase-shifted 01 series; A is the series itself.
QDiffSystem system_staircase01();

}  // namespace jagged
