#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace jagged {

using Integer = mpz_class;

// Truncated formal power series  sum_{k < order} c_k q^k  with exact integer
// coefficients. Coefficients at exponents >= order are unknown.
///
// Binary operations truncate to the smaller of the two orders, so a value
// never claims more precision than its inputs carry.
class IntSeries {
public:
    IntSeries() = default;

    // Zero series of the given order.
    explicit IntSeries(std::size_t order);
    explicit IntSeries(std::vector<Integer> coeffs);

    // Small literal series for tests and fixtures: from({1, -1}) is 1 - q at order 2.
    static IntSeries from(std::initializer_list<long> coeffs);
    static IntSeries from(std::initializer_list<long> coeffs, std::size_t order);

    static IntSeries constant(const Integer& value, std::size_t order);
    static IntSeries monomial(const Integer& value, std::size_t exponent, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }

    // Coefficient of q^k; throws std::out_of_range when k >= order().
    const Integer& at(std::size_t k) const;
    const Integer& operator[](std::size_t k) const { return coeffs_[k]; }

    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    IntSeries truncated(std::size_t order) const;

private:
    std::vector<Integer> coeffs_;
};

IntSeries operator+(const IntSeries& a, const IntSeries& b);
IntSeries operator-(const IntSeries& a, const IntSeries& b);
IntSeries operator-(const IntSeries& a);
IntSeries operator*(const IntSeries& a, const IntSeries& b);
IntSeries operator*(const Integer& c, const IntSeries& a);

// Coefficient-wise equality up to the common order.
bool operator==(const IntSeries& a, const IntSeries& b);

// First exponent below the common order where a and b differ.
std::optional<std::size_t> first_mismatch(const IntSeries& a, const IntSeries& b);

// Multiplicative inverse; the constant term must be +1 or -1
// (std::domain_error otherwise), so the result stays integral.
IntSeries invert(const IntSeries& a);

// a^e; negative exponents go through invert().
IntSeries pow(const IntSeries& a, long e);

// q^k * a, same order as a.
IntSeries shift(const IntSeries& a, std::size_t k);

// a(q^k): b[j*k] = a[j], order k * a.order().
IntSeries substitute_power(const IntSeries& a, std::size_t k);

// sum_n a[r*n + s] q^n.
IntSeries slice(const IntSeries& a, std::size_t r, std::size_t s);

enum class PochSign {
    minus,  // factors (1 - q^{ck})
    plus,   // factors (1 + q^{ck})
};

// (q^c; q^c)_inf^e for PochSign::minus, (-q^c; q^c)_inf^e for PochSign::plus.
IntSeries pochhammer_inf(std::size_t c, PochSign sign, long exponent, std::size_t order);

// (q^c; q^c)_m = prod_{k=1}^{m} (1 - q^{ck}).
IntSeries pochhammer_fin(std::size_t c, std::size_t m, std::size_t order);

// sum_{n in Z} s(n) q^{a n^2 + b n}, s(n) = (-1)^n when alternating, 1 otherwise.
// Requires |b| <= a so every exponent is non-negative.
IntSeries theta_sum(long a, long b, bool alternating, std::size_t order);

struct EtaFactor {
    std::size_t step;  // c in (q^c; q^c)_inf
    long exponent;
};

// constant * q^shift * prod (q^c; q^c)_inf^e
class EtaQuotient {
public:
    EtaQuotient(Integer constant, std::size_t q_shift, std::vector<EtaFactor> factors);
    EtaQuotient(Integer constant, std::vector<EtaFactor> factors)
        : EtaQuotient(std::move(constant), 0, std::move(factors)) {}

    const Integer& constant() const noexcept { return constant_; }
    std::size_t q_shift() const noexcept { return q_shift_; }
    std::span<const EtaFactor> factors() const noexcept { return factors_; }

private:
    Integer constant_;
    std::size_t q_shift_;
    std::vector<EtaFactor> factors_;
};

IntSeries eval_eta(const EtaQuotient& eta, std::size_t order);

}  // namespace jagged
