#include "jagged/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jagged {

IntSeries::IntSeries(std::size_t order) : coeffs_(order) {}

IntSeries::IntSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

IntSeries IntSeries::from(std::initializer_list<long> coeffs)
{
    return from(coeffs, coeffs.size());
}

IntSeries IntSeries::from(std::initializer_list<long> coeffs, std::size_t order)
{
    std::vector<Integer> c(order);
    std::size_t k = 0;
    for (long v : coeffs) {
        if (k == order) break;
        c[k++] = v;
    }
    return IntSeries(std::move(c));
}

IntSeries IntSeries::constant(const Integer& value, std::size_t order)
{
    return monomial(value, 0, order);
}

IntSeries IntSeries::monomial(const Integer& value, std::size_t exponent, std::size_t order)
{
    IntSeries s(order);
    if (exponent < order) s.coeffs_[exponent] = value;
    return s;
}

const Integer& IntSeries::at(std::size_t k) const
{
    if (k >= coeffs_.size())
        throw std::out_of_range("coefficient q^" + std::to_string(k) + " is beyond truncation order " +
                                std::to_string(coeffs_.size()));
    return coeffs_[k];
}

IntSeries IntSeries::truncated(std::size_t order) const
{
    std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
    return IntSeries(std::move(c));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Integer> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a[k] + b[k];
    return IntSeries(std::move(c));
}

IntSeries operator-(const IntSeries& a, const IntSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Integer> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a[k] - b[k];
    return IntSeries(std::move(c));
}

IntSeries operator-(const IntSeries& a)
{
    std::vector<Integer> c(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) c[k] = -a[k];
    return IntSeries(std::move(c));
}

IntSeries operator*(const IntSeries& a, const IntSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Integer> c(n);
    // Eta products are sparse for many terms; skipping zeros pays off.
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return IntSeries(std::move(c));
}

IntSeries operator*(const Integer& k, const IntSeries& a)
{
    std::vector<Integer> c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) c[i] = k * a[i];
    return IntSeries(std::move(c));
}

bool operator==(const IntSeries& a, const IntSeries& b)
{
    return !first_mismatch(a, b).has_value();
}

std::optional<std::size_t> first_mismatch(const IntSeries& a, const IntSeries& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k < n; ++k)
        if (a[k] != b[k]) return k;
    return std::nullopt;
}

IntSeries invert(const IntSeries& a)
{
    const std::size_t n = a.order();
    if (n == 0) return a;
    const Integer& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series inverse needs constant term +1 or -1, got " + a0.get_str());

    // b_0 = a_0 and b_n = -a_0 * sum_{k=1}^{n} a_k b_{n-k}, since 1/a_0 = a_0.
    std::vector<Integer> b(n);
    b[0] = a0;
    Integer acc;
    for (std::size_t m = 1; m < n; ++m) {
        acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (sgn(a[k]) == 0) continue;
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[m - k].get_mpz_t());
        }
        b[m] = -a0 * acc;
    }
    return IntSeries(std::move(b));
}

IntSeries pow(const IntSeries& a, long e)
{
    if (e < 0) return pow(invert(a), -e);
    IntSeries result = IntSeries::constant(1, a.order());
    IntSeries base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

IntSeries shift(const IntSeries& a, std::size_t k)
{
    std::vector<Integer> c(a.order());
    for (std::size_t i = 0; i + k < a.order(); ++i) c[i + k] = a[i];
    return IntSeries(std::move(c));
}

IntSeries substitute_power(const IntSeries& a, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("substitute_power needs k >= 1");
    std::vector<Integer> c(a.order() * k);
    for (std::size_t j = 0; j < a.order(); ++j) c[j * k] = a[j];
    return IntSeries(std::move(c));
}

IntSeries slice(const IntSeries& a, std::size_t r, std::size_t s)
{
    if (r == 0 || s >= r) throw std::invalid_argument("slice needs r >= 1 and 0 <= s < r");
    const std::size_t n = a.order() > s ? (a.order() - s + r - 1) / r : 0;
    std::vector<Integer> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[r * i + s];
    return IntSeries(std::move(c));
}

IntSeries pochhammer_inf(std::size_t c, PochSign sign, long exponent, std::size_t order)
{
    if (c == 0) throw std::invalid_argument("pochhammer step must be >= 1");
    // Build prod (1 -+ q^{ck}) in place: multiplying by (1 + s q^d) is
    // p[i] += s * p[i - d], walked from the top down.
    std::vector<Integer> p(order);
    if (order > 0) p[0] = 1;
    const int s = sign == PochSign::minus ? -1 : 1;
    for (std::size_t d = c; d < order; d += c) {
        for (std::size_t i = order - 1; i >= d; --i) {
            if (s < 0)
                p[i] -= p[i - d];
            else
                p[i] += p[i - d];
        }
    }
    return pow(IntSeries(std::move(p)), exponent);
}

IntSeries pochhammer_fin(std::size_t c, std::size_t m, std::size_t order)
{
    if (c == 0) throw std::invalid_argument("pochhammer step must be >= 1");
    std::vector<Integer> p(order);
    if (order > 0) p[0] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        const std::size_t d = c * k;
        if (d >= order) break;
        for (std::size_t i = order - 1; i >= d; --i) p[i] -= p[i - d];
    }
    return IntSeries(std::move(p));
}

IntSeries theta_sum(long a, long b, bool alternating, std::size_t order)
{
    if (a < 1) throw std::invalid_argument("theta_sum needs a >= 1");
    if (b > a || -b > a) throw std::invalid_argument("theta_sum needs |b| <= a");
    std::vector<Integer> c(order);
    const long limit = static_cast<long>(order);
    auto add_term = [&](long n) {
        const long e = a * n * n + b * n;
        if (e >= limit) return false;
        if (alternating && (n & 1))
            c[e] -= 1;
        else
            c[e] += 1;
        return true;
    };
    // a n^2 + b n >= a |n| (|n| - 1), so once a term past |n| = 1 overshoots,
    // every later one on that side does too.
    for (long n = 0;; ++n)
        if (!add_term(n) && n > 1) break;
    for (long n = -1;; --n)
        if (!add_term(n) && n < -1) break;
    return IntSeries(std::move(c));
}

EtaQuotient::EtaQuotient(Integer constant, std::size_t q_shift, std::vector<EtaFactor> factors)
    : constant_(std::move(constant)), q_shift_(q_shift), factors_(std::move(factors))
{
    if (factors_.empty() && constant_ == 0)
        throw std::invalid_argument("eta quotient needs a factor or a non-zero constant");
    for (const auto& f : factors_)
        if (f.step == 0) throw std::invalid_argument("eta factor step must be >= 1");
}

IntSeries eval_eta(const EtaQuotient& eta, std::size_t order)
{
    IntSeries result = IntSeries::monomial(eta.constant(), eta.q_shift(), order);
    for (const auto& f : eta.factors())
        result = result * pochhammer_inf(f.step, PochSign::minus, f.exponent, order);
    return result;
}

}  // namespace jagged
