#include "jagged/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace jagged {

namespace {

std::vector<Integer> to_vector(const IntSeries& s)
{
    return std::vector<Integer>(s.coeffs().begin(), s.coeffs().end());
}

long multinomial(const std::vector<long>& counts)
{
    long total = 0;
    long result = 1;
    for (long c : counts) {
        for (long i = 1; i <= c; ++i) {
            ++total;
            result = result * total / i;
        }
    }
    return result;
}

// Multisets of size `size` drawn from `residues` whose sum is s mod r,
// reported as multiplicity vectors aligned with `residues`.
void residue_multisets(const std::vector<long>& residues, long r, long s, int size,
                       const std::function<void(const std::vector<long>&)>& visit)
{
    std::vector<long> counts(residues.size(), 0);
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t idx, int left, long sum) {
        if (idx == residues.size()) {
            if (left == 0 && sum % r == s % r) visit(counts);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[idx] = c;
            rec(idx + 1, left - c, sum + c * residues[idx]);
        }
        counts[idx] = 0;
    };
    rec(0, size, 0);
}

}  // namespace

std::vector<Integer> partition_numbers(std::size_t n_max)
{
    return to_vector(pochhammer_inf(1, PochSign::minus, -1, n_max + 1));
}

std::vector<Integer> distinct_partition_numbers(std::size_t n_max)
{
    return to_vector(pochhammer_inf(1, PochSign::plus, 1, n_max + 1));
}

std::vector<Integer> j_by_recurrence(std::size_t n_max)
{
    std::vector<Integer> j(n_max + 1);
    j[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Integer acc = 0;
        for (std::size_t m = 1; m * m <= n; ++m) {
            if (m % 2 == 1)
                acc += j[n - m * m];
            else
                acc -= j[n - m * m];
        }
        j[n] = 2 * acc;
    }
    return j;
}

std::vector<Integer> j_by_convolution(std::size_t n_max)
{
    const auto p = partition_numbers(n_max);
    const auto d = distinct_partition_numbers(n_max);
    std::vector<Integer> j(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t m = 0; m <= n; ++m) j[n] += p[n - m] * d[m];
    return j;
}

std::vector<Integer> j_by_series(std::size_t n_max)
{
    const std::size_t order = n_max + 1;
    return to_vector(pochhammer_inf(1, PochSign::plus, 1, order) * pochhammer_inf(1, PochSign::minus, -1, order));
}

SquaresExpansion j_by_squares(long n)
{
    if (n < 1) throw std::invalid_argument("sum-of-squares expansion needs n >= 1");
    // reps[k] = ordered tuples of the current length whose squares sum to k.
    std::vector<Integer> reps(n + 1);
    reps[0] = 1;
    SquaresExpansion out;
    for (int p = 1; p <= n; ++p) {
        std::vector<Integer> next(n + 1);
        for (long k = 0; k <= n; ++k) {
            if (sgn(reps[k]) == 0) continue;
            for (long x = 1; k + x * x <= n; ++x) next[k + x * x] += reps[k];
        }
        reps = std::move(next);
        if (sgn(reps[n]) == 0) continue;
        // (-1)^{sum (x_i + 1)} = (-1)^{n + p} because x and x^2 share parity.
        const int sign = ((n + p) % 2 == 0) ? 1 : -1;
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(p));
        Integer contribution = sign * power * reps[n];
        out.total += contribution;
        out.terms.push_back({p, sign, reps[n], std::move(contribution)});
    }
    return out;
}

CountTable2D::CountTable2D(std::size_t m_max, std::size_t n_max)
    : m_max_(m_max), n_max_(n_max), values_((m_max + 1) * (n_max + 1))
{
}

Integer CountTable2D::at(long m, long n) const
{
    if (m < 0 || n < 0 || m > static_cast<long>(m_max_) || n > static_cast<long>(n_max_)) return 0;
    return values_[m * (n_max_ + 1) + n];
}

CountTable2D p_table(std::size_t m_max, std::size_t n_max)
{
    CountTable2D t(m_max, n_max);
    t.cell(0, 0) = 1;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t m = 1; m <= m_max; ++m) {
            const long mm = static_cast<long>(m);
            const long nn = static_cast<long>(n);
            t.cell(m, n) = t.at(mm - 1, nn - 1) + t.at(mm, nn - mm);
        }
    return t;
}

Integer p_mn(long m, long n)
{
    if (m < 0 || n < 0) return 0;
    return p_table(m, n).at(m, n);
}

JKTables jk_tables(std::size_t m_max, std::size_t n_max)
{
    JKTables t{CountTable2D(m_max, n_max), CountTable2D(m_max, n_max)};
    t.j.cell(0, 0) = 1;
    t.k.cell(0, 0) = 1;
    // Row m = 0 holds only the empty partition; column n = 0 is empty for m > 0.
    for (std::size_t n = 1; n <= n_max; ++n)
        for (std::size_t m = 1; m <= m_max; ++m) {
            const long mm = static_cast<long>(m);
            const long nn = static_cast<long>(n);
            t.k.cell(m, n) = t.k.at(mm - 1, nn - 1) + t.j.at(mm, nn - mm);
            t.j.cell(m, n) = t.j.at(mm - 2, nn - 1) + t.k.at(mm, nn);
        }
    return t;
}

AtMostCount j_at_most(const JKTables& t, long m, long n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("j_at_most needs m, n >= 0");
    if (m > static_cast<long>(t.j.m_max()) || n + m > static_cast<long>(t.j.n_max()))
        throw std::out_of_range("j_at_most: tables too small");
    return {t.j.at(m, n + m) - t.j.at(m - 2, n + m - 1), t.k.at(m, n + m)};
}

AtMostCount j_at_most(long m, long n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("j_at_most needs m, n >= 0");
    return j_at_most(jk_tables(m, n + m), m, n);
}

double ramanujan_estimate(long n)
{
    if (n < 1) throw std::invalid_argument("ramanujan_estimate needs n >= 1");
    const double x = std::numbers::pi * std::sqrt(static_cast<double>(n));
    return (std::cosh(x) - std::sinh(x) / x) / (4.0 * static_cast<double>(n));
}

std::vector<int> min_squares_table(std::size_t n_max)
{
    std::vector<int> t(n_max + 1, 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        int best = static_cast<int>(n);
        for (std::size_t k = 1; k * k <= n; ++k) best = std::min(best, 1 + t[n - k * k]);
        t[n] = best;
    }
    return t;
}

int min_squares(long n)
{
    if (n < 1) throw std::invalid_argument("min_squares needs n >= 1");
    return min_squares_table(n)[n];
}

CongruencePrediction congruence_predict(long r, long s)
{
    if (r < 2 || s < 1 || s >= r) throw std::invalid_argument("congruence_predict needs 1 <= s < r");

    const auto squares = min_squares_table(r * (kCongruenceWindow - 1) + s);
    int p_prime = 4;
    for (long n = 0; n < kCongruenceWindow; ++n) p_prime = std::min(p_prime, squares[r * n + s]);

    std::vector<long> residues;
    for (long m = 1; m < r; ++m) residues.push_back(m * m % r);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    residues.erase(std::remove(residues.begin(), residues.end(), 0L), residues.end());

    long compositions = 0;
    long orbit_gcd = 0;
    residue_multisets(residues, r, s, p_prime, [&](const std::vector<long>& counts) {
        const long orbit = multinomial(counts);
        compositions += orbit;
        orbit_gcd = std::gcd(orbit_gcd, orbit);
    });
    bool reachable_with_one_more = false;
    residue_multisets(residues, r, s, p_prime + 1, [&](const std::vector<long>&) { reachable_with_one_more = true; });

    const bool upgraded = !reachable_with_one_more;
    const long cap = upgraded ? 4 : 2;
    const long a = orbit_gcd == 0 ? 1 : std::gcd(orbit_gcd, cap);
    return {r, s, p_prime, compositions, orbit_gcd, upgraded, a << p_prime};
}

CongruenceReport congruence_verify(std::span<const Integer> j, long r, long s, const Integer& modulus, long upto,
                                   long min_index)
{
    if (r < 1 || s < 0) throw std::invalid_argument("congruence_verify needs r >= 1 and s >= 0");
    if (sgn(modulus) <= 0) throw std::invalid_argument("modulus must be positive");
    if (upto >= static_cast<long>(j.size())) throw std::out_of_range("j table shorter than verification range");

    CongruenceReport report{"j(" + std::to_string(r) + "n+" + std::to_string(s) + ") = 0 mod " + modulus.get_str(),
                            r,
                            s,
                            modulus,
                            min_index,
                            upto,
                            true,
                            std::nullopt};
    for (long idx = s; idx <= upto; idx += r) {
        if (idx < min_index) continue;
        if (!mpz_divisible_p(j[idx].get_mpz_t(), modulus.get_mpz_t())) {
            report.passed = false;
            report.counterexample = std::make_pair(idx, j[idx]);
            break;
        }
    }
    return report;
}

CongruenceReport congruence_verify(long r, long s, const Integer& modulus, long upto, long min_index)
{
    const auto j = j_by_recurrence(static_cast<std::size_t>(std::max(upto, 0L)));
    return congruence_verify(j, r, s, modulus, upto, min_index);
}

CongruenceReport verify_square_bound(long upto)
{
    const auto j = j_by_recurrence(static_cast<std::size_t>(std::max(upto, 0L)));
    const auto squares = min_squares_table(static_cast<std::size_t>(std::max(upto, 0L)));
    CongruenceReport report{"2^min_squares(n) | j(n)", 1, 0, 0, 1, upto, true, std::nullopt};
    for (long n = 1; n <= upto; ++n) {
        if (!mpz_divisible_2exp_p(j[n].get_mpz_t(), static_cast<mp_bitcnt_t>(squares[n]))) {
            report.passed = false;
            report.counterexample = std::make_pair(n, j[n]);
            break;
        }
    }
    return report;
}

}  // namespace jagged
