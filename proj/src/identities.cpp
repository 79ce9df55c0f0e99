#include "jagged/identities.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace jagged {

IntSeries euler(std::size_t c, long e, std::size_t order)
{
    return pochhammer_inf(c, PochSign::minus, e, order);
}

IntSeries jagged_series(std::size_t order)
{
    return euler(2, 1, order) * euler(1, -2, order);
}

namespace {

using Builder = std::function<IntSeries(std::size_t)>;

IntSeries eta(const Integer& k, std::size_t q_shift, std::vector<EtaFactor> factors, std::size_t order)
{
    return eval_eta(EtaQuotient(k, q_shift, std::move(factors)), order);
}

Builder eta_builder(long k, std::size_t q_shift, std::vector<EtaFactor> factors)
{
    return [=](std::size_t order) { return eta(k, q_shift, factors, order); };
}

// f(q^r) truncated to `order`.
IntSeries substituted(const Builder& f, std::size_t r, std::size_t order)
{
    return substitute_power(f((order + r - 1) / r), r).truncated(order);
}

// sum_n j(rn + s) q^n
IntSeries j_slice(std::size_t r, std::size_t s, std::size_t order)
{
    return slice(jagged_series(r * order + s), r, s);
}

IntSeries one(std::size_t order) { return IntSeries::constant(1, order); }

// The three eta quotients that carry the mod-8 dissection of 1/J.
IntSeries zeta0(std::size_t n) { return eta(1, 0, {{4, 5}, {16, 1}, {2, -2}, {8, -4}}, n); }
IntSeries zeta1(std::size_t n) { return eta(1, 0, {{2, 2}, {16, 1}, {1, -1}, {8, -2}}, n); }
IntSeries zeta4(std::size_t n) { return eta(1, 0, {{16, 1}, {4, -1}}, n); }
// The mod-3 counterpart.
IntSeries zeta1_mod3(std::size_t n) { return eta(1, 0, {{1, 1}, {6, 3}, {2, -1}, {3, -3}}, n); }

std::vector<IdentityCase> build_registry()
{
    constexpr std::size_t pure = 100;
    constexpr std::size_t substituted_order = 120;
    std::vector<IdentityCase> r;

    r.push_back({"eq6", "J(q) = 1/theta_4(q)", pure, 1,
                 [](std::size_t n) { return jagged_series(n) * theta_sum(1, 0, true, n); }, one});

    r.push_back({"eq14", "J = 1 + 2 J sum_{n>=1} (-1)^{n+1} q^{n^2}", pure, 1, jagged_series, [](std::size_t n) {
                     std::vector<Integer> s(n);
                     for (std::size_t k = 1; k * k < n; ++k) s[k * k] = (k % 2 == 1) ? 1 : -1;
                     return one(n) + Integer(2) * jagged_series(n) * IntSeries(std::move(s));
                 }});

    r.push_back({"eq17", "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q)^6", pure, 1,
                 [](std::size_t n) { return slice(euler(1, -1, 5 * n + 4), 5, 4); },
                 eta_builder(5, 0, {{5, 5}, {1, -6}})});

    struct SliceCase {
        std::size_t r, s;
        long k;
        std::vector<EtaFactor> factors;
        const char* words;
    };
    const std::vector<SliceCase> slices = {
        {2, 0, 1, {{4, 5}, {1, -4}, {8, -2}}, "sum j(2n) q^n = (q^4;q^4)^5 / ((q)^4 (q^8;q^8)^2)"},
        {2, 1, 2, {{2, 2}, {8, 2}, {1, -4}, {4, -1}}, "sum j(2n+1) q^n = 2 (q^2;q^2)^2 (q^8;q^8)^2 / ((q)^4 (q^4;q^4))"},
        {3, 0, 1, {{2, 4}, {3, 6}, {1, -8}, {6, -3}}, "sum j(3n) q^n = (q^2;q^2)^4 (q^3;q^3)^6 / ((q)^8 (q^6;q^6)^3)"},
        {3, 1, 2, {{2, 3}, {3, 3}, {1, -7}}, "sum j(3n+1) q^n = 2 (q^2;q^2)^3 (q^3;q^3)^3 / (q)^7"},
        {3, 2, 4, {{2, 2}, {6, 3}, {1, -6}}, "sum j(3n+2) q^n = 4 (q^2;q^2)^2 (q^6;q^6)^3 / (q)^6"},
        {4, 0, 1, {{2, 19}, {1, -14}, {4, -6}}, "sum j(4n) q^n = (q^2;q^2)^19 / ((q)^14 (q^4;q^4)^6)"},
        {4, 1, 2, {{2, 13}, {1, -12}, {4, -2}}, "sum j(4n+1) q^n = 2 (q^2;q^2)^13 / ((q)^12 (q^4;q^4)^2)"},
        {4, 2, 4, {{2, 7}, {4, 2}, {1, -10}}, "sum j(4n+2) q^n = 4 (q^2;q^2)^7 (q^4;q^4)^2 / (q)^10"},
        {4, 3, 8, {{2, 1}, {4, 6}, {1, -8}}, "sum j(4n+3) q^n = 8 (q^2;q^2) (q^4;q^4)^6 / (q)^8"},
    };
    for (const auto& c : slices) {
        const std::size_t rr = c.r, ss = c.s;
        r.push_back({"eq18_" + std::to_string(rr) + std::to_string(ss), c.words, pure, 1,
                     [rr, ss](std::size_t n) { return j_slice(rr, ss, n); }, eta_builder(c.k, 0, c.factors)});
    }

    r.push_back({"eq19", "J(q) = [even slice](q^2) + q [odd slice](q^2)", pure, 1, jagged_series, [](std::size_t n) {
                     return eta(1, 0, {{8, 5}, {2, -4}, {16, -2}}, n) + eta(2, 1, {{4, 2}, {16, 2}, {2, -4}, {8, -1}}, n);
                 }});

    r.push_back({"eq20", "sum j(8n+7) q^n = 64 (q^2;q^2)^22 / (q)^23", pure, 1,
                 [](std::size_t n) { return j_slice(8, 7, n); }, eta_builder(64, 0, {{2, 22}, {1, -23}})});

    for (std::size_t c = 1; c <= 8; ++c)
        r.push_back({"eq28_" + std::to_string(c), "(-q^c;q^c) = (q^{2c};q^{2c}) / (q^c;q^c), c = " + std::to_string(c),
                     pure, 1, [c](std::size_t n) { return pochhammer_inf(c, PochSign::plus, 1, n); },
                     [c](std::size_t n) { return euler(2 * c, 1, n) * euler(c, -1, n); }});

    const auto theta4 = [](std::size_t n) { return theta_sum(1, 0, true, n); };
    r.push_back({"eq29_sums", "theta_4(t) split by n mod 3, q = t^3", substituted_order, 3, theta4, [](std::size_t n) {
                     const auto a = substituted([](std::size_t m) { return theta_sum(3, 0, true, m); }, 3, n);
                     const auto b = substituted([](std::size_t m) { return theta_sum(3, 2, true, m); }, 3, n);
                     return a - Integer(2) * shift(b, 1);
                 }});
    r.push_back({"eq29_products",
                 "1/J(t) = (q^3;q^3)^2/(q^6;q^6) - 2t (q)(q^6;q^6)^2/((q^2;q^2)(q^3;q^3)), q = t^3", substituted_order,
                 3, [](std::size_t n) { return invert(jagged_series(n)); }, [](std::size_t n) {
                     const auto a = substituted(eta_builder(1, 0, {{3, 2}, {6, -1}}), 3, n);
                     const auto b = substituted(eta_builder(1, 0, {{1, 1}, {6, 2}, {2, -1}, {3, -1}}), 3, n);
                     return a - Integer(2) * shift(b, 1);
                 }});

    r.push_back({"eq30_31", "J(t) (1 - 2t zeta_1(t^3)) = J(t^9)", substituted_order, 3,
                 [](std::size_t n) {
                     const auto z = substituted(zeta1_mod3, 3, n);
                     return jagged_series(n) * (one(n) - Integer(2) * shift(z, 1));
                 },
                 [](std::size_t n) { return substituted(jagged_series, 9, n); }});

    r.push_back({"eq32_33", "(1 - 8q zeta_1^3) (q^2;q^2)^4 (q^3;q^3)^8 / ((q)^8 (q^6;q^6)^4) = 1", pure, 1,
                 [](std::size_t n) {
                     const auto z = zeta1_mod3(n);
                     return (one(n) - Integer(8) * shift(z * z * z, 1)) * eta(1, 0, {{2, 4}, {3, 8}, {1, -8}, {6, -4}}, n);
                 },
                 one});

    r.push_back({"eq41_sums", "theta_4(t) split by n mod 4, q = t^4", substituted_order, 4, theta4, [](std::size_t n) {
                     const auto a = substituted([](std::size_t m) { return theta_sum(4, 0, false, m); }, 4, n);
                     const auto b = substituted([](std::size_t m) { return theta_sum(4, 2, false, m); }, 4, n);
                     const auto c = substituted([](std::size_t m) { return theta_sum(4, 4, false, m); }, 4, n);
                     return a - Integer(2) * shift(b, 1) + shift(c, 4);
                 }});
    r.push_back({"eq41_products", "1/J(t) as three eta quotients in q = t^4", substituted_order, 4,
                 [](std::size_t n) { return invert(jagged_series(n)); }, [](std::size_t n) {
                     const auto a = substituted(eta_builder(1, 0, {{8, 5}, {4, -2}, {16, -2}}), 4, n);
                     const auto b = substituted(eta_builder(1, 0, {{4, 2}, {2, -1}}), 4, n);
                     const auto c = substituted(eta_builder(1, 0, {{16, 2}, {8, -1}}), 4, n);
                     return a - Integer(2) * shift(b, 1) + Integer(2) * shift(c, 4);
                 }});

    r.push_back({"eq42_43", "J(t) (zeta_0(t^8) - 2t zeta_1(t^8) + 2t^4 zeta_4(t^8)) = J(t^64)", substituted_order, 8,
                 [](std::size_t n) {
                     const auto z0 = substituted(zeta0, 8, n);
                     const auto z1 = substituted(zeta1, 8, n);
                     const auto z4 = substituted(zeta4, 8, n);
                     return jagged_series(n) * (z0 - Integer(2) * shift(z1, 1) + Integer(2) * shift(z4, 4));
                 },
                 [](std::size_t n) { return substituted(jagged_series, 64, n); }});

    r.push_back({"eq47",
                 "(q^8;q^8)^2/(q^16;q^16) sum j(8n+7) q^n = 64 (2 zeta_1^7 - zeta_0^3 zeta_1^3 zeta_4 - 4q zeta_0 "
                 "zeta_1^3 zeta_4^3) (q^2;q^2)^8 (q^8;q^8)^16 / ((q)^16 (q^16;q^16)^8)",
                 pure, 1, [](std::size_t n) { return eta(1, 0, {{8, 2}, {16, -1}}, n) * j_slice(8, 7, n); },
                 [](std::size_t n) {
                     const auto z0 = zeta0(n), z1 = zeta1(n), z4 = zeta4(n);
                     const auto z1_3 = z1 * z1 * z1;
                     const auto bracket = Integer(2) * pow(z1, 7) - z0 * z0 * z0 * z1_3 * z4 -
                                          Integer(4) * shift(z0 * z1_3 * z4 * z4 * z4, 1);
                     return Integer(64) * bracket * eta(1, 0, {{2, 8}, {8, 16}, {1, -16}, {16, -8}}, n);
                 }});

    r.push_back({"eq48", "zeta_0^3 zeta_1^3 zeta_4 + 4q zeta_0 zeta_1^3 zeta_4^3 = zeta_1^7", pure, 1,
                 [](std::size_t n) {
                     const auto z0 = zeta0(n), z1 = zeta1(n), z4 = zeta4(n);
                     const auto z1_3 = z1 * z1 * z1;
                     return z0 * z0 * z0 * z1_3 * z4 + Integer(4) * shift(z0 * z1_3 * z4 * z4 * z4, 1);
                 },
                 [](std::size_t n) { return pow(zeta1(n), 7); }});

    r.push_back({"eq96_bracket_even", "(q^4;q^4)^5 / ((q^2;q^2)^2 (q^8;q^8)^2) = sum q^{2n^2}", pure, 1,
                 eta_builder(1, 0, {{4, 5}, {2, -2}, {8, -2}}), [](std::size_t n) { return theta_sum(2, 0, false, n); }});
    r.push_back({"eq96_bracket_odd", "2 (q^8;q^8)^2 / (q^4;q^4) = sum q^{2n(n+1)}", pure, 1,
                 eta_builder(2, 0, {{8, 2}, {4, -1}}), [](std::size_t n) { return theta_sum(2, 2, false, n); }});
    r.push_back({"eq96_bracket_theta3", "(q^2;q^2)^5 / ((q)^2 (q^4;q^4)^2) = sum q^{n^2}", pure, 1,
                 eta_builder(1, 0, {{2, 5}, {1, -2}, {4, -2}}), [](std::size_t n) { return theta_sum(1, 0, false, n); }});
    r.push_back({"eq96_bracket_chain", "theta_3(q)^2 = (q^2;q^2)^10 / ((q)^4 (q^4;q^4)^4)", pure, 1,
                 [](std::size_t n) {
                     const auto t = theta_sum(1, 0, false, n);
                     return t * t;
                 },
                 eta_builder(1, 0, {{2, 10}, {1, -4}, {4, -4}})});

    r.push_back({"eq97", "[sum q^{2n^2}]^2 + q [sum q^{2n(n+1)}]^2 = [sum q^{n^2}]^2", pure, 1,
                 [](std::size_t n) {
                     const auto a = theta_sum(2, 0, false, n);
                     const auto b = theta_sum(2, 2, false, n);
                     return a * a + shift(b * b, 1);
                 },
                 [](std::size_t n) {
                     const auto t = theta_sum(1, 0, false, n);
                     return t * t;
                 }});

    const auto eq100_lhs = [](std::size_t n) {
        const auto z0 = zeta0(n), z1 = zeta1(n), z4 = zeta4(n);
        return z0 * z1 * z1 * z1 * z4 * (z0 * z0 + Integer(4) * shift(z4 * z4, 1));
    };
    r.push_back({"eq100_eta",
                 "zeta_0 zeta_1^3 zeta_4 (zeta_0^2 + 4q zeta_4^2) = (q^2;q^2)^14 (q^16;q^16)^7 / ((q)^7 (q^8;q^8)^14)",
                 pure, 1, eq100_lhs, eta_builder(1, 0, {{2, 14}, {16, 7}, {1, -7}, {8, -14}})});
    r.push_back({"eq100_zeta", "zeta_0 zeta_1^3 zeta_4 (zeta_0^2 + 4q zeta_4^2) = zeta_1^7", pure, 1, eq100_lhs,
                 [](std::size_t n) { return pow(zeta1(n), 7); }});
    return r;
}

}  // namespace

const std::vector<IdentityCase>& identity_registry()
{
    static const std::vector<IdentityCase> registry = build_registry();
    return registry;
}

std::vector<const IdentityCase*> find_identities(const std::string& name)
{
    std::vector<const IdentityCase*> out;
    for (const auto& c : identity_registry())
        if (c.name == name) return {&c};
    const std::string prefix = name + "_";
    for (const auto& c : identity_registry())
        if (c.name.compare(0, prefix.size(), prefix) == 0) out.push_back(&c);
    if (out.empty()) throw std::invalid_argument("unknown identity '" + name + "'");
    return out;
}

IdentityReport verify(const IdentityCase& c, std::size_t order)
{
    IdentityReport report{c.name, c.paper_ref, order, false, std::nullopt, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto lhs = c.lhs(order);
        const auto rhs = c.rhs(order);
        if (lhs.order() < order || rhs.order() < order)
            throw std::logic_error("builder returned fewer than the requested coefficients");
        const auto at = first_mismatch(lhs.truncated(order), rhs.truncated(order));
        report.passed = !at.has_value();
        if (at) report.mismatch = Mismatch{*at, lhs[*at], rhs[*at]};
    } catch (const std::exception& e) {
        report.error = e.what();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<IdentityReport> verify(const std::string& name, std::size_t order)
{
    std::vector<IdentityReport> out;
    for (const auto* c : find_identities(name)) out.push_back(verify(*c, order == 0 ? c->default_order : order));
    return out;
}

std::vector<IdentityReport> verify_all(std::size_t order)
{
    std::vector<IdentityReport> out;
    for (const auto& c : identity_registry()) out.push_back(verify(c, std::max(c.default_order, order)));
    return out;
}

}  // namespace jagged
