#include "jagged/genfun.hpp"

#include <algorithm>

namespace jagged {

BiSeries::BiSeries(std::size_t z_max, std::size_t q_order) : rows_(z_max + 1, IntSeries(q_order)), q_order_(q_order) {}

BiSeries BiSeries::one(std::size_t z_max, std::size_t q_order)
{
    return monomial(1, 0, 0, z_max, q_order);
}

BiSeries BiSeries::monomial(const Integer& c, std::size_t z_power, std::size_t q_power, std::size_t z_max,
                            std::size_t q_order)
{
    BiSeries out(z_max, q_order);
    out.add_to(z_power, q_power, c);
    return out;
}

Integer BiSeries::at(std::size_t m, std::size_t n) const
{
    if (m >= rows_.size() || n >= q_order_) return 0;
    return rows_[m][n];
}

void BiSeries::set_row(std::size_t m, IntSeries row)
{
    if (m >= rows_.size()) throw std::out_of_range("BiSeries::set_row: z-degree beyond z_max");
    rows_[m] = row.truncated(q_order_);
    if (rows_[m].order() < q_order_) throw std::invalid_argument("BiSeries::set_row: row shorter than q_order");
}

void BiSeries::add_to(std::size_t m, std::size_t n, const Integer& c)
{
    if (m >= rows_.size() || n >= q_order_) return;
    std::vector<Integer> coeffs(rows_[m].coeffs().begin(), rows_[m].coeffs().end());
    coeffs[n] += c;
    rows_[m] = IntSeries(std::move(coeffs));
}

BiSeries BiSeries::truncated(std::size_t z_max, std::size_t q_order) const
{
    const std::size_t m_top = std::min(z_max, this->z_max());
    const std::size_t n_top = std::min(q_order, q_order_);
    BiSeries out(m_top, n_top);
    for (std::size_t m = 0; m <= m_top; ++m) out.rows_[m] = rows_[m].truncated(n_top);
    return out;
}

namespace {

// Mutable dense grid used by the in-place factor routines and the builders.
struct Grid {
    std::size_t z_max;
    std::size_t q_order;
    std::vector<std::vector<Integer>> cells;

    explicit Grid(const BiSeries& x) : z_max(x.z_max()), q_order(x.q_order()), cells(x.z_max() + 1)
    {
        for (std::size_t m = 0; m <= z_max; ++m) cells[m].assign(x.row(m).coeffs().begin(), x.row(m).coeffs().end());
    }

    Grid(std::size_t m, std::size_t n) : z_max(m), q_order(n), cells(m + 1, std::vector<Integer>(n)) {}

    BiSeries to_series() const
    {
        BiSeries out(z_max, q_order);
        for (std::size_t m = 0; m <= z_max; ++m) out.set_row(m, IntSeries(cells[m]));
        return out;
    }
};

std::size_t common_z(const BiSeries& a, const BiSeries& b) { return std::min(a.z_max(), b.z_max()); }
std::size_t common_q(const BiSeries& a, const BiSeries& b) { return std::min(a.q_order(), b.q_order()); }

}  // namespace

BiSeries operator+(const BiSeries& a, const BiSeries& b)
{
    BiSeries out(common_z(a, b), common_q(a, b));
    for (std::size_t m = 0; m <= out.z_max(); ++m) out.set_row(m, a.row(m) + b.row(m));
    return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b)
{
    BiSeries out(common_z(a, b), common_q(a, b));
    for (std::size_t m = 0; m <= out.z_max(); ++m) out.set_row(m, a.row(m) - b.row(m));
    return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
    const std::size_t M = common_z(a, b);
    const std::size_t N = common_q(a, b);
    BiSeries out(M, N);
    for (std::size_t m = 0; m <= M; ++m) {
        IntSeries acc(N);
        for (std::size_t i = 0; i <= m; ++i) acc = acc + a.row(i) * b.row(m - i);
        out.set_row(m, acc);
    }
    return out;
}

BiSeries operator*(const Integer& c, const BiSeries& a)
{
    BiSeries out(a.z_max(), a.q_order());
    for (std::size_t m = 0; m <= a.z_max(); ++m) out.set_row(m, c * a.row(m));
    return out;
}

bool operator==(const BiSeries& a, const BiSeries& b)
{
    return !first_mismatch(a, b).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const BiSeries& a, const BiSeries& b)
{
    const std::size_t N = common_q(a, b);
    for (std::size_t m = 0; m <= common_z(a, b); ++m)
        for (std::size_t n = 0; n < N; ++n)
            if (a.row(m)[n] != b.row(m)[n]) return std::make_pair(m, n);
    return std::nullopt;
}

BiSeries scale(const BiSeries& x, const Integer& c, std::size_t z_power, std::size_t q_power)
{
    BiSeries out(x.z_max(), x.q_order());
    for (std::size_t m = 0; m + z_power <= x.z_max(); ++m) out.set_row(m + z_power, c * shift(x.row(m), q_power));
    return out;
}

BiSeries dilate(const BiSeries& x, std::size_t k)
{
    BiSeries out(x.z_max(), x.q_order());
    for (std::size_t m = 0; m <= x.z_max(); ++m) out.set_row(m, shift(x.row(m), k * m));
    return out;
}

void mul_factor(BiSeries& x, int sign, std::size_t a, std::size_t b)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("mul_factor: sign must be +1 or -1");
    if (a == 0 && b == 0) throw std::invalid_argument("mul_factor: factor must be non-constant");
    Grid g(x);
    for (std::size_t m = g.z_max + 1; m-- > a;)
        for (std::size_t n = g.q_order; n-- > b;) {
            if (sign > 0)
                g.cells[m][n] += g.cells[m - a][n - b];
            else
                g.cells[m][n] -= g.cells[m - a][n - b];
        }
    x = g.to_series();
}

void div_factor(BiSeries& x, int sign, std::size_t a, std::size_t b)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("div_factor: sign must be +1 or -1");
    if (a == 0 && b == 0) throw std::invalid_argument("div_factor: factor must be non-constant");
    // y (1 + sign t) = x  =>  y = x - sign t y, solved in increasing (m, n).
    Grid g(x);
    for (std::size_t m = a; m <= g.z_max; ++m)
        for (std::size_t n = b; n < g.q_order; ++n) {
            if (sign > 0)
                g.cells[m][n] -= g.cells[m - a][n - b];
            else
                g.cells[m][n] += g.cells[m - a][n - b];
        }
    x = g.to_series();
}

IntSeries at_z_one(const BiSeries& x)
{
    IntSeries acc(x.q_order());
    for (std::size_t m = 0; m <= x.z_max(); ++m) acc = acc + x.row(m);
    return acc;
}

namespace {

// Applies prod_{k >= 0} (1 + sign z^a q^{b + k step})^{+1 or -1}, keeping factors that reach the grid.
void apply_product(BiSeries& x, int sign, std::size_t a, std::size_t b, std::size_t step, bool divide)
{
    if (a > x.z_max()) return;
    for (std::size_t e = b; e < x.q_order(); e += step) {
        if (divide)
            div_factor(x, sign, a, e);
        else
            mul_factor(x, sign, a, e);
    }
}

}  // namespace

BiSeries closed_form(const std::string& family, std::size_t z_max, std::size_t q_order)
{
    BiSeries x = BiSeries::one(z_max, q_order);
    if (family == "01" || family == "01k") {
        // (-zq)_inf / (z^2 q)_inf, and K drops the first denominator factor.
        apply_product(x, 1, 1, 1, 1, false);
        apply_product(x, -1, 2, family == "01" ? 1 : 2, 1, true);
    } else if (family == "02") {
        apply_product(x, -1, 3, 6, 3, false);
        apply_product(x, -1, 1, 2, 1, true);
        apply_product(x, -1, 2, 2, 1, true);
    } else if (family == "012") {
        apply_product(x, 1, 1, 2, 1, false);
        apply_product(x, 1, 2, 3, 1, false);
        apply_product(x, -1, 3, 3, 1, true);
    } else if (family == "001") {
        apply_product(x, 1, 2, 1, 2, false);
        apply_product(x, -1, 1, 1, 1, true);
        apply_product(x, -1, 3, 1, 3, true);
        apply_product(x, -1, 3, 2, 3, true);
    } else {
        throw std::invalid_argument("closed_form: no product form for family '" + family + "'");
    }
    return x;
}

BiSeries enumeration_counts(const FamilySpec& f, std::size_t z_max, std::size_t q_order)
{
    Grid g(z_max, q_order);
    if (q_order > 0) g.cells[0][0] = 1;
    for (std::size_t n = 1; n < q_order; ++n)
        for (const auto& p : enumerate(f, static_cast<long>(n)))
            if (p.length() <= z_max) g.cells[p.length()][n] += 1;
    return g.to_series();
}

BiSeries restricted_counts(const std::vector<Gap>& conditions, std::size_t z_max, std::size_t q_order)
{
    Grid g(z_max, q_order);
    for (std::size_t m = 0; m <= z_max; ++m)
        for (std::size_t n = 0; n < q_order; ++n)
            g.cells[m][n] = static_cast<unsigned long>(enumerate_restricted(conditions, static_cast<long>(n), m).size());
    return g.to_series();
}

BiSeries staircase_transform(const BiSeries& x, const std::function<long(long)>& sigma)
{
    long lowest = 0;
    for (std::size_t m = 0; m <= x.z_max(); ++m) lowest = std::min(lowest, sigma(static_cast<long>(m)));
    const std::size_t drop = static_cast<std::size_t>(-lowest);
    const std::size_t N = x.q_order() > drop ? x.q_order() - drop : 0;

    Grid g(x.z_max(), N);
    for (std::size_t m = 0; m <= x.z_max(); ++m) {
        const long s = sigma(static_cast<long>(m));
        const auto& row = x.row(m);
        for (std::size_t n = 0; n < row.order(); ++n) {
            const long target = static_cast<long>(n) + s;
            if (target < 0) {
                if (sgn(row[n]) != 0)
                    throw std::invalid_argument("staircase_transform: shift moves a non-zero coefficient below q^0");
                continue;
            }
            if (static_cast<std::size_t>(target) < N) g.cells[m][target] = row[n];
        }
    }
    return g.to_series();
}

BiSeries staircase_transform(const BiSeries& x, const Staircase& s)
{
    return staircase_transform(x, [&](long m) { return s.weight(m); });
}

namespace {

class MultiSumBuilder {
public:
    MultiSumBuilder(std::size_t z_max, std::size_t q_order) : grid_(z_max, q_order) {}

    // Visits every index tuple whose weighted z-degree is at most z_max.
    void for_each(const std::vector<std::size_t>& z_weights, const std::function<void(const std::vector<long>&)>& visit)
    {
        std::vector<long> idx(z_weights.size(), 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t used) {
            if (pos == z_weights.size()) {
                visit(idx);
                return;
            }
            for (long m = 0; used + m * z_weights[pos] <= grid_.z_max; ++m) {
                idx[pos] = m;
                rec(pos + 1, used + m * z_weights[pos]);
            }
            idx[pos] = 0;
        };
        rec(0, 0);
    }

    // Adds sign z^L q^e / prod (q^c; q^c)_m.
    void add(long sign, std::size_t L, long e, const std::vector<std::pair<std::size_t, long>>& denominators)
    {
        if (e < 0) throw std::logic_error("multisum: negative q-exponent");
        if (L > grid_.z_max || static_cast<std::size_t>(e) >= grid_.q_order) return;
        IntSeries term = IntSeries::monomial(sign, static_cast<std::size_t>(e), grid_.q_order);
        for (const auto& [c, m] : denominators)
            if (m > 0) term = term * inverse_poch(c, static_cast<std::size_t>(m));
        for (std::size_t n = 0; n < grid_.q_order; ++n) grid_.cells[L][n] += term[n];
    }

    BiSeries result() const { return grid_.to_series(); }

private:
    const IntSeries& inverse_poch(std::size_t c, std::size_t m)
    {
        const auto key = std::make_pair(c, m);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, invert(pochhammer_fin(c, m, grid_.q_order))).first;
        return it->second;
    }

    Grid grid_;
    std::map<std::pair<std::size_t, std::size_t>, IntSeries> cache_;
};

}  // namespace

BiSeries multisum(MultiSum which, std::size_t z_max, std::size_t q_order)
{
    MultiSumBuilder b(z_max, q_order);
    switch (which) {
    case MultiSum::staircase01:
        b.for_each({1, 2}, [&](const std::vector<long>& i) {
            const long m0 = i[0], m1 = i[1];
            b.add(1, m0 + 2 * m1, (m0 + m1) * (m0 + m1) + m1 * m1, {{1, m0}, {1, m1}});
        });
        break;
    case MultiSum::jagged02:
    case MultiSum::restricted02:
        b.for_each({1, 2, 3}, [&](const std::vector<long>& i) {
            const long m1 = i[0], m2 = i[1], m3 = i[2];
            const long L = m1 + 2 * m2 + 3 * m3;
            long e = 2 * m1 + 2 * m2 + 3 * m3 * (m3 + 3) / 2;
            if (which == MultiSum::restricted02) e += L * (L - 2);
            b.add(m3 % 2 == 0 ? 1 : -1, L, e, {{1, m1}, {1, m2}, {3, m3}});
        });
        break;
    case MultiSum::jagged012:
    case MultiSum::restricted012:
        b.for_each({1, 2, 3}, [&](const std::vector<long>& i) {
            const long m1 = i[0], m2 = i[1], m3 = i[2];
            const long L = m1 + 2 * m2 + 3 * m3;
            long e = m1 * (m1 + 3) / 2 + m2 * (m2 + 5) / 2 + 3 * m3;
            if (which == MultiSum::restricted012) e += L * (L - 3) / 2;
            b.add(1, L, e, {{1, m1}, {1, m2}, {1, m3}});
        });
        break;
    case MultiSum::restricted001:
        b.for_each({2, 1, 3, 3}, [&](const std::vector<long>& i) {
            const long m0 = i[0], m1 = i[1], m2 = i[2], m3 = i[3];
            const long L = 2 * m0 + m1 + 3 * m2 + 3 * m3;
            const long beta = m0 * m0 + m1 + m2 + 2 * m3 + L * (L - 1) / 2;
            b.add(1, L, beta, {{2, m0}, {1, m1}, {3, m2}, {3, m3}});
        });
        break;
    }
    return b.result();
}

namespace {

const std::vector<std::pair<MultiSum, std::string>>& multisum_names()
{
    static const std::vector<std::pair<MultiSum, std::string>> names = {
        {MultiSum::staircase01, "staircase01"},     {MultiSum::jagged02, "jagged02"},
        {MultiSum::restricted02, "restricted02"},   {MultiSum::jagged012, "jagged012"},
        {MultiSum::restricted012, "restricted012"}, {MultiSum::restricted001, "restricted001"},
    };
    return names;
}

}  // namespace

MultiSum parse_multisum(const std::string& name)
{
    for (const auto& [which, text] : multisum_names())
        if (text == name) return which;
    throw std::invalid_argument("unknown multi-sum '" + name + "'");
}

std::string to_string(MultiSum which)
{
    for (const auto& [w, text] : multisum_names())
        if (w == which) return text;
    return "?";
}

namespace {

struct ResolvedTerm {
    Integer coefficient;
    std::size_t z_power;
    std::size_t q_power;
    std::size_t unknown;
    std::size_t dilation;
};

std::vector<std::vector<ResolvedTerm>> resolve(const QDiffSystem& sys)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        if (!index.emplace(sys.unknowns[i], i).second)
            throw IllPosedSystem("duplicate unknown '" + sys.unknowns[i] + "'");
    if (index.empty()) throw IllPosedSystem("system has no unknowns");

    std::vector<std::vector<ResolvedTerm>> eqs(sys.unknowns.size());
    for (const auto& [name, terms] : sys.equations) {
        const auto lhs = index.find(name);
        if (lhs == index.end()) throw IllPosedSystem("equation for undeclared unknown '" + name + "'");
        for (const auto& t : terms) {
            const auto ref = index.find(t.unknown);
            if (ref == index.end()) throw IllPosedSystem("term references undeclared unknown '" + t.unknown + "'");
            eqs[lhs->second].push_back({t.coefficient, t.z_power, t.q_power, ref->second, t.dilation});
        }
    }
    for (std::size_t i = 0; i < eqs.size(); ++i)
        if (sys.equations.find(sys.unknowns[i]) == sys.equations.end())
            throw IllPosedSystem("no equation for unknown '" + sys.unknowns[i] + "'");

    // Undilated weight-zero references must not form a cycle, or iteration can loop forever.
    std::vector<int> state(eqs.size(), 0);
    std::function<void(std::size_t)> visit = [&](std::size_t u) {
        state[u] = 1;
        for (const auto& t : eqs[u]) {
            if (t.z_power + t.q_power != 0 || t.dilation != 0) continue;
            if (state[t.unknown] == 1)
                throw IllPosedSystem("cycle of weight-zero references through '" + sys.unknowns[u] + "'");
            if (state[t.unknown] == 0) visit(t.unknown);
        }
        state[u] = 2;
    };
    for (std::size_t u = 0; u < eqs.size(); ++u)
        if (state[u] == 0) visit(u);
    return eqs;
}

}  // namespace

std::map<std::string, BiSeries> qdiff_solve(const QDiffSystem& system, std::size_t z_max, std::size_t q_order)
{
    const auto eqs = resolve(system);

    // Row 0 is never fixed by the equations (dilation leaves it alone), so it is
    // pinned to the empty partition for every unknown and checked for consistency.
    const IntSeries empty_only = IntSeries::constant(1, q_order);
    std::vector<BiSeries> cur(eqs.size(), BiSeries::one(z_max, q_order));

    const std::size_t cap = (z_max + 1) * (q_order + 1) + 1;
    for (std::size_t iter = 0; iter < cap; ++iter) {
        std::vector<BiSeries> next;
        next.reserve(eqs.size());
        bool row0_consistent = true;
        for (const auto& terms : eqs) {
            BiSeries acc(z_max, q_order);
            for (const auto& t : terms)
                acc = acc + scale(dilate(cur[t.unknown], t.dilation), t.coefficient, t.z_power, t.q_power);
            row0_consistent = row0_consistent && acc.row(0) == empty_only;
            acc.set_row(0, empty_only);
            next.push_back(std::move(acc));
        }

        bool settled = true;
        for (std::size_t i = 0; i < eqs.size() && settled; ++i) settled = next[i] == cur[i];
        cur = std::move(next);
        if (settled) {
            if (!row0_consistent) throw IllPosedSystem("system is inconsistent with a single empty partition");
            std::map<std::string, BiSeries> out;
            for (std::size_t i = 0; i < eqs.size(); ++i) out.emplace(system.unknowns[i], cur[i]);
            return out;
        }
    }
    throw IllPosedSystem("q-difference iteration did not settle");
}

QDiffSystem system_01()
{
    return {{"J", "K"},
            {
                {"J", {{1, 2, 1, "J"}, {1, 0, 0, "K"}}},
                {"K", {{1, 1, 1, "K"}, {1, 0, 0, "J", 1}}},
            }};
}

QDiffSystem system_02()
{
    return {{"J", "K", "L"},
            {
                {"J", {{1, 2, 2, "J"}, {1, 0, 0, "K"}}},
                {"K", {{1, 2, 3, "K"}, {1, 0, 0, "L"}, {1, 2, 4, "J", 1}}},
                {"L", {{1, 1, 2, "L"}, {1, 0, 0, "K", 1}}},
            }};
}

QDiffSystem system_012()
{
    return {{"J", "K", "L", "M", "N"},
            {
                {"J", {{1, 3, 3, "J"}, {1, 0, 0, "K"}}},
                {"K", {{1, 3, 4, "K"}, {1, 2, 3, "L"}, {1, 0, 0, "L"}}},
                {"L", {{1, 1, 2, "M"}, {1, 0, 0, "J", 1}}},
                {"M", {{1, 2, 3, "L"}, {1, 0, 0, "N"}}},
                {"N", {{1, 1, 2, "N"}, {1, 0, 0, "K", 1}}},
            }};
}

QDiffSystem system_001()
{
    return {{"J", "K", "L"},
            {
                {"J", {{1, 3, 1, "J"}, {1, 2, 1, "K"}, {1, 0, 0, "K"}}},
                {"K", {{1, 3, 2, "K"}, {1, 0, 0, "L"}}},
                {"L", {{1, 1, 1, "L"}, {1, 0, 0, "J", 1}}},
            }};
}

QDiffSystem system_staircase01()
{
    return {{"A", "B", "C"},
            {
                {"A", {{1, 0, 0, "A", 1}, {1, 1, 1, "B"}}},
                {"B", {{1, 1, 1, "A", 2}, {1, 0, 0, "C"}}},
                {"C", {{1, 0, 0, "A", 2}, {1, 1, 2, "C", 1}}},
            }};
}

}  // namespace jagged
