#include "jagged/acceptance.hpp"

#include "jagged/counting.hpp"
#include "jagged/families.hpp"
#include "jagged/genfun.hpp"
#include "jagged/identities.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jagged {

namespace {

class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }

    bool passed() const { return failures_.empty(); }

    std::string detail() const
    {
        std::string out;
        for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + ("failed: " + f);
        for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
        return out;
    }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string str(const Integer& v) { return v.get_str(); }

std::vector<int> digits(const std::string& s)
{
    std::vector<int> d;
    for (char c : s) d.push_back(c - '0');
    return d;
}

void golden_length_five(Checks& c)
{
    const std::vector<std::string> golden = {"10101", "20101", "11101", "30101", "21101", "11111",
                                             "12101", "40101", "31101", "22101", "21111", "12111",
                                             "21201", "50101", "41101", "32101", "31111", "22111",
                                             "23101", "21211", "12121", "31201", "22201"};
    std::set<std::vector<int>> expected;
    for (const auto& s : golden) expected.insert(digits(s));
    std::set<std::vector<int>> got;
    std::size_t total = 0;
    for (long n = 0; n <= 7; ++n)
        for (const auto& p : enumerate(family_01(), n, 5)) {
            got.insert(p.parts);
            ++total;
        }
    c.expect(total == 23, "expected 23 tuples, enumerated " + std::to_string(total));
    c.expect(got == expected, "tuple set differs from the golden list");
    c.note(std::to_string(total) + " tuples");
}

void golden_polynomial(Checks& c)
{
    const long expected[] = {0, 1, 2, 2, 1, 1, 1, 0};
    const auto form = closed_form("01", 7, 4);
    const auto tables = jk_tables(7, 3);
    const auto counts = enumeration_counts(family_01(), 7, 4);
    for (long m = 0; m <= 7; ++m) {
        const std::string at = "z^" + std::to_string(m) + " q^3";
        c.expect(form.at(m, 3) == expected[m], "closed form at " + at);
        c.expect(tables.j.at(m, 3) == expected[m], "recurrence at " + at);
        c.expect(counts.at(m, 3) == expected[m], "enumeration at " + at);
    }
    c.note("z + 2z^2 + 2z^3 + z^4 + z^5 + z^6 three ways");
}

void jagged_counts(Checks& c)
{
    const auto e = j_by_squares(15);
    c.expect(e.total == 1472, "j(15) by squares is " + str(e.total));
    const int parts[] = {4, 6, 7, 9, 12, 15};
    const long contributions[] = {-16 * 12, -64 * 20, 128 * 7, 512 * 36, -4096 * 12, 32768};
    bool breakdown = e.terms.size() == 6;
    for (std::size_t i = 0; breakdown && i < 6; ++i)
        breakdown = e.terms[i].parts == parts[i] && e.terms[i].contribution == contributions[i];
    c.expect(breakdown, "per-p breakdown of j(15)");

    const std::size_t N = 25;
    const auto rec = j_by_recurrence(N);
    c.expect(rec[15] == 1472, "j(15) by recurrence");
    c.expect(rec == j_by_convolution(N), "convolution disagrees with recurrence");
    c.expect(rec == j_by_series(N), "series expansion disagrees with recurrence");
    for (long n = 1; n <= static_cast<long>(N); ++n) {
        const auto brute = enumerate(family_01(), n).size();
        c.expect(rec[n] == static_cast<unsigned long>(brute), "enumeration at n = " + std::to_string(n));
    }
    c.note("j(15) = 1472, four routes agree for n <= 25 (j(25) = " + str(rec[N]) + ")");
}

void congruences(Checks& c)
{
    const auto j = j_by_recurrence(500);
    const auto even = congruence_verify(j, 1, 0, 2, 300, 2);
    c.expect(even.passed, "j(n) even for 2 <= n <= 300");
    const auto squares = verify_square_bound(300);
    c.expect(squares.passed, "2^min_squares(n) | j(n) for n <= 300");
    const auto cor = congruence_verify(j, 8, 7, 64, 500);
    c.expect(cor.passed, "64 | j(8n+7) for 8n+7 <= 500");

    const std::pair<long, long> worked[] = {{2, 4}, {3, 4}, {5, 8}};
    for (const auto& [s, modulus] : worked) {
        const auto p = congruence_predict(7, s);
        std::ostringstream what;
        what << "predict(7," << s << ") = " << p.modulus << ", expected " << modulus;
        c.expect(p.modulus == modulus, what.str());
    }
    c.note("j(9) = " + str(j[9]) + " and j(10) = " + str(j[10]) + " bound the (7,2) and (7,3) moduli");
}

void slice_identities(Checks& c)
{
    std::size_t count = 0;
    for (const char* group : {"eq18", "eq20"})
        for (const auto& r : verify(group, 30)) {
            ++count;
            c.expect(r.passed, r.name + (r.error.empty() ? "" : " (" + r.error + ")"));
        }
    c.note(std::to_string(count) + " slice identities at order 30");
}

void identity_suite(Checks& c)
{
    std::size_t count = 0;
    for (const char* name : {"eq6", "eq14", "eq17", "eq19", "eq28", "eq29", "eq30_31", "eq32_33", "eq41", "eq42_43",
                             "eq47", "eq48", "eq96_bracket", "eq97", "eq100"})
        for (const auto& r : verify(name)) {
            ++count;
            c.expect(r.passed && r.order >= 100, r.name + (r.error.empty() ? "" : " (" + r.error + ")"));
        }
    c.note(std::to_string(count) + " entries at default orders");
}

void length_graded(Checks& c)
{
    const std::size_t N = 17;
    for (const auto& f : {family_01(), family_02(), family_012(), family_001()}) {
        const std::size_t M = max_length(f, N - 1);
        const auto mismatch = first_mismatch(closed_form(f.name(), M, N), enumeration_counts(f, M, N));
        std::string what = f.name() + " closed form vs enumeration";
        if (mismatch) what += " at z^" + std::to_string(mismatch->first) + " q^" + std::to_string(mismatch->second);
        c.expect(!mismatch, what);
    }
    c.expect(closed_form("02", 5, 10).at(5, 9) == 7, "02 count at (5, 9) is 7");
    c.note("01, 02, 012, 001 for n <= 16 and all lengths");
}

void multisums(Checks& c)
{
    const std::size_t M = 6, N = 16;
    struct Pair {
        MultiSum sum;
        std::string family;
        bool shifted;
    };
    const Pair pairs[] = {{MultiSum::staircase01, "01", true},   {MultiSum::jagged02, "02", false},
                          {MultiSum::jagged012, "012", false},   {MultiSum::restricted02, "02", true},
                          {MultiSum::restricted012, "012", true}, {MultiSum::restricted001, "001", true}};
    for (const auto& p : pairs) {
        const auto f = parse_family(p.family);
        const auto form = closed_form(p.family, M, N + 1);
        const auto target = p.shifted ? staircase_transform(form, f.staircase()) : form;
        c.expect(multisum(p.sum, M, N) == target, to_string(p.sum));
    }
    for (const char* name : {"01", "02", "012", "001"}) {
        const auto f = parse_family(name);
        const auto shifted = staircase_transform(closed_form(name, M, N + 1), f.staircase());
        c.expect(restricted_counts(restricted_conditions(f), M, N) == shifted,
                 std::string("restricted partitions for ") + name);
    }
    c.note("six multi-sums and four restricted enumerations at (6, 16)");
}

void qdiff(Checks& c)
{
    const std::size_t M = 8, N = 14;
    const std::pair<std::function<QDiffSystem()>, std::string> systems[] = {
        {system_01, "01"}, {system_02, "02"}, {system_012, "012"}, {system_001, "001"}};
    for (const auto& [make, name] : systems)
        c.expect(qdiff_solve(make(), M, N).at("J") == closed_form(name, M, N), name + " system");

    const std::size_t M3 = 6, N3 = 18;
    const auto A = qdiff_solve(system_staircase01(), M3, N3).at("A");
    c.expect(A == multisum(MultiSum::staircase01, M3, N3), "third-order system vs staircase multi-sum");
    auto first = dilate(A, 1);
    mul_factor(first, 1, 1, 1);
    const auto rhs = first + scale(dilate(A, 2), 1, 2, 2) - scale(dilate(A, 3), 1, 3, 5);
    c.expect(A == rhs, "third-order relation");
    c.note("four first-order systems at (8, 14), third-order system at (6, 18)");
}

void at_most(Checks& c)
{
    const auto t = jk_tables(20, 40);
    std::size_t checked = 0;
    for (long m = 0; m <= 20; ++m)
        for (long n = 0; n <= 20; ++n) {
            const auto v = j_at_most(t, m, n);
            c.expect(v.by_difference == v.by_k, "m = " + std::to_string(m) + ", n = " + std::to_string(n));
            ++checked;
        }
    c.note(std::to_string(checked) + " pairs");
}

void ramanujan(Checks& c)
{
    const auto j = j_by_recurrence(100);
    auto rel = [&](long n) { return std::abs(ramanujan_estimate(n) / j[n].get_d() - 1.0); };
    double worst = 0, early = 0, late = 0;
    for (long n = 15; n <= 100; ++n) {
        worst = std::max(worst, rel(n));
        (n <= 57 ? early : late) += rel(n);
    }
    c.expect(worst < 0.02, "relative error below 2% on [15, 100]");
    c.expect(late < early && rel(100) < rel(10), "error improves with n");
    std::ostringstream note;
    note << "max relative error " << worst << ", error at n = 100 is " << rel(100);
    c.note(note.str());
}

struct Criterion {
    const char* title;
    double budget;
    void (*run)(Checks&);
};

const Criterion criteria[kCriterionCount] = {
    {"golden length-5 01-partitions", 1, golden_length_five},
    {"golden q^3 polynomial three ways", 1, golden_polynomial},
    {"j(15) breakdown and four routes to j(n)", 30, jagged_counts},
    {"congruences and predictor", 5, congruences},
    {"slice identities", 10, slice_identities},
    {"identity suite", 60, identity_suite},
    {"length-graded closed forms vs enumeration", 60, length_graded},
    {"multi-sums and restricted partitions", 30, multisums},
    {"q-difference systems", 0, qdiff},
    {"at-most-m counts two ways", 0, at_most},
    {"Ramanujan estimate", 0, ramanujan},
};

}  // namespace

CriterionResult run_criterion(int id)
{
    if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
    const auto& spec = criteria[id - 1];
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
        spec.run(checks);
    } catch (const std::exception& e) {
        checks.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (spec.budget > 0 && seconds >= spec.budget) checks.expect(false, "over the time budget");
    return {id, spec.title, checks.passed(), checks.detail(), seconds, spec.budget};
}

std::vector<CriterionResult> run_acceptance()
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

}  // namespace jagged
