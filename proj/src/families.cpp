#include "jagged/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace jagged {

namespace {

// x_j >= x_{j+distance} + offset. Jagged constraints have offset = -slack,
// restricted-partition conditions have offset = gap.
struct Bound {
    int distance;
    int offset;
};

Staircase default_staircase(const std::vector<Constraint>& constraints, int tail_min)
{
    int slope = 1;
    for (const auto& c : constraints)
        if (c.distance > 0) slope = std::max(slope, (c.slack + c.distance - 1) / c.distance);
    return Staircase{slope, 1 - tail_min};
}

std::vector<Bound> bounds_of(const FamilySpec& spec)
{
    std::vector<Bound> b;
    for (const auto& c : spec.constraints()) b.push_back({c.distance, -c.slack});
    return b;
}

// Depth-first construction from the last position backward. Every bound
// looks forward, so when position p is filled all the values it depends on
// are already fixed.
class Backtracker {
public:
    Backtracker(std::vector<Bound> bounds, int tail_min, std::size_t length)
        : bounds_(std::move(bounds)), tail_min_(tail_min), x_(length), scratch_(length)
    {
    }

    std::vector<std::vector<int>> run(long weight)
    {
        out_.clear();
        if (!x_.empty() && weight >= 0) fill(static_cast<long>(x_.size()) - 1, weight);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    long lower(long pos, const std::vector<int>& v) const
    {
        const long len = static_cast<long>(x_.size());
        long lo = pos == len - 1 ? tail_min_ : 0;
        for (const auto& b : bounds_)
            if (pos + b.distance < len) lo = std::max(lo, static_cast<long>(v[pos + b.distance]) + b.offset);
        return lo;
    }

    // Least total weight of positions [0, pos) given x_[pos..]. Each lower
    // bound is monotone in the later entries, so the greedy fill is minimal.
    long min_prefix(long pos)
    {
        std::copy(x_.begin() + pos, x_.end(), scratch_.begin() + pos);
        long total = 0;
        for (long p = pos - 1; p >= 0; --p) {
            scratch_[p] = static_cast<int>(lower(p, scratch_));
            total += scratch_[p];
        }
        return total;
    }

    void fill(long pos, long remaining)
    {
        const long lo = lower(pos, x_);
        if (pos == 0) {
            if (remaining >= lo) {
                x_[0] = static_cast<int>(remaining);
                out_.push_back(x_);
            }
            return;
        }
        for (long v = lo; v <= remaining; ++v) {
            x_[pos] = static_cast<int>(v);
            if (v + min_prefix(pos) > remaining) break;
            fill(pos - 1, remaining - v);
        }
    }

    std::vector<Bound> bounds_;
    int tail_min_;
    std::vector<int> x_;
    std::vector<int> scratch_;
    std::vector<std::vector<int>> out_;
};

int parse_int(std::string_view s, const std::string& context)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in family spec '" + context + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

FamilySpec::FamilySpec(std::string name, std::vector<Constraint> constraints, int tail_min)
    : FamilySpec(name, constraints, tail_min, default_staircase(constraints, tail_min))
{
}

FamilySpec::FamilySpec(std::string name, std::vector<Constraint> constraints, int tail_min, Staircase staircase)
    : name_(std::move(name)), constraints_(std::move(constraints)), tail_min_(tail_min), staircase_(staircase)
{
    if (constraints_.empty()) throw std::invalid_argument("family '" + name_ + "' has no constraints");
    bool anchored = false;
    for (const auto& c : constraints_) {
        if (c.distance < 1) throw std::invalid_argument("constraint distance must be >= 1");
        if (c.slack < 0) throw std::invalid_argument("constraint slack must be >= 0");
        anchored = anchored || c.slack == 0;
    }
    // Without a zero-slack distance the parts can grow without bound.
    if (!anchored) throw std::invalid_argument("family '" + name_ + "' needs a constraint with slack 0");
    if (tail_min_ < 1) throw std::invalid_argument("tail minimum must be >= 1");
}

FamilySpec family_01() { return FamilySpec("01", {{1, 1}, {2, 0}}, 1); }
FamilySpec family_02() { return FamilySpec("02", {{1, 2}, {2, 0}}, 2); }
FamilySpec family_012() { return FamilySpec("012", {{1, 1}, {2, 2}, {3, 0}}, 2); }

FamilySpec family_001()
{
    auto f = family_0p1(2);
    return FamilySpec("001", f.constraints(), f.tail_min(), f.staircase());
}

FamilySpec family_0p1(int p)
{
    if (p < 1) throw std::invalid_argument("0^p1 family needs p >= 1");
    std::vector<Constraint> c;
    for (int s = 1; s <= p; ++s) c.push_back({s, 1});
    c.push_back({p + 1, 0});
    return FamilySpec("0p1:" + std::to_string(p), std::move(c), 1);
}

FamilySpec parse_family(const std::string& text)
{
    if (text == "01") return family_01();
    if (text == "02") return family_02();
    if (text == "012") return family_012();
    if (text == "001") return family_001();
    if (text.rfind("0p1:", 0) == 0) return family_0p1(parse_int(std::string_view(text).substr(4), text));

    const auto sections = split(text, ';');
    std::vector<Constraint> constraints;
    for (auto item : split(sections[0], ',')) {
        const auto colon = item.find(':');
        if (item.empty() || item[0] != 'd' || colon == std::string_view::npos)
            throw std::invalid_argument("expected d<distance>:<slack> in family spec '" + text + "'");
        constraints.push_back({parse_int(item.substr(1, colon - 1), text), parse_int(item.substr(colon + 1), text)});
    }
    int tail = 1;
    for (std::size_t i = 1; i < sections.size(); ++i) {
        if (sections[i].rfind("tail=", 0) != 0)
            throw std::invalid_argument("unknown section '" + std::string(sections[i]) + "' in family spec");
        tail = parse_int(sections[i].substr(5), text);
    }
    return FamilySpec(text, std::move(constraints), tail);
}

long JaggedPartition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0L); }
long Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

std::string to_string(const std::vector<int>& parts)
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

bool is_valid(const FamilySpec& spec, const JaggedPartition& p)
{
    const auto& n = p.parts;
    if (n.empty() || n.back() < spec.tail_min()) return false;
    for (int v : n)
        if (v < 0) return false;
    for (const auto& c : spec.constraints())
        for (std::size_t j = 0; j + c.distance < n.size(); ++j)
            if (n[j] < n[j + c.distance] - c.slack) return false;
    return true;
}

std::size_t max_length(const FamilySpec& spec, long weight)
{
    if (weight <= 0) return 0;
    // Ground-state entries counted from the end; each is the least value the
    // constraints allow, and the length-m ground state is the last m of them.
    std::vector<long> ground{spec.tail_min()};
    long total = spec.tail_min();
    if (total > weight) return 0;
    while (true) {
        const long e = static_cast<long>(ground.size());
        long v = 0;
        for (const auto& c : spec.constraints())
            if (c.distance <= e) v = std::max(v, ground[e - c.distance] - c.slack);
        if (total + v > weight) return ground.size();
        ground.push_back(v);
        total += v;
    }
}

std::vector<JaggedPartition> enumerate(const FamilySpec& spec, long weight, std::size_t length)
{
    std::vector<JaggedPartition> out;
    if (length == 0 || weight < 0) return out;
    Backtracker bt(bounds_of(spec), spec.tail_min(), length);
    for (auto& parts : bt.run(weight)) out.push_back(JaggedPartition{std::move(parts)});
    return out;
}

std::vector<JaggedPartition> enumerate(const FamilySpec& spec, long weight)
{
    std::vector<JaggedPartition> out;
    const std::size_t longest = max_length(spec, weight);
    for (std::size_t m = 1; m <= longest; ++m) {
        auto part = enumerate(spec, weight, m);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition staircase_map(const FamilySpec& spec, const JaggedPartition& p)
{
    if (!is_valid(spec, p))
        throw std::invalid_argument(to_string(p.parts) + " is not a valid " + spec.name() + " partition");
    const long m = static_cast<long>(p.length());
    Partition lambda;
    for (long i = 1; i <= m; ++i) lambda.parts.push_back(static_cast<int>(p.parts[i - 1] + spec.staircase().step(m, i)));
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        const bool decreasing = i == 0 || lambda.parts[i - 1] >= lambda.parts[i];
        if (!decreasing || lambda.parts[i] < 1)
            throw std::logic_error("staircase of family '" + spec.name() + "' does not yield a partition");
    }
    return lambda;
}

std::vector<Gap> restricted_conditions(const FamilySpec& spec)
{
    std::vector<Gap> out;
    for (const auto& c : spec.constraints()) out.push_back({c.distance, spec.staircase().slope * c.distance - c.slack});
    std::sort(out.begin(), out.end(), [](const Gap& a, const Gap& b) { return a.distance < b.distance; });
    return out;
}

std::vector<Partition> enumerate_restricted(const std::vector<Gap>& conditions, long weight, std::size_t length)
{
    std::vector<Partition> out;
    if (length == 0) {
        if (weight == 0) out.push_back(Partition{});
        return out;
    }
    std::vector<Bound> bounds{{1, 0}};
    for (const auto& g : conditions) {
        if (g.distance < 1) throw std::invalid_argument("condition distance must be >= 1");
        bounds.push_back({g.distance, g.gap});
    }
    Backtracker bt(std::move(bounds), 1, length);
    for (auto& parts : bt.run(weight)) out.push_back(Partition{std::move(parts)});
    return out;
}

}  // namespace jagged
