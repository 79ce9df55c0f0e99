#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace jagged {

// n_j >= n_{j+distance} - slack for every j where both positions exist.
struct Constraint {
    int distance;
    int slack;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Staircase added to a length-m jagged partition: entry i (1-based) gets
// slope * (m - i) + offset. The last entry may be negative (-1 for 02 and 012).
struct Staircase {
    int slope = 1;
    int offset = 0;

    long step(long m, long i) const { return slope * (m - i) + offset; }
    // Total staircase weight for length m, the exponent shift sigma(m).
    long weight(long m) const { return slope * m * (m - 1) / 2 + offset * m; }
};

// Declarative description of a jagged-partition family.
class FamilySpec {
public:
    FamilySpec(std::string name, std::vector<Constraint> constraints, int tail_min);
    FamilySpec(std::string name, std::vector<Constraint> constraints, int tail_min, Staircase staircase);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    int tail_min() const noexcept { return tail_min_; }
    const Staircase& staircase() const noexcept { return staircase_; }

private:
    std::string name_;
    std::vector<Constraint> constraints_;
    int tail_min_;
    Staircase staircase_;
};

FamilySpec family_01();
FamilySpec family_02();
FamilySpec family_012();
FamilySpec family_001();
// 0^p 1 family: n_j >= n_{j+s} - 1 for 1 <= s <= p and n_j >= n_{j+p+1}.
FamilySpec family_0p1(int p);

// Accepts the built-in names 01, 02, 012, 001, 0p1:<p> or a constraint
// string such as "d1:1,d2:0;tail=1". Throws std::invalid_argument.
FamilySpec parse_family(const std::string& text);

struct JaggedPartition {
    std::vector<int> parts;

    long weight() const;
    std::size_t length() const noexcept { return parts.size(); }

    friend auto operator<=>(const JaggedPartition&, const JaggedPartition&) = default;
};

// An ordinary partition, parts weakly decreasing and positive.
struct Partition {
    std::vector<int> parts;

    long weight() const;
    std::size_t length() const noexcept { return parts.size(); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const std::vector<int>& parts);

bool is_valid(const FamilySpec& spec, const JaggedPartition& p);

// Upper bound on the length of any valid partition of the given weight.
// Computed from the ground state, so it is attained whenever weight >= 1.
std::size_t max_length(const FamilySpec& spec, long weight);

// Every valid partition of exactly this weight (and length, if non-zero),
// in lexicographic order of parts.
std::vector<JaggedPartition> enumerate(const FamilySpec& spec, long weight);
std::vector<JaggedPartition> enumerate(const FamilySpec& spec, long weight, std::size_t length);

// lambda_i = n_i + staircase step. Throws std::invalid_argument for an invalid input.
Partition staircase_map(const FamilySpec& spec, const JaggedPartition& p);

// lambda_i >= lambda_{i+distance} + gap.
struct Gap {
    int distance;
    int gap;

    friend bool operator==(const Gap&, const Gap&) = default;
};

// Difference conditions satisfied by the staircase image of a family:
// a constraint (s, d) becomes lambda_i >= lambda_{i+s} + slope * s - d.
std::vector<Gap> restricted_conditions(const FamilySpec& spec);

// Weakly decreasing, positive partitions of the weight into exactly `length`
// parts that satisfy every condition. Lexicographic order.
std::vector<Partition> enumerate_restricted(const std::vector<Gap>& conditions, long weight, std::size_t length);

}  // namespace jagged
