#pragma once

#include "jagged/qseries.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace jagged {

// lhs(order) == rhs(order) as exact coefficient vectors. Identities in a
// fractional power of q are registered in t with q = t^substitution.
struct IdentityCase {
    std::string name;
    std::string paper_ref;  // the identity in words
    std::size_t default_order;
    std::size_t substitution;
    std::function<IntSeries(std::size_t)> lhs;
    std::function<IntSeries(std::size_t)> rhs;
};

struct Mismatch {
    std::size_t exponent;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    std::string name;
    std::string paper_ref;
    std::size_t order;
    bool passed;
    std::optional<Mismatch> mismatch;
    std::string error;  // set when a builder threw
    double seconds = 0;
};

const std::vector<IdentityCase>& identity_registry();

// Entries answering to `name`: the entry itself, or every entry of the group
// `name_*`. Throws std::invalid_argument for an unknown name.
std::vector<const IdentityCase*> find_identities(const std::string& name);

IdentityReport verify(const IdentityCase& c, std::size_t order);
// Verifies every entry matched by `name`; order 0 means each entry's default.
std::vector<IdentityReport> verify(const std::string& name, std::size_t order = 0);
// Every registered entry at max(default_order, order).
std::vector<IdentityReport> verify_all(std::size_t order = 0);

// (q^c; q^c)_inf^e
IntSeries euler(std::size_t c, long e, std::size_t order);
// (-q)_inf / (q)_inf, the generating function of j(n).
IntSeries jagged_series(std::size_t order);

}  // namespace jagged
