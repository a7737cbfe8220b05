#pragma once

#include <gerst/multi_index.hpp>

#include <string>
#include <vector>

namespace gerst {

/// Finitely generated additive semigroup Delta in Z^n: all sums
/// c_1 g_1 + ... + c_m g_m with c_i >= 0 and sum c_i >= 1. Contains 0 only when
/// the generators can cancel.
class Semigroup {
public:
    Semigroup(int dim, std::vector<IntIndex> generators, int search_cap = 64);

    int dimension() const { return dim_; }
    const std::vector<IntIndex>& generators() const { return generators_; }
    int search_cap() const { return search_cap_; }

private:
    int dim_;
    std::vector<IntIndex> generators_;
    int search_cap_;
};

enum class Membership { yes, no, inconclusive };

std::string to_string(Membership m);

struct MembershipResult {
    Membership status = Membership::inconclusive;
    /// For `yes`: c_i per generator with sum c_i g_i equal to the query.
    std::vector<int> certificate;
    /// Short human-readable justification.
    std::string reason;
};

/// Decides whether `a` is a sum of at least `min_summands` generators.
///
/// Answers `no` only with a proof: `a` lies outside the integer lattice of the
/// generators, outside their closed cone, or beyond the summand bound implied
/// by a strictly positive functional when every level up to it was searched.
/// Answers `yes` only with a certificate found by breadth-first search over
/// summand counts up to the cap. Otherwise `inconclusive`.
MembershipResult semigroup_member(const Semigroup& delta, const IntIndex& a, int min_summands = 1);

/// Whether `a` lies in the Z-span of `generators`.
bool in_lattice(const std::vector<IntIndex>& generators, const IntIndex& a);

/// sum c_i g_i.
IntIndex certificate_value(const Semigroup& delta, const std::vector<int>& certificate);

} // namespace gerst
