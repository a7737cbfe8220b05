#pragma once

#include <gerst/cochain.hpp>
#include <gerst/semigroup.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gerst {

/// Weight a0 - sum_s a_s: the eigenvalue of [h^i, .] on a basis term.
IntIndex weight_of(const BasisTerm& t);

/// Splits c into weight-homogeneous parts; the parts sum to c.
std::map<IntIndex, Cochain> decompose_by_weight(const Cochain& c);

/// The common weight, or nullopt when c is zero or mixes weights.
std::optional<IntIndex> homogeneous_weight(const Cochain& c);

/// (a0 - sum a_s, a0 + sum a_s). Ordered lexicographically on (a, b).
struct Bigrade {
    IntIndex a;
    IntIndex b;
    friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

Bigrade bigrade_of(const BasisTerm& t);
std::map<Bigrade, Cochain> decompose_by_bigrade(const Cochain& c);

/// Outcome of a membership query on a whole cochain. `status` is `no` when any
/// weight is definitely outside, else `inconclusive` when any weight is
/// undecided, else `yes`.
struct SubspaceDecision {
    Membership status = Membership::yes;
    std::map<IntIndex, MembershipResult> per_weight;
};

/// c in C_Delta: every weight component has weight in Delta.
SubspaceDecision in_c_delta(const Cochain& c, const Semigroup& delta);

/// c in I^(r)_Delta: every weight is a sum of at least r elements of Delta.
SubspaceDecision in_ideal(const Cochain& c, const Semigroup& delta, int r);

/// Raised when a projection meets a weight whose membership is undecided.
class InconclusiveError : public Error {
public:
    InconclusiveError(const std::string& what, IntIndex weight)
        : Error(what), weight_(std::move(weight)) {}
    const IntIndex& weight() const { return weight_; }

private:
    IntIndex weight_;
};

/// Keeps the weight components of c lying in Delta. Throws InconclusiveError
/// instead of guessing.
Cochain project_c_delta(const Cochain& c, const Semigroup& delta);

/// Disagreements between C_Delta and I^(r)_Delta over the box |a^i| <= radius.
struct IdealComparison {
    int checked = 0;
    int inconclusive = 0;
    /// Weights in Delta that are not r-fold sums.
    std::vector<IntIndex> in_delta_only;
    /// r-fold sums that are not in Delta (impossible for a semigroup).
    std::vector<IntIndex> in_ideal_only;
};

IdealComparison compare_ideal_with_subalgebra(const Semigroup& delta, int r, int radius);

/// Nonempty set I of distinct coordinates (1-based) selecting theta_I.
class IndexSet {
public:
    IndexSet(int dim, std::vector<int> indices);
    const std::vector<int>& indices() const { return indices_; }
    int dimension() const { return dim_; }
    /// (-1)^{sum_{i in I} a^i}.
    int sign(const IntIndex& weight) const;

private:
    int dim_;
    std::vector<int> indices_;
};

Cochain theta_apply(const Cochain& c, const IndexSet& I);

struct ThetaSplit {
    Cochain plus;
    Cochain minus;
};

ThetaSplit theta_split(const Cochain& c, const IndexSet& I);

/// Whether `a` lies in Theta_I = {a : sum_{i in I} a^i even}.
bool in_theta_group(const IntIndex& a, const IndexSet& I);

/// Evidence for or against C_H (x) L, L (x) C_H, [C_H, L] landing in L, where
/// L is spanned by the weights outside H.
struct ComplementReport {
    bool is_subgroup = false;
    int samples_checked = 0;
    int undecided = 0;
    struct Counterexample {
        std::string operation;
        IntIndex h;
        IntIndex k;
        Cochain f;
        Cochain g;
        Cochain result;
    };
    std::optional<Counterexample> counterexample;
    bool passed() const { return !counterexample.has_value(); }
};

/// H is the semigroup generated by `h`. Samples `samples` weight pairs with
/// |entries| <= 3 and random weight-homogeneous cochains for the forward
/// direction, then searches the same box for h + k in H with k outside H.
ComplementReport subgroup_complement_check(const Semigroup& h, int samples, std::uint64_t seed);

enum class FiltrationMode { literal, cumulative };

/// Filtration label (a, b) with a <= b lexicographically; compared on the pair
/// lexicographically.
struct FiltrationIndex {
    IntIndex a;
    IntIndex b;
    friend auto operator<=>(const FiltrationIndex&, const FiltrationIndex&) = default;
};

FiltrationIndex operator+(const FiltrationIndex& x, const FiltrationIndex& y);

/// literal: every term has weight a and second grade d with a <= d <= b.
/// cumulative: every bigrade (c, d) of c satisfies (c, d) <= (a, b).
bool filtration_contains(const Cochain& c, const FiltrationIndex& alpha, FiltrationMode mode);

/// Least alpha with c in S_alpha; nullopt in literal mode when c mixes weights.
/// Throws PreconditionError on the zero cochain.
std::optional<FiltrationIndex> filtration_index(const Cochain& c, FiltrationMode mode);

} // namespace gerst
