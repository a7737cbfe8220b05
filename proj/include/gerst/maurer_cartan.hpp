#pragma once

#include <gerst/cochain.hpp>
#include <gerst/exact_solve.hpp>
#include <gerst/grading.hpp>
#include <gerst/semigroup.hpp>

#include <optional>
#include <vector>

namespace gerst {

/// Truncated deformation pi = sum_{k=1..N} t^k p_k of the product m. The
/// Poisson bivector pi_1 enters as p_1 = pi_1 / 2, so f * g = fg + pi(f, g)
/// with pi = (t/2) pi_1 + O(t^2).
class Deformation {
public:
    Deformation(int dim, std::vector<Cochain> terms);

    int dimension() const { return dim_; }
    int order() const { return static_cast<int>(terms_.size()); }
    /// p_k, 1 <= k <= order().
    const Cochain& term(int k) const;
    const std::vector<Cochain>& terms() const { return terms_; }

    void set_term(int k, Cochain c);

    friend bool operator==(const Deformation&, const Deformation&) = default;

private:
    int dim_;
    std::vector<Cochain> terms_;
};

/// B_k = 1/2 sum_{i+j=k, i,j>=1} [p_i, p_j].
struct ObstructionTerm {
    int k;
    Cochain value;
};

ObstructionTerm obstruction(const Deformation& def, int k);

/// Matrix of delta: C^p -> C^{p+1} restricted to one bigrade. basis_source
/// spans the arity-p terms of that bigrade, basis_target the arity-(p+1) ones.
struct BlockSystem {
    Bigrade bigrade;
    std::vector<BasisTerm> basis_source;
    std::vector<BasisTerm> basis_target;
    RationalMatrix matrix;
};

/// Enumerates both bases (lexicographic slot compositions, zero slots
/// included) and assembles the exact matrix whose columns are the coordinates
/// of delta(basis_source[j]). Throws PreconditionError on an invalid bigrade.
BlockSystem build_block(const Bigrade& bigrade, int source_arity = 2);

/// delta X = B has no solution in the given bigrade block.
class CoboundaryError : public Error {
public:
    CoboundaryError(const std::string& what, Bigrade block) : Error(what), block_(std::move(block)) {}
    const Bigrade& block() const { return block_; }

private:
    Bigrade block_;
};

struct SolverOptions {
    /// Hard cap on the total slot order |sum a_s| of any bigrade block.
    int max_block_order = 32;
};

/// Particular solution X of delta X = B, block by block, with all free
/// variables zero. B must be arity-homogeneous of arity >= 1.
Cochain solve_delta(const Cochain& b, const SolverOptions& options = {});

/// Solves delta p_k = B_k for k = 2..order on R^2 starting from p_1 = pi1/2.
/// With `delta` given, pi1 must lie in C_Delta and every p_k (k >= 2) is
/// verified to lie in I^(2)_Delta.
Deformation solve_maurer_cartan(const Cochain& pi1, int order, const std::optional<Semigroup>& delta = std::nullopt,
                                const SolverOptions& options = {});

/// Truncated power series in t: entry k is the coefficient of t^k.
using TSeries = std::vector<Polynomial>;

/// f * g = fg + sum_k t^k p_k(f, g), truncated at t^order.
TSeries star_apply(const Deformation& def, const Polynomial& f, const Polynomial& g);

/// The star product extended t-bilinearly to truncated series.
TSeries star_apply(const Deformation& def, const TSeries& f, const TSeries& g);

/// (f * g) * h - f * (g * h), truncated at t^order.
TSeries associativity_defect(const Deformation& def, const Polynomial& f, const Polynomial& g, const Polynomial& h);

} // namespace gerst
