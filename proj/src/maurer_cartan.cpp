#include <gerst/errors.hpp>
#include <gerst/gerstenhaber.hpp>
#include <gerst/maurer_cartan.hpp>

#include <map>
#include <string>

namespace gerst {

namespace {

int arity_of(const Cochain& c, int expected, const char* what) {
    if (c.is_zero()) return expected;
    auto p = c.arity();
    if (!p || *p != expected) {
        throw ArityError(std::string(what) + " must be a " + std::to_string(expected) + "-cochain");
    }
    return *p;
}

std::vector<BasisTerm> block_basis(const NatIndex& x, const NatIndex& slot_total, int arity) {
    std::vector<BasisTerm> out;
    for (auto& slots : compositions(slot_total, arity)) out.push_back(BasisTerm{x, std::move(slots)});
    return out;
}

} // namespace

Deformation::Deformation(int dim, std::vector<Cochain> terms) : dim_(dim), terms_(std::move(terms)) {
    for (const auto& c : terms_) {
        if (c.dimension() != dim_) throw DimensionError("deformation term has wrong dimension");
        arity_of(c, 2, "deformation term");
    }
}

const Cochain& Deformation::term(int k) const {
    if (k < 1 || k > order()) throw PreconditionError("deformation order " + std::to_string(k) + " not present");
    return terms_[k - 1];
}

void Deformation::set_term(int k, Cochain c) {
    if (k < 1) throw PreconditionError("deformation orders start at 1");
    if (c.dimension() != dim_) throw DimensionError("deformation term has wrong dimension");
    arity_of(c, 2, "deformation term");
    while (order() < k) terms_.emplace_back(dim_);
    terms_[k - 1] = std::move(c);
}

ObstructionTerm obstruction(const Deformation& def, int k) {
    if (k < 2) throw PreconditionError("obstructions start at order 2");
    if (def.order() < k - 1) throw PreconditionError("lower-order deformation terms missing");
    Cochain sum(def.dimension());
    for (int i = 1; i < k; ++i) sum += bracket(def.term(i), def.term(k - i));
    return {k, sum * Rational(1, 2)};
}

BlockSystem build_block(const Bigrade& bigrade, int source_arity) {
    const int n = bigrade.a.dim();
    bigrade.a.require_same_dim(bigrade.b);
    if (source_arity < 0) throw PreconditionError("source arity must be nonnegative");
    NatIndex x(n);
    NatIndex slot_total(n);
    for (int i = 0; i < n; ++i) {
        const int sum = bigrade.a[i] + bigrade.b[i];
        const int diff = bigrade.b[i] - bigrade.a[i];
        if (sum < 0 || diff < 0 || sum % 2 != 0 || diff % 2 != 0) {
            throw PreconditionError("invalid bigrade (" + to_string(bigrade.a) + ", " + to_string(bigrade.b) + ")");
        }
        x.set(i, sum / 2);
        slot_total.set(i, diff / 2);
    }
    auto source = block_basis(x, slot_total, source_arity);
    auto target = block_basis(x, slot_total, source_arity + 1);
    std::map<BasisTerm, std::size_t> row_of;
    for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);

    RationalMatrix matrix(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Cochain image = hochschild_delta(Cochain::term(source[j]));
        for (const auto& [t, c] : image.terms()) matrix(row_of.at(t), j) = c;
    }
    return {bigrade, std::move(source), std::move(target), std::move(matrix)};
}

Cochain solve_delta(const Cochain& b, const SolverOptions& options) {
    Cochain x(b.dimension());
    if (b.is_zero()) return x;
    const auto arity = b.arity();
    if (!arity || *arity < 1) throw ArityError("right-hand side of delta X = B must be arity-homogeneous of arity >= 1");
    for (const auto& [grade, part] : decompose_by_bigrade(b)) {
        const int order = ((grade.b - grade.a).total()) / 2;
        if (order > options.max_block_order) {
            throw Error("bigrade block of total slot order " + std::to_string(order) + " exceeds the bound " +
                        std::to_string(options.max_block_order));
        }
        const BlockSystem block = build_block(grade, *arity - 1);
        std::map<BasisTerm, std::size_t> row_of;
        for (std::size_t r = 0; r < block.basis_target.size(); ++r) row_of.emplace(block.basis_target[r], r);
        std::vector<Rational> rhs(block.basis_target.size());
        for (const auto& [t, c] : part.terms()) rhs[row_of.at(t)] = c;
        auto solution = solve_particular(block.matrix, std::move(rhs));
        if (!solution) {
            throw CoboundaryError("not a coboundary in bigrade block (" + to_string(grade.a) + ", " +
                                      to_string(grade.b) + ")",
                                  grade);
        }
        for (std::size_t j = 0; j < solution->size(); ++j) x.add_term(block.basis_source[j], (*solution)[j]);
    }
    return x;
}

Deformation solve_maurer_cartan(const Cochain& pi1, int order, const std::optional<Semigroup>& delta,
                                const SolverOptions& options) {
    if (pi1.dimension() != 2) throw DimensionError("the Maurer-Cartan solver works on R^2 only");
    if (order < 1) throw PreconditionError("deformation order must be at least 1");
    arity_of(pi1, 2, "pi1");
    Cochain p1 = pi1 * Rational(1, 2);
    if (!hochschild_delta(p1).is_zero()) throw PreconditionError("pi1 is not a Hochschild cocycle");
    if (delta) {
        const auto d = in_c_delta(pi1, *delta);
        if (d.status == Membership::inconclusive) {
            for (const auto& [w, r] : d.per_weight) {
                if (r.status == Membership::inconclusive) {
                    throw InconclusiveError("cannot decide whether pi1 lies in C_Delta: " + r.reason, w);
                }
            }
        }
        if (d.status == Membership::no) throw PreconditionError("pi1 does not lie in C_Delta");
    }

    Deformation def(2, {std::move(p1)});
    for (int k = 2; k <= order; ++k) {
        const ObstructionTerm b = obstruction(def, k);
        if (!hochschild_delta(b.value).is_zero()) {
            throw Error("obstruction at order " + std::to_string(k) + " is not delta-closed");
        }
        Cochain pk = solve_delta(b.value, options);
        if (delta && !pk.is_zero()) {
            const auto d = in_ideal(pk, *delta, 2);
            if (d.status != Membership::yes) {
                throw Error("order " + std::to_string(k) + " term left I^(2)_Delta (" + to_string(d.status) + ")");
            }
        }
        def.set_term(k, std::move(pk));
    }
    return def;
}

TSeries star_apply(const Deformation& def, const TSeries& f, const TSeries& g) {
    const int n = def.dimension();
    const int top = def.order();
    TSeries out(top + 1, Polynomial(n));
    for (std::size_t i = 0; i < f.size() && static_cast<int>(i) <= top; ++i) {
        for (std::size_t j = 0; j < g.size() && static_cast<int>(i + j) <= top; ++j) {
            if (f[i].is_zero() || g[j].is_zero()) continue;
            out[i + j] += f[i] * g[j];
            const Polynomial args[] = {f[i], g[j]};
            for (int k = 1; static_cast<int>(i + j) + k <= top; ++k) out[i + j + k] += gerst::apply(def.term(k), args);
        }
    }
    return out;
}

TSeries star_apply(const Deformation& def, const Polynomial& f, const Polynomial& g) {
    if (f.dimension() != def.dimension() || g.dimension() != def.dimension()) {
        throw DimensionError("star product arguments must match the deformation dimension");
    }
    return star_apply(def, TSeries{f}, TSeries{g});
}

TSeries associativity_defect(const Deformation& def, const Polynomial& f, const Polynomial& g, const Polynomial& h) {
    for (const auto* u : {&f, &g, &h}) {
        if (u->dimension() != def.dimension()) throw DimensionError("star product arguments must match the deformation dimension");
    }
    const TSeries left = star_apply(def, star_apply(def, f, g), TSeries{h});
    const TSeries right = star_apply(def, TSeries{f}, star_apply(def, g, h));
    TSeries out;
    for (std::size_t k = 0; k < left.size(); ++k) out.push_back(left[k] - right[k]);
    return out;
}

} // namespace gerst
