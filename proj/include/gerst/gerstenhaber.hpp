#pragma once

#include <gerst/cochain.hpp>

namespace gerst {

/// The product 2-cochain m(u1, u2) = u1 u2, i.e. x^0 d^0 (x) d^0.
Cochain multiplication_cochain(int dim);

/// The 1-cochain d^0 (identity map of A).
Cochain identity_cochain(int dim);

/// The Euler-type vector field h^i = x_i d_i (1-based i).
Cochain euler_field(int dim, int i);

/// (f cup g)(u_1..u_{p+q}) = f(u_1..u_p) g(u_{p+1}..u_{p+q}), extended bilinearly.
Cochain cup(const Cochain& f, const Cochain& g);

/// Substitutes g into slot k (1-based) of f: the (p+q-1)-cochain
/// f(u_1, .., u_{k-1}, g(u_k, .., u_{k+q-1}), u_{k+q}, ..).
/// f and g must be arity-homogeneous (or zero); requires 1 <= k <= p.
Cochain insert(const Cochain& f, int k, const Cochain& g);

/// Gerstenhaber bracket, built from signed insertions on each pair of arity
/// components. Of degree -1 in the arity grading.
Cochain bracket(const Cochain& f, const Cochain& g);

/// Hochschild coboundary, computed directly from the Hochschild formula.
Cochain hochschild_delta(const Cochain& f);

/// Hochschild coboundary computed as -[f, m].
Cochain delta_via_bracket(const Cochain& f);

/// (-1)^e for any integer e.
constexpr int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace gerst
