#ifndef JACK4_OPS_HPP
#define JACK4_OPS_HPP

#include "jack4/exact.hpp"
#include "jack4/poly.hpp"

namespace jack4 {

// Reflection-group operators acting on SparsePoly. Operator indices are
// 1-based (D_1..D_N, D^B_1..D^B_3); every operator is exact and maps
// polynomials to polynomials. Divided differences are expanded termwise:
//   (x_a^p x_b^q - x_a^q x_b^p) / (x_a - x_b) = sum_{s} x_a^{q+s} x_b^{p-1-s}   (p > q)

enum class OperatorKind {
    DunklA,      // D_i on X frames with ctx.nvars() variables
    CherednikA,  // U_i on X frames
    DunklB,      // D^B_i on Y3 / Y4 (kappa' = 0 type B_3 operators)
    CherednikB,  // U^B_i on Y3 / Y4
    D0,          // Dunkl operator along v0 on Y4 / Y0
    DunklPrime,  // D'_i on x4, the S_4 x Z_2 Dunkl operators
    LaplacianB,  // sum_i (D^B_i)^2
    LaplacianH,  // sum_i (D'_i)^2 = Delta_B + D0^2
};

struct Operator {
    OperatorKind kind;
    int index = 0;
};

SparsePoly apply(const Operator& op, const SparsePoly& f, const ParamContext& ctx);

// --- termwise primitives (0-based variable indices) -------------------------

SparsePoly partial_derivative(const SparsePoly& f, int var);
/// (f - f(a b)) / (x_a - x_b)
SparsePoly divided_difference(const SparsePoly& f, int a, int b);
/// (f - f tau_ab) / (y_a + y_b), tau_ab: (y_a, y_b) -> (-y_b, -y_a)
SparsePoly divided_difference_tau(const SparsePoly& f, int a, int b);
/// (f - f sigma) / y_var with sigma: y_var -> -y_var
SparsePoly sign_quotient(const SparsePoly& f, int var);
/// tau_ab f
SparsePoly apply_tau(const SparsePoly& f, int a, int b);
/// Euler operator: multiplies each term by its total degree.
SparsePoly euler(const SparsePoly& f);
/// Euler operator in the single variable `var`.
SparsePoly euler_in(const SparsePoly& f, int var);

// --- type A --------------------------------------------------------------

SparsePoly dunkl_A(int i, const SparsePoly& f, const ParamContext& ctx);
SparsePoly cherednik_A(int i, const SparsePoly& f, const ParamContext& ctx);

// --- type B (D_3 reflections, kappa' = 0) ---------------------------------

SparsePoly dunkl_B(int i, const SparsePoly& f, const ParamContext& ctx);
SparsePoly cherednik_B(int i, const SparsePoly& f, const ParamContext& ctx);

/// D^B_i written in x coordinates on x4: the directional derivative along v_i
/// plus the four transposition terms matched to sigma_ij / tau_ij through the
/// reflection correspondence table. Cross-check of dunkl_B only.
SparsePoly dunkl_B_xframe(int i, const SparsePoly& f, const ParamContext& ctx);

/// The S_4 transposition (a, b), 1-based, paired with sigma_ij (tau = false)
/// or tau_ij (tau = true) for 1 <= i < j <= 3.
std::pair<int, int> corresponding_transposition(int i, int j, bool tau);

// --- the y_0 direction ----------------------------------------------------

/// D0 f = df/dy0 + (kappa'/y0)(f - f sigma0).
SparsePoly dunkl_D0(const SparsePoly& f, const ParamContext& ctx);
/// D'_i f = D_i f + (kappa' / (2 <x, v0>)) (f - f sigma0) on x4.
SparsePoly dunkl_prime(int i, const SparsePoly& f, const ParamContext& ctx);

// --- Laplacians -------------------------------------------------------------

/// LaplacianB on Y3/Y4; LaplacianH on Y4 (Delta_B + D0^2) or x4 (sum D'_i^2).
SparsePoly laplacian(OperatorKind kind, const SparsePoly& f, const ParamContext& ctx);
SparsePoly d0_squared(const SparsePoly& f, const ParamContext& ctx);

// --- pairings ---------------------------------------------------------------

enum class PairingKind { Kappa, Extended };

/// The Dunkl operator substituted for variable `var` of a polynomial in
/// (frame, nvars) under the given pairing, applied to g.
SparsePoly pairing_operator(PairingKind kind, int var, const SparsePoly& g, const ParamContext& ctx);

/// <f, g>_kappa = f(D_1, ..., D_N) g |_{x=0}; X frames use type-A operators
/// with N = nvars, Y3 uses D^B. Reference route: operators applied directly.
Rational pairing_kappa(const SparsePoly& f, const SparsePoly& g, const ParamContext& ctx);

/// <f, g>_{kappa, kappa'} = f(D'_1, ..., D'_4) g |_{x=0} on x4, or with
/// (D0, D^B_1, D^B_2, D^B_3) on Y4.
Rational pairing_extended(const SparsePoly& f, const SparsePoly& g, const ParamContext& ctx);

}  // namespace jack4

#endif
