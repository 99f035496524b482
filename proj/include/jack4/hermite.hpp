#ifndef JACK4_HERMITE_HPP
#define JACK4_HERMITE_HPP

#include "jack4/basis4.hpp"
#include "jack4/exact.hpp"
#include "jack4/poly.hpp"

#include <string>
#include <vector>

namespace jack4 {

/// Which Laplacian an exponential series is built from: Delta_B (Y3/Y4),
/// D0^2 (Y0/Y4) or Delta_h = Delta_B + D0^2 (Y4).
enum class LaplacianKind { B, D0, H };

SparsePoly apply_laplacian(LaplacianKind kind, const SparsePoly& f, const ParamContext& ctx);

/// exp(sign * L / 2) f = sum_k (sign/2)^k / k! L^k f; finite on polynomials.
SparsePoly exp_half_laplacian(LaplacianKind kind, const SparsePoly& f, const ParamContext& ctx, int sign);

inline SparsePoly exp_neg_half_laplacian(LaplacianKind kind, const SparsePoly& f, const ParamContext& ctx)
{
    return exp_half_laplacian(kind, f, ctx, -1);
}

/// L_n^a(t) = ((a+1)_n / n!) sum_i ((-n)_i / (a+1)_i) t^i / i!, returned as a
/// univariate polynomial in the Y0 frame (the variable stands for t).
/// Throws std::domain_error when some (a+1)_i, i <= n, vanishes.
SparsePoly laguerre(int n, const Rational& a);

/// L_n^a(y0^2 / 2) in the Y0 frame.
SparsePoly laguerre_half_square(int n, const Rational& a);

struct HermiteRecord {
    BasisLabel label;
    SparsePoly poly;  // exp(-Delta_h/2)(p_gamma y0^n), Y4
    Rational energy;  // |gamma| + n + 6 kappa + kappa' + 2
};

/// 6 kappa + kappa' + 2 + degree.
Rational energy_level(int total_degree, const ParamContext& ctx);

HermiteRecord hermite_basis(const BasisLabel& label, const ParamContext& ctx);

/// psi0^{-1} H psi0 f = -Delta_B f - D0^2 f + sum_{i=0}^3 y_i df/dy_i + (6 kappa + kappa' + 2) f on Y4.
SparsePoly conjugated_hamiltonian(const SparsePoly& f, const ParamContext& ctx);

/// exp(-Delta_B/2)(F^s_lambda) L_n^{kappa'-1/2}(y0^2/2) in Y4.
SparsePoly cs_invariant_eigenfunction(const Partition& lambda, int s, int n, const ParamContext& ctx);
/// 2|lambda| + 3s + 2n + 6 kappa + kappa' + 2.
Rational cs_invariant_energy(const Partition& lambda, int s, int n, const ParamContext& ctx);

/// (D0 y0 - kappa' sigma0) f.
SparsePoly d0_y0_minus_sigma(const SparsePoly& f, const ParamContext& ctx);

struct IdentityResult {
    std::string name;
    long checked = 0;
    long violations = 0;
    std::string first_counterexample;
};

struct IdentityReport {
    std::vector<IdentityResult> results;
    bool ok() const;
};

/// Checks each operator identity on every monomial of degree <= max_degree:
///   exp(-Delta_B/2) sum U^B_i exp(Delta_B/2) = -Delta_B + Euler + 6 kappa + 3
///   exp(-D0^2/2) (D0 y0 - kappa' sigma0) exp(D0^2/2) = -D0^2 + y0 d/dy0 + kappa' + 1
///   D0^2 = d^2/dy0^2 + (2 kappa'/y0) d/dy0 - kappa' (1 - sigma0)/y0^2
///   (D0 y0 - kappa' sigma0) y0^n = (n + 1 + kappa') y0^n
///   psi0^{-1} H psi0 = exp(-Delta_h/2)(sum U^B_i + D0 y0 - kappa' sigma0 - 2) exp(Delta_h/2)
///   sum_i (D'_i)^2 = Delta_B + D0^2 (x4 against Y4)
IdentityReport operator_identities_check(const ParamContext& ctx, int max_degree);

}  // namespace jack4

#endif
