#ifndef JACK4_BASIS4_HPP
#define JACK4_BASIS4_HPP

#include "jack4/combin.hpp"
#include "jack4/exact.hpp"
#include "jack4/poly.hpp"

#include <vector>

namespace jack4 {

/// gamma = w beta with E = {i : gamma_i odd}, k = #E; w sends {1..k} onto E
/// and {k+1..3} onto the complement, increasing on both blocks; beta_i is odd
/// exactly for i <= k, and alpha_i = floor(beta_i / 2).
struct LabelDecomposition {
    Composition gamma;
    std::vector<int> E;
    int k = 0;
    Permutation w;
    Composition beta;
    Composition alpha;
};

/// One element p_gamma(y) y0^n of the four-variable basis.
struct BasisLabel {
    Composition gamma;
    int n = 0;

    int degree() const { return weight(gamma) + n; }
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// The permutation attached to a subset E of {1,2,3}; E is a bitmask with
/// bit i-1 set when i is in E.
const Permutation& subset_permutation(unsigned mask);

LabelDecomposition decompose_label(const Composition& gamma);

/// p_gamma = w (y_1 ... y_k zeta_alpha(y^2)) in the Y3 frame.
SparsePoly basis_poly(const Composition& gamma, const ParamContext& ctx);

/// p_gamma(y) y0^n in the Y4 frame.
SparsePoly basis_poly4(const BasisLabel& label, const ParamContext& ctx);

/// Closed-form norm <p_gamma, p_gamma>_kappa.
Rational basis_norm3(const Composition& gamma, const ParamContext& ctx);

/// <y0^n, y0^n>: 2^{2m} m! (kappa'+1/2)_m for n = 2m, 2^{2m+1} m! (kappa'+1/2)_{m+1} for n = 2m+1.
Rational y0_power_norm(int n, const ParamContext& ctx);

/// Closed-form norm <p_gamma y0^n, p_gamma y0^n>_{kappa, kappa'}.
Rational basis_norm(const BasisLabel& label, const ParamContext& ctx);

/// Closed form together with the value computed by the pairing itself.
struct CheckedNorm {
    Rational formula;
    Rational pairing;
    bool agree() const { return formula == pairing; }
};
CheckedNorm basis_norm_checked(const BasisLabel& label, const ParamContext& ctx);

/// All labels with |gamma| + n = degree, ascending by (n, canonical gamma).
std::vector<BasisLabel> basis_labels(int degree);

/// S_4-invariant F^0_lambda = j_lambda(y^2) and F^1_lambda = y1 y2 y3 j_lambda(y^2).
struct InvariantF {
    Partition lambda;
    int s = 0;
    SparsePoly poly;        // Y3
    Rational a_lambda;
    /// 2^{2|lambda|} (2 kappa + 1/2)_{lambda + s(1,1,1)} A_lambda, the norm as usually displayed.
    Rational norm_display;
    /// 2^{2|lambda| + 3s} (2 kappa + 1/2)_{lambda + s(1,1,1)} A_lambda.
    Rational norm_scaled;
    /// <F, F>_kappa computed with the D^B pairing.
    Rational norm_pairing;
};
InvariantF invariant_F(const Partition& lambda, int s, const ParamContext& ctx);

/// A_lambda for N = 3 (the symmetric Jack norm).
Rational a_lambda(const Partition& lambda, const ParamContext& ctx);

}  // namespace jack4

#endif
