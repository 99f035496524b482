#ifndef JACK4_JACK_HPP
#define JACK4_JACK_HPP

#include "jack4/combin.hpp"
#include "jack4/exact.hpp"
#include "jack4/poly.hpp"

#include <memory>
#include <vector>

namespace jack4 {

/// Nonsymmetric Jack polynomial zeta_alpha in the x frame with N = |alpha|
/// variables: x-monic, support below alpha in the dominance order, and a
/// joint eigenfunction of the Cherednik operators with eigenvalues xi(alpha).
struct NsjpRecord {
    Composition label;
    SparsePoly poly;
    std::vector<Rational> spectral;
    Rational norm;
};

/// zeta_alpha for N = ctx.nvars() = alpha.size(). Requires kappa > 0.
/// All NSJPs of the same degree are solved together and memoized per
/// (degree, kappa, N); the cache is safe to use from several threads.
std::shared_ptr<const NsjpRecord> nsjp(const Composition& alpha, const ParamContext& ctx);

/// (N kappa + 1)_{alpha+} h(alpha, 1) / h(alpha, kappa + 1).
Rational nsjp_norm(const Composition& alpha, const ParamContext& ctx);

/// j_lambda = sum_{alpha+ = lambda} E_{-1}(alpha) zeta_alpha.
SparsePoly symmetric_jack(const Partition& lambda, const ParamContext& ctx);

/// #{alpha : alpha+ = lambda} (N kappa + 1)_lambda h(lambda, 1) / (E_1(lambda^R) h(lambda, kappa + 1)).
Rational jack_norm(const Partition& lambda, const ParamContext& ctx);

/// zeta_alpha(1, 1, 1) = (3 kappa + 1)_{alpha+} / h(alpha, kappa + 1); N = 3 only.
Rational nsjp_eval_ones(const Composition& alpha, const ParamContext& ctx);

/// Number of memoized degree batches (for tests).
std::size_t nsjp_cache_size();

}  // namespace jack4

#endif
