#ifndef JACK4_MEASURE_HPP
#define JACK4_MEASURE_HPP

#include "jack4/poly.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace jack4 {

struct McConfig {
    long samples = 1'000'000;
    std::uint64_t seed = 0;
    double kappa = 1.0;
    double kappa_prime = 0.5;
    /// Samples per independently seeded batch.
    long batch_size = 1 << 16;
};

/// c_{kappa,kappa'} for d mu = c h(x)^2 dm(x), dm the standard Gaussian on R^4:
/// 1/c = 2^{k'} Gamma(k'+1/2) Gamma(2k+1) Gamma(3k+1) Gamma(4k+1) / (Gamma(1/2) Gamma(k+1)^3).
double normalization_constant(double kappa, double kappa_prime);

/// prod_{j=2}^{N} Gamma(j kappa + 1) / Gamma(kappa + 1).
double selberg_product(int n, double kappa);

/// h(x) = prod_{i<j} |x_i - x_j|^kappa |y0|^kappa' at a point of R^4.
double weight_h(const double (&x)[4], double kappa, double kappa_prime);

struct McEstimate {
    double estimate = 0;
    double standard_error = 0;
};

/// Monte Carlo estimate of the integral of f g against d mu_{kappa,kappa'}:
/// x ~ N(0, I_4) weighted by c h(x)^2. Batches use generators seeded from
/// (seed, batch index) and are merged in batch order, so the result depends
/// only on the configuration. f and g may be in x4 or y4.
McEstimate mc_inner_product(const SparsePoly& f, const SparsePoly& g, const McConfig& cfg);

/// {"integrand", "kappa", "kappa_prime", "samples", "seed", "estimate", "stderr", "exact"}.
nlohmann::json mc_report(const std::string& integrand, const McConfig& cfg, const McEstimate& est,
                         const std::optional<std::string>& exact);

}  // namespace jack4

#endif
