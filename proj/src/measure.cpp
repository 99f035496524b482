#include "jack4/measure.hpp"

#include "jack4/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace jack4 {

double normalization_constant(double kappa, double kappa_prime)
{
    if (kappa < 0 || kappa_prime < 0)
        throw std::invalid_argument("normalization_constant: parameters must be nonnegative");
    const double log_inverse = kappa_prime * std::log(2.0) + std::lgamma(kappa_prime + 0.5)
                               + std::lgamma(2 * kappa + 1) + std::lgamma(3 * kappa + 1) + std::lgamma(4 * kappa + 1)
                               - std::lgamma(0.5) - 3 * std::lgamma(kappa + 1);
    return std::exp(-log_inverse);
}

double selberg_product(int n, double kappa)
{
    if (n < 2 || kappa < 0)
        throw std::invalid_argument("selberg_product: need N >= 2 and kappa >= 0");
    double log_p = 0;
    for (int j = 2; j <= n; ++j)
        log_p += std::lgamma(j * kappa + 1) - std::lgamma(kappa + 1);
    return std::exp(log_p);
}

double weight_h(const double (&x)[4], double kappa, double kappa_prime)
{
    double vandermonde = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            vandermonde *= std::abs(x[i] - x[j]);
    const double y0 = 0.5 * (x[0] + x[1] + x[2] + x[3]);
    return std::pow(vandermonde, kappa) * std::pow(std::abs(y0), kappa_prime);
}

namespace {

struct DoubleTerm {
    int exp[4];
    double coef;
};

std::vector<DoubleTerm> to_double_terms(const SparsePoly& f)
{
    if (f.nvars() != 4 || (f.frame() != Frame::X && f.frame() != Frame::Y4))
        throw std::invalid_argument("mc_inner_product: expected an x4 or y4 polynomial");
    const SparsePoly y = f.frame() == Frame::X ? to_y(f) : f;
    std::vector<DoubleTerm> out;
    for (const auto& [m, c] : y.terms())
        out.push_back({{m[0], m[1], m[2], m[3]}, c.get_d()});
    return out;
}

double eval_terms(const std::vector<DoubleTerm>& terms, const double (&y)[4])
{
    double sum = 0;
    for (const DoubleTerm& t : terms) {
        double v = t.coef;
        for (int k = 0; k < 4; ++k)
            for (int e = 0; e < t.exp[k]; ++e)
                v *= y[k];
        sum += v;
    }
    return sum;
}

struct BatchSums {
    double sum = 0;
    double sum_sq = 0;
    long count = 0;
};

}  // namespace

McEstimate mc_inner_product(const SparsePoly& f, const SparsePoly& g, const McConfig& cfg)
{
    if (cfg.samples < 1 || cfg.batch_size < 1)
        throw std::invalid_argument("mc_inner_product: samples and batch size must be positive");
    const auto ft = to_double_terms(f);
    const auto gt = to_double_terms(g);
    const double c = normalization_constant(cfg.kappa, cfg.kappa_prime);
    const long batches = (cfg.samples + cfg.batch_size - 1) / cfg.batch_size;
    double basis[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            basis[i][j] = coord_vectors()[i][j].get_d();

    auto run_batch = [&](std::size_t b) {
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal(0.0, 1.0);
        const long begin = static_cast<long>(b) * cfg.batch_size;
        const long count = std::min(cfg.batch_size, cfg.samples - begin);
        BatchSums s;
        for (long k = 0; k < count; ++k) {
            double x[4];
            for (double& xi : x)
                xi = normal(rng);
            double y[4];
            for (int i = 0; i < 4; ++i)
                y[i] = basis[i][0] * x[0] + basis[i][1] * x[1] + basis[i][2] * x[2] + basis[i][3] * x[3];
            const double h = weight_h(x, cfg.kappa, cfg.kappa_prime);
            const double value = c * h * h * eval_terms(ft, y) * eval_terms(gt, y);
            s.sum += value;
            s.sum_sq += value * value;
        }
        s.count = count;
        return s;
    };
    const auto sums = sweep<BatchSums>(static_cast<std::size_t>(batches), run_batch, Exec::Parallel);

    double sum = 0, sum_sq = 0;
    long n = 0;
    for (const BatchSums& s : sums) {
        sum += s.sum;
        sum_sq += s.sum_sq;
        n += s.count;
    }
    const double mean = sum / n;
    const double variance = n > 1 ? (sum_sq - n * mean * mean) / (n - 1) : 0.0;
    return {mean, std::sqrt(std::max(variance, 0.0) / n)};
}

nlohmann::json mc_report(const std::string& integrand, const McConfig& cfg, const McEstimate& est,
                         const std::optional<std::string>& exact)
{
    nlohmann::json j = {{"integrand", integrand},     {"kappa", cfg.kappa},         {"kappa_prime", cfg.kappa_prime},
                        {"samples", cfg.samples},     {"seed", cfg.seed},           {"estimate", est.estimate},
                        {"stderr", est.standard_error}};
    j["exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
    return j;
}

}  // namespace jack4
