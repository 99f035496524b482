#include "jack4/jack.hpp"

#include "jack4/kernels.hpp"
#include "jack4/ops.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace jack4 {

namespace {

using Batch = std::map<Composition, std::shared_ptr<const NsjpRecord>>;

// Solves every zeta_alpha with |alpha| = degree. With monomials ascending in
// the canonical order, each Cherednik matrix is upper triangular, so for the
// eigenvector v of alpha (v_alpha = 1) every lower coefficient follows from
//   (xi_i(alpha) - xi_i(beta)) v_beta = sum_{beta < gamma <= alpha} U_i[beta, gamma] v_gamma
// using any i whose eigenvalues separate alpha from beta.
Batch solve_degree(int degree, const ParamContext& ctx)
{
    const int n = ctx.nvars();
    const std::vector<Composition> basis = compositions(n, degree);
    const int dim = static_cast<int>(basis.size());
    std::map<Monomial, int, MonomialOrder> index;
    for (int k = 0; k < dim; ++k)
        index.emplace(to_monomial(basis[k]), k);

    // columns[i][g] = U_{i+1} x^{basis[g]} as (row, coefficient) pairs
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> columns(n);
    for (int i = 0; i < n; ++i) {
        columns[i].resize(dim);
        for (int g = 0; g < dim; ++g) {
            const SparsePoly img = cherednik_A(i + 1, SparsePoly::monomial(n, Frame::X, basis[g]), ctx);
            for (const auto& [m, c] : img.terms()) {
                const int row = index.at(m);
                if (row > g)
                    throw std::logic_error("Cherednik operator is not triangular in the canonical order");
                columns[i][g].emplace_back(row, c);
            }
        }
    }
    // rows[i][b] = list of (gamma, U_i[b, gamma]) with gamma > b
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> rows(n, std::vector<std::vector<std::pair<int, Rational>>>(dim));
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < dim; ++g)
            for (const auto& [row, c] : columns[i][g])
                if (row != g)
                    rows[i][row].emplace_back(g, c);

    std::vector<std::vector<Rational>> spectra(dim);
    for (int k = 0; k < dim; ++k)
        spectra[k] = spectral_vector(basis[k], ctx);

    Batch batch;
    for (int a = 0; a < dim; ++a) {
        std::vector<Rational> v(dim);
        v[a] = 1;
        for (int b = a - 1; b >= 0; --b) {
            int sep = -1;
            for (int i = 0; i < n && sep < 0; ++i)
                if (spectra[a][i] != spectra[b][i])
                    sep = i;
            if (sep < 0)
                throw std::runtime_error("nsjp: spectral vectors of " + std::to_string(a) + " and "
                                         + std::to_string(b) + " coincide; joint eigenspace is not simple");
            Rational sum = 0;
            for (const auto& [g, c] : rows[sep][b])
                if (g <= a && sgn(v[g]) != 0)
                    sum += c * v[g];
            v[b] = sum / (spectra[a][sep] - spectra[b][sep]);
        }
        SparsePoly poly(n, Frame::X);
        for (int k = 0; k <= a; ++k)
            poly.add_term(to_monomial(basis[k]), v[k]);
        auto rec = std::make_shared<NsjpRecord>(
            NsjpRecord{basis[a], std::move(poly), spectra[a], nsjp_norm(basis[a], ctx)});
        batch.emplace(basis[a], std::move(rec));
    }
    return batch;
}

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const Batch>> cache;

}  // namespace

std::shared_ptr<const NsjpRecord> nsjp(const Composition& alpha, const ParamContext& ctx)
{
    if (static_cast<int>(alpha.size()) != ctx.nvars())
        throw std::invalid_argument("nsjp: label length " + std::to_string(alpha.size()) + " differs from N = "
                                    + std::to_string(ctx.nvars()));
    for (int part : alpha)
        if (part < 0)
            throw std::invalid_argument("nsjp: negative part in label");
    if (sgn(ctx.kappa()) <= 0)
        throw std::domain_error("nsjp: kappa must be positive for a simple joint spectrum");

    const int degree = weight(alpha);
    const std::string key = std::to_string(degree) + "|" + ctx.key();
    std::shared_ptr<const Batch> batch;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            batch = it->second;
    }
    if (!batch) {
        // Computed outside the lock; a concurrent duplicate yields the same batch.
        auto fresh = std::make_shared<const Batch>(solve_degree(degree, ctx));
        std::lock_guard lock(cache_mutex);
        batch = cache.try_emplace(key, std::move(fresh)).first->second;
    }
    return batch->at(alpha);
}

std::size_t nsjp_cache_size()
{
    std::lock_guard lock(cache_mutex);
    return cache.size();
}

Rational nsjp_norm(const Composition& alpha, const ParamContext& ctx)
{
    const ParamContext local = ctx.nvars() == static_cast<int>(alpha.size())
                                   ? ctx
                                   : ctx.with_nvars(static_cast<int>(alpha.size()));
    const Rational n_kappa_1 = local.kappa() * local.nvars() + 1;
    return gen_pochhammer(sort_to_partition(alpha).partition, n_kappa_1, local) * hook_product(alpha, 1, local)
           / hook_product(alpha, local.kappa() + 1, local);
}

SparsePoly symmetric_jack(const Partition& lambda, const ParamContext& ctx)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("symmetric_jack: label is not a partition");
    SparsePoly j(ctx.nvars(), Frame::X);
    for (const Composition& alpha : orbit(lambda))
        j += nsjp(alpha, ctx)->poly * e_epsilon(alpha, -1, ctx);
    return j;
}

Rational jack_norm(const Partition& lambda, const ParamContext& ctx)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("jack_norm: label is not a partition");
    const ParamContext local = ctx.nvars() == static_cast<int>(lambda.size())
                                   ? ctx
                                   : ctx.with_nvars(static_cast<int>(lambda.size()));
    const Rational n_kappa_1 = local.kappa() * local.nvars() + 1;
    return Rational(orbit_count(lambda)) * gen_pochhammer(lambda, n_kappa_1, local) * hook_product(lambda, 1, local)
           / (e_epsilon(reversed(lambda), 1, local) * hook_product(lambda, local.kappa() + 1, local));
}

Rational nsjp_eval_ones(const Composition& alpha, const ParamContext& ctx)
{
    if (alpha.size() != 3)
        throw std::invalid_argument("nsjp_eval_ones: defined for N = 3");
    const ParamContext local = ctx.nvars() == 3 ? ctx : ctx.with_nvars(3);
    return gen_pochhammer(sort_to_partition(alpha).partition, local.kappa() * 3 + 1, local)
           / hook_product(alpha, local.kappa() + 1, local);
}

}  // namespace jack4
