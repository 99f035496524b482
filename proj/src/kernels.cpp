#include "jack4/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace jack4 {

std::vector<Monomial> monomial_basis(int nvars, int degree)
{
    std::vector<Monomial> out;
    for (const Composition& c : compositions(nvars, degree))
        out.push_back(to_monomial(c));
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

GramPairing::GramPairing(PairingKind kind, Frame frame, int nvars, ParamContext ctx, Exec exec)
    : kind_(kind), frame_(frame), nvars_(nvars), ctx_(std::move(ctx)), exec_(exec)
{
    // Reject unsupported frames up front.
    (void)pairing_operator(kind_, 0, SparsePoly(nvars_, frame_), ctx_);
    if (frame_ == Frame::X && ctx_.nvars() != nvars_)
        ctx_ = ctx_.with_nvars(nvars_);
}

const std::vector<Monomial>& GramPairing::monomials(int degree)
{
    return level(degree).basis;
}

const RationalMatrix& GramPairing::gram(int degree)
{
    return level(degree).gram;
}

const GramPairing::Level& GramPairing::level(int degree)
{
    if (degree < 0)
        throw std::invalid_argument("GramPairing: negative degree");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(levels_.size()) <= degree)
        build_level(static_cast<int>(levels_.size()));
    return *levels_[degree];
}

void GramPairing::build_level(int degree)
{
    auto lvl = std::make_unique<Level>();
    lvl->basis = monomial_basis(nvars_, degree);
    for (std::size_t k = 0; k < lvl->basis.size(); ++k)
        lvl->index.emplace(lvl->basis[k], static_cast<int>(k));
    const int n = static_cast<int>(lvl->basis.size());
    lvl->gram = RationalMatrix(n, n);
    if (degree == 0) {
        lvl->gram(0, 0) = 1;
        levels_.push_back(std::move(lvl));
        return;
    }
    const Level& prev = *levels_[degree - 1];

    // Column b: apply each operator once to m_b, then contract with the
    // previous level's row of m_a - e_v.
    auto column = [&](std::size_t b) {
        std::vector<std::vector<std::pair<int, Rational>>> images(nvars_);
        const SparsePoly mono = SparsePoly::monomial(nvars_, frame_, lvl->basis[b]);
        for (int v = 0; v < nvars_; ++v) {
            const SparsePoly img = pairing_operator(kind_, v, mono, ctx_);
            for (const auto& [m, c] : img.terms())
                images[v].emplace_back(prev.index.at(m), c);
        }
        std::vector<Rational> col(n);
        for (int a = 0; a < n; ++a) {
            Monomial reduced = lvl->basis[a];
            int v = 0;
            while (reduced[v] == 0)
                ++v;
            --reduced[v];
            const int row = prev.index.at(reduced);
            Rational sum = 0;
            for (const auto& [k, c] : images[v])
                sum += c * prev.gram(row, k);
            col[a] = std::move(sum);
        }
        return col;
    };
    const auto columns = sweep<std::vector<Rational>>(lvl->basis.size(), column, exec_);
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a)
            lvl->gram(a, b) = columns[b][a];
    levels_.push_back(std::move(lvl));
}

std::vector<Rational> GramPairing::coordinates(const SparsePoly& f, const Level& lvl) const
{
    std::vector<Rational> x(lvl.basis.size());
    for (const auto& [m, c] : f.terms()) {
        auto it = lvl.index.find(m);
        if (it != lvl.index.end())
            x[it->second] = c;
    }
    return x;
}

Rational GramPairing::pair(const SparsePoly& f, const SparsePoly& g)
{
    SparsePoly fs[] = {f};
    SparsePoly gs[] = {g};
    return pair_all(fs, gs)(0, 0);
}

RationalMatrix GramPairing::pair_all(std::span<const SparsePoly> fs, std::span<const SparsePoly> gs)
{
    int max_degree = 0;
    for (const auto* list : {&fs, &gs})
        for (const SparsePoly& p : *list) {
            if (p.frame() != frame_ || p.nvars() != nvars_)
                throw std::invalid_argument("GramPairing: polynomial frame differs from the pairing frame");
            max_degree = std::max(max_degree, p.degree());
        }
    RationalMatrix result(static_cast<int>(fs.size()), static_cast<int>(gs.size()));
    for (int d = 0; d <= max_degree; ++d) {
        const Level& lvl = level(d);
        std::vector<std::vector<Rational>> gx;
        for (const SparsePoly& g : gs)
            gx.push_back(coordinates(g, lvl));
        const int n = static_cast<int>(lvl.basis.size());
        auto row = [&](std::size_t i) {
            // t = x_f^T G, then t . x_g for every g
            const std::vector<Rational> fx = coordinates(fs[i], lvl);
            std::vector<Rational> t(n);
            for (int a = 0; a < n; ++a) {
                if (sgn(fx[a]) == 0)
                    continue;
                for (int b = 0; b < n; ++b)
                    if (sgn(lvl.gram(a, b)) != 0)
                        t[b] += fx[a] * lvl.gram(a, b);
            }
            std::vector<Rational> out(gs.size());
            for (std::size_t j = 0; j < gs.size(); ++j)
                for (int b = 0; b < n; ++b)
                    if (sgn(t[b]) != 0 && sgn(gx[j][b]) != 0)
                        out[j] += t[b] * gx[j][b];
            return out;
        };
        const auto rows = sweep<std::vector<Rational>>(fs.size(), row, exec_);
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = 0; j < gs.size(); ++j)
                result(static_cast<int>(i), static_cast<int>(j)) += rows[i][j];
    }
    return result;
}

}  // namespace jack4
