#ifndef JACK4_KERNELS_HPP
#define JACK4_KERNELS_HPP

#include "jack4/exact.hpp"
#include "jack4/ops.hpp"
#include "jack4/poly.hpp"

#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace jack4 {

enum class Exec { Serial, Parallel };

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Runs fn(0..n-1) and collects the results in index order. With
/// Exec::Parallel the calls are distributed over OpenMP threads; the first
/// exception thrown by any call is rethrown on the calling thread.
template <class T, class Fn>
std::vector<T> sweep(std::size_t n, Fn&& fn, Exec exec)
{
    std::vector<T> out;
    if (exec == Exec::Serial) {
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(fn(i));
        return out;
    }
    std::vector<std::optional<T>> slots(n);
    std::exception_ptr error;
    std::mutex error_mutex;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            slots[i].emplace(fn(static_cast<std::size_t>(i)));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    out.reserve(n);
    for (auto& slot : slots)
        out.push_back(std::move(*slot));
    return out;
}

/// Monomials of a fixed degree in `nvars` variables, in MonomialOrder.
std::vector<Monomial> monomial_basis(int nvars, int degree);

/// Gram matrices G_d[a][b] = <m_a, m_b> of a Dunkl pairing on the monomials of
/// degree d, built degree by degree from
///   <m_a, m_b> = sum_k c_k <m_a - e_v, m_k>,   D_v m_b = sum_k c_k m_k,
/// where v is the first variable of m_a. Pairings of arbitrary polynomials
/// then reduce to bilinear forms. Levels are built lazily and cached; the
/// object is safe to share between threads.
class GramPairing {
public:
    GramPairing(PairingKind kind, Frame frame, int nvars, ParamContext ctx, Exec exec = Exec::Parallel);

    const std::vector<Monomial>& monomials(int degree);
    const RationalMatrix& gram(int degree);

    Rational pair(const SparsePoly& f, const SparsePoly& g);

    /// result(i, j) = <fs[i], gs[j]>.
    RationalMatrix pair_all(std::span<const SparsePoly> fs, std::span<const SparsePoly> gs);

private:
    struct Level {
        std::vector<Monomial> basis;
        std::map<Monomial, int, MonomialOrder> index;
        RationalMatrix gram;
    };

    const Level& level(int degree);
    void build_level(int degree);
    std::vector<Rational> coordinates(const SparsePoly& f, const Level& lvl) const;

    PairingKind kind_;
    Frame frame_;
    int nvars_;
    ParamContext ctx_;
    Exec exec_;
    std::mutex mutex_;
    std::vector<std::unique_ptr<Level>> levels_;
};

}  // namespace jack4

#endif
