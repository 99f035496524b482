#include "jack4/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jack4 {

namespace {

Monomial with_exponents(Monomial m, int a, int ea, int b, int eb)
{
    m[a] = static_cast<std::uint8_t>(ea);
    m[b] = static_cast<std::uint8_t>(eb);
    return m;
}

// Index of y_i (1 <= i <= 3) inside a Y3 or Y4 polynomial.
int b_var(const SparsePoly& f, int i, const char* op)
{
    if (i < 1 || i > 3)
        throw std::out_of_range(std::string(op) + ": index " + std::to_string(i) + " outside 1..3");
    if (f.frame() == Frame::Y3)
        return i - 1;
    if (f.frame() == Frame::Y4)
        return i;
    throw std::invalid_argument(std::string(op) + ": expected frame y3 or y4, got " + frame_name(f.frame(), f.nvars()));
}

void require_type_a(const SparsePoly& f, int i, const ParamContext& ctx, const char* op)
{
    if (f.frame() != Frame::X || f.nvars() != ctx.nvars())
        throw std::invalid_argument(std::string(op) + ": expected frame x" + std::to_string(ctx.nvars()) + ", got "
                                    + frame_name(f.frame(), f.nvars()));
    if (i < 1 || i > ctx.nvars())
        throw std::out_of_range(std::string(op) + ": index " + std::to_string(i) + " outside 1.."
                                + std::to_string(ctx.nvars()));
}

void require_x4(const SparsePoly& f, const char* op)
{
    if (f.frame() != Frame::X || f.nvars() != 4)
        throw std::invalid_argument(std::string(op) + ": expected frame x4, got " + frame_name(f.frame(), f.nvars()));
}

SparsePoly times_variable(const SparsePoly& f, int var)
{
    Monomial e{};
    e[var] = 1;
    return multiply_monomial(f, e);
}

}  // namespace

SparsePoly partial_derivative(const SparsePoly& f, int var)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0)
            continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, c * m[var]);
    }
    return r;
}

SparsePoly divided_difference(const SparsePoly& f, int a, int b)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        const int p = m[a], q = m[b];
        if (p == q)
            continue;
        const int lo = std::min(p, q), gap = std::abs(p - q);
        const Rational coef = p > q ? c : Rational(-c);
        for (int s = 0; s < gap; ++s)
            r.add_term(with_exponents(m, a, lo + s, b, lo + gap - 1 - s), coef);
    }
    return r;
}

SparsePoly divided_difference_tau(const SparsePoly& f, int a, int b)
{
    // With u = -y_b: y_a^p y_b^q - (f tau) = (-1)^q (y_a^p u^q - y_a^q u^p),
    // then divide by y_a - u and substitute back.
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        const int p = m[a], q = m[b];
        if (p == q)
            continue;
        const int lo = std::min(p, q), gap = std::abs(p - q);
        const Rational base = (p > q ? c : Rational(-c)) * (q % 2 ? -1 : 1);
        for (int s = 0; s < gap; ++s) {
            const int eb = lo + gap - 1 - s;
            r.add_term(with_exponents(m, a, lo + s, b, eb), eb % 2 ? Rational(-base) : base);
        }
    }
    return r;
}

SparsePoly sign_quotient(const SparsePoly& f, int var)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] % 2 == 0)
            continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, 2 * c);
    }
    return r;
}

SparsePoly apply_tau(const SparsePoly& f, int a, int b)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        Monomial s = m;
        std::swap(s[a], s[b]);
        r.add_term(s, (m[a] + m[b]) % 2 ? Rational(-c) : c);
    }
    return r;
}

SparsePoly euler(const SparsePoly& f)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c * total_degree(m));
    return r;
}

SparsePoly euler_in(const SparsePoly& f, int var)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms())
        r.add_term(m, c * m[var]);
    return r;
}

SparsePoly dunkl_A(int i, const SparsePoly& f, const ParamContext& ctx)
{
    require_type_a(f, i, ctx, "dunkl_A");
    const int a = i - 1;
    SparsePoly sum(f.nvars(), f.frame());
    for (int b = 0; b < f.nvars(); ++b)
        if (b != a)
            sum += divided_difference(f, a, b);
    return partial_derivative(f, a) + sum * ctx.kappa();
}

SparsePoly cherednik_A(int i, const SparsePoly& f, const ParamContext& ctx)
{
    require_type_a(f, i, ctx, "cherednik_A");
    const int a = i - 1;
    SparsePoly r = dunkl_A(i, times_variable(f, a), ctx);
    SparsePoly swaps(f.nvars(), f.frame());
    for (int b = 0; b < a; ++b)
        swaps += swap_variables(f, b, a);
    return r - swaps * ctx.kappa();
}

SparsePoly dunkl_B(int i, const SparsePoly& f, const ParamContext& ctx)
{
    const int a = b_var(f, i, "dunkl_B");
    SparsePoly sum(f.nvars(), f.frame());
    for (int j = 1; j <= 3; ++j) {
        if (j == i)
            continue;
        const int b = b_var(f, j, "dunkl_B");
        sum += divided_difference(f, a, b);
        sum += divided_difference_tau(f, a, b);
    }
    return partial_derivative(f, a) + sum * ctx.kappa();
}

SparsePoly cherednik_B(int i, const SparsePoly& f, const ParamContext& ctx)
{
    const int a = b_var(f, i, "cherednik_B");
    SparsePoly r = dunkl_B(i, times_variable(f, a), ctx);
    SparsePoly refl(f.nvars(), f.frame());
    for (int j = 1; j < i; ++j) {
        const int b = b_var(f, j, "cherednik_B");
        refl += swap_variables(f, a, b);
        refl += apply_tau(f, a, b);
    }
    return r - refl * ctx.kappa();
}

std::pair<int, int> corresponding_transposition(int i, int j, bool tau)
{
    // [s12, t12, s13, t13, s23, t23] <-> [(23), (14), (24), (13), (34), (12)]
    static constexpr std::pair<int, int> table[6] = {{2, 3}, {1, 4}, {2, 4}, {1, 3}, {3, 4}, {1, 2}};
    if (i > j)
        std::swap(i, j);
    int slot = -1;
    if (i == 1 && j == 2)
        slot = 0;
    else if (i == 1 && j == 3)
        slot = 2;
    else if (i == 2 && j == 3)
        slot = 4;
    if (slot < 0)
        throw std::out_of_range("corresponding_transposition: need 1 <= i < j <= 3");
    return table[slot + (tau ? 1 : 0)];
}

SparsePoly dunkl_B_xframe(int i, const SparsePoly& f, const ParamContext& ctx)
{
    require_x4(f, "dunkl_B_xframe");
    if (i < 1 || i > 3)
        throw std::out_of_range("dunkl_B_xframe: index outside 1..3");
    const auto& v = coord_vectors();
    SparsePoly r(4, Frame::X);
    for (int j = 0; j < 4; ++j)
        r += partial_derivative(f, j) * v[i][j];
    SparsePoly sum(4, Frame::X);
    for (int j = 1; j <= 3; ++j) {
        if (j == i)
            continue;
        for (bool tau : {false, true}) {
            // Root v_i - v_j (sigma) or v_i + v_j (tau) is e_p - e_q in x.
            int p = -1, q = -1;
            for (int k = 0; k < 4; ++k) {
                const Rational rk = tau ? Rational(v[i][k] + v[j][k]) : Rational(v[i][k] - v[j][k]);
                if (rk == 1)
                    p = k;
                else if (rk == -1)
                    q = k;
            }
            auto [ta, tb] = corresponding_transposition(i, j, tau);
            if (std::min(p, q) + 1 != std::min(ta, tb) || std::max(p, q) + 1 != std::max(ta, tb))
                throw std::logic_error("reflection correspondence table disagrees with the root vectors");
            sum += divided_difference(f, p, q);
        }
    }
    return r + sum * ctx.kappa();
}

SparsePoly dunkl_D0(const SparsePoly& f, const ParamContext& ctx)
{
    if (f.frame() != Frame::Y4 && f.frame() != Frame::Y0)
        throw std::invalid_argument("dunkl_D0: expected frame y4 or y0, got " + frame_name(f.frame(), f.nvars()));
    return partial_derivative(f, 0) + sign_quotient(f, 0) * ctx.kappa_prime();
}

SparsePoly dunkl_prime(int i, const SparsePoly& f, const ParamContext& ctx)
{
    require_x4(f, "dunkl_prime");
    SparsePoly r = dunkl_A(i, f, ctx.nvars() == 4 ? ctx : ctx.with_nvars(4));
    if (sgn(ctx.kappa_prime()) == 0)
        return r;
    return r + to_x(sign_quotient(to_y(f), 0)) * (ctx.kappa_prime() / 2);
}

SparsePoly d0_squared(const SparsePoly& f, const ParamContext& ctx)
{
    return dunkl_D0(dunkl_D0(f, ctx), ctx);
}

SparsePoly laplacian(OperatorKind kind, const SparsePoly& f, const ParamContext& ctx)
{
    if (kind == OperatorKind::LaplacianB) {
        SparsePoly r(f.nvars(), f.frame());
        for (int i = 1; i <= 3; ++i)
            r += dunkl_B(i, dunkl_B(i, f, ctx), ctx);
        return r;
    }
    if (kind == OperatorKind::LaplacianH) {
        if (f.frame() == Frame::Y4)
            return laplacian(OperatorKind::LaplacianB, f, ctx) + d0_squared(f, ctx);
        require_x4(f, "laplacian");
        const ParamContext ctx4 = ctx.nvars() == 4 ? ctx : ctx.with_nvars(4);
        SparsePoly r(4, Frame::X);
        for (int i = 1; i <= 4; ++i)
            r += dunkl_prime(i, dunkl_prime(i, f, ctx4), ctx4);
        return r;
    }
    throw std::invalid_argument("laplacian: kind must be LaplacianB or LaplacianH");
}

SparsePoly apply(const Operator& op, const SparsePoly& f, const ParamContext& ctx)
{
    switch (op.kind) {
    case OperatorKind::DunklA:
        return dunkl_A(op.index, f, ctx);
    case OperatorKind::CherednikA:
        return cherednik_A(op.index, f, ctx);
    case OperatorKind::DunklB:
        return dunkl_B(op.index, f, ctx);
    case OperatorKind::CherednikB:
        return cherednik_B(op.index, f, ctx);
    case OperatorKind::D0:
        return dunkl_D0(f, ctx);
    case OperatorKind::DunklPrime:
        return dunkl_prime(op.index, f, ctx);
    case OperatorKind::LaplacianB:
    case OperatorKind::LaplacianH:
        return laplacian(op.kind, f, ctx);
    }
    throw std::invalid_argument("apply: unknown operator");
}

SparsePoly pairing_operator(PairingKind kind, int var, const SparsePoly& g, const ParamContext& ctx)
{
    if (kind == PairingKind::Kappa) {
        if (g.frame() == Frame::X)
            return dunkl_A(var + 1, g, ctx.nvars() == g.nvars() ? ctx : ctx.with_nvars(g.nvars()));
        if (g.frame() == Frame::Y3)
            return dunkl_B(var + 1, g, ctx);
    } else {
        if (g.frame() == Frame::X && g.nvars() == 4)
            return dunkl_prime(var + 1, g, ctx);
        if (g.frame() == Frame::Y4)
            return var == 0 ? dunkl_D0(g, ctx) : dunkl_B(var, g, ctx);
    }
    throw std::invalid_argument(std::string(kind == PairingKind::Kappa ? "pairing_kappa" : "pairing_extended")
                                + ": unsupported frame " + frame_name(g.frame(), g.nvars()));
}

namespace {

Rational pairing_direct(PairingKind kind, const SparsePoly& f, const SparsePoly& g, const ParamContext& ctx)
{
    f.require_compatible(g, kind == PairingKind::Kappa ? "pairing_kappa" : "pairing_extended");
    // Validates the frame even when f is zero.
    (void)pairing_operator(kind, 0, SparsePoly(g.nvars(), g.frame()), ctx);
    const ParamContext local = (g.frame() == Frame::X && ctx.nvars() != g.nvars()) ? ctx.with_nvars(g.nvars()) : ctx;
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        SparsePoly h = g.homogeneous_part(total_degree(m));
        for (int v = 0; v < f.nvars() && !h.is_zero(); ++v)
            for (int e = 0; e < m[v] && !h.is_zero(); ++e)
                h = pairing_operator(kind, v, h, local);
        sum += c * h.constant_term();
    }
    return sum;
}

}  // namespace

Rational pairing_kappa(const SparsePoly& f, const SparsePoly& g, const ParamContext& ctx)
{
    return pairing_direct(PairingKind::Kappa, f, g, ctx);
}

Rational pairing_extended(const SparsePoly& f, const SparsePoly& g, const ParamContext& ctx)
{
    return pairing_direct(PairingKind::Extended, f, g, ctx);
}

}  // namespace jack4
