#include "jack4/combin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jack4 {

Permutation Permutation::identity(int n)
{
    Permutation w;
    w.images.resize(n);
    std::iota(w.images.begin(), w.images.end(), 1);
    return w;
}

Permutation Permutation::inverse() const
{
    Permutation inv;
    inv.images.resize(images.size());
    for (int i = 1; i <= size(); ++i)
        inv.images[(*this)(i) - 1] = i;
    return inv;
}

Permutation Permutation::compose(const Permutation& other) const
{
    if (other.size() != size())
        throw std::invalid_argument("Permutation::compose: size mismatch");
    Permutation r;
    r.images.resize(images.size());
    for (int i = 1; i <= size(); ++i)
        r.images[i - 1] = (*this)(other(i));
    return r;
}

bool Permutation::is_valid() const
{
    std::vector<bool> seen(images.size() + 1, false);
    for (int v : images) {
        if (v < 1 || v > size() || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

int weight(const Composition& a)
{
    return std::accumulate(a.begin(), a.end(), 0);
}

int length(const Composition& a)
{
    for (int i = static_cast<int>(a.size()); i >= 1; --i)
        if (a[i - 1] > 0)
            return i;
    return 0;
}

bool is_partition(const Composition& a)
{
    return std::is_sorted(a.begin(), a.end(), std::greater<>());
}

Composition act(const Permutation& w, const Composition& a)
{
    if (w.size() != static_cast<int>(a.size()))
        throw std::invalid_argument("act: permutation and composition sizes differ");
    Composition r(a.size());
    for (int i = 1; i <= w.size(); ++i)
        r[w(i) - 1] = a[i - 1];
    return r;
}

SortedComposition sort_to_partition(const Composition& a)
{
    SortedComposition s;
    const int n = static_cast<int>(a.size());
    s.w.images.resize(n);
    s.partition.resize(n);
    for (int i = 1; i <= n; ++i) {
        int r = rank(a, i);
        s.w.images[r - 1] = i;
        s.partition[r - 1] = a[i - 1];
    }
    return s;
}

bool partial_sum_dominates(const Composition& a, const Composition& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("partial_sum_dominates: length mismatch");
    if (a == b)
        return false;
    long sa = 0, sb = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        sa += a[j];
        sb += b[j];
        if (sa < sb)
            return false;
    }
    return true;
}

bool dominates(const Composition& a, const Composition& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: compositions have lengths " + std::to_string(a.size()) + " and "
                                    + std::to_string(b.size()));
    if (weight(a) != weight(b))
        return false;
    Partition ap = sort_to_partition(a).partition;
    Partition bp = sort_to_partition(b).partition;
    if (ap == bp)
        return partial_sum_dominates(a, b);
    return partial_sum_dominates(ap, bp);
}

bool canonical_less(const Composition& a, const Composition& b)
{
    int wa = weight(a), wb = weight(b);
    if (wa != wb)
        return wa < wb;
    Composition sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    if (sa != sb)
        return sa < sb;
    return a < b;
}

int rank(const Composition& a, int i)
{
    const int n = static_cast<int>(a.size());
    if (i < 1 || i > n)
        throw std::out_of_range("rank: index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    const int ai = a[i - 1];
    int r = 0;
    for (int j = 1; j <= n; ++j) {
        if (a[j - 1] > ai || (j <= i && a[j - 1] == ai))
            ++r;
    }
    return r;
}

std::vector<int> ranks(const Composition& a)
{
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = rank(a, static_cast<int>(i) + 1);
    return r;
}

std::vector<Rational> spectral_vector(const Composition& a, const ParamContext& ctx)
{
    const int n = static_cast<int>(a.size());
    if (n != ctx.nvars())
        throw std::invalid_argument("spectral_vector: composition length " + std::to_string(n)
                                    + " differs from N = " + std::to_string(ctx.nvars()));
    std::vector<Rational> xi;
    xi.reserve(n);
    for (int i = 1; i <= n; ++i)
        xi.push_back(Rational(n - rank(a, i)) * ctx.kappa() + (a[i - 1] + 1));
    return xi;
}

int leg_length(const Composition& a, int i, int j)
{
    const int n = static_cast<int>(a.size());
    if (i < 1 || i > length(a) || j < 1 || j > a[i - 1])
        throw std::out_of_range("leg_length: node (" + std::to_string(i) + "," + std::to_string(j)
                                + ") is outside the Ferrers diagram");
    const int ai = a[i - 1];
    int leg = 0;
    for (int l = i + 1; l <= n; ++l)
        if (j <= a[l - 1] && a[l - 1] <= ai)
            ++leg;
    for (int l = 1; l < i; ++l)
        if (j <= a[l - 1] + 1 && a[l - 1] + 1 <= ai)
            ++leg;
    return leg;
}

Rational hook_product(const Composition& a, const Rational& t, const ParamContext& ctx)
{
    Rational h = 1;
    for (int i = 1; i <= length(a); ++i)
        for (int j = 1; j <= a[i - 1]; ++j)
            h *= Rational(a[i - 1] - j) + t + ctx.kappa() * leg_length(a, i, j);
    return h;
}

Rational gen_pochhammer(const Partition& lambda, const Rational& t, const ParamContext& ctx)
{
    Rational p = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            p *= t - ctx.kappa() * static_cast<long>(i) + j;
    return p;
}

Rational pochhammer(const Rational& t, int n)
{
    Rational p = 1;
    for (int j = 0; j < n; ++j)
        p *= t + j;
    return p;
}

Rational e_epsilon(const Composition& a, int eps, const ParamContext& ctx)
{
    if (eps != 1 && eps != -1)
        throw std::invalid_argument("e_epsilon: eps must be +1 or -1");
    const std::vector<int> r = ranks(a);
    Rational e = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] < a[j])
                e *= 1 + Rational(eps) * ctx.kappa() / (ctx.kappa() * (r[i] - r[j]) + (a[j] - a[i]));
    return e;
}

std::int64_t orbit_count(const Partition& lambda)
{
    auto factorial = [](std::int64_t n) {
        std::int64_t f = 1;
        for (std::int64_t k = 2; k <= n; ++k)
            f *= k;
        return f;
    };
    std::int64_t count = factorial(static_cast<std::int64_t>(lambda.size()));
    Composition sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        count /= factorial(static_cast<std::int64_t>(j - i));
        i = j;
    }
    return count;
}

Composition reversed(const Composition& a)
{
    return Composition(a.rbegin(), a.rend());
}

namespace {

void fill_compositions(int parts, int degree, Composition& current, std::vector<Composition>& out)
{
    if (static_cast<int>(current.size()) == parts - 1) {
        current.push_back(degree);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        current.push_back(v);
        fill_compositions(parts, degree - v, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int parts, int degree)
{
    if (parts < 1 || degree < 0)
        throw std::invalid_argument("compositions: need parts >= 1 and degree >= 0");
    std::vector<Composition> out;
    Composition current;
    fill_compositions(parts, degree, current, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Partition> partitions(int parts, int degree)
{
    std::vector<Partition> out;
    for (auto& c : compositions(parts, degree))
        if (is_partition(c))
            out.push_back(std::move(c));
    return out;
}

std::vector<Composition> orbit(const Partition& lambda)
{
    Composition c = lambda;
    std::sort(c.begin(), c.end());
    std::vector<Composition> out;
    do {
        out.push_back(c);
    } while (std::next_permutation(c.begin(), c.end()));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace jack4
