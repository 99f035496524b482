#ifndef JACK4_COMBIN_HPP
#define JACK4_COMBIN_HPP

#include "jack4/exact.hpp"

#include <cstdint>
#include <vector>

// Compositions, partitions and the Ferrers-diagram statistics behind the
// Jack norm formulas. Index arguments named `i`, `j` are 1-based, matching
// the usual x_1..x_N labelling; the underlying vectors are 0-based.

namespace jack4 {

/// Finite sequence of nonnegative integers. A Partition is a Composition
/// whose parts are weakly decreasing; the alias only documents intent.
using Composition = std::vector<int>;
using Partition = Composition;

/// Permutation of {1..n}, stored by images: images[i-1] = w(i).
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }
    Permutation inverse() const;
    /// (this * other)(i) = this(other(i)).
    Permutation compose(const Permutation& other) const;
    bool is_valid() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

int weight(const Composition& a);
/// max{i : a_i > 0}, 0 for the zero composition.
int length(const Composition& a);
bool is_partition(const Composition& a);

/// (w a)_i = a_{w^{-1}(i)}.
Composition act(const Permutation& w, const Composition& a);

/// Decreasing rearrangement a+ together with w, the inverse of i -> rank(a, i).
/// The pair satisfies rank(a, w(i)) = i and a+_i = a_{w(i)}.
struct SortedComposition {
    Partition partition;
    Permutation w;
};
SortedComposition sort_to_partition(const Composition& a);

/// a != b and every partial sum of a is >= the matching partial sum of b.
bool partial_sum_dominates(const Composition& a, const Composition& b);

/// a |> b: equal weight and either a+ > b+, or a+ = b+ and a > b (partial sums).
/// Throws std::invalid_argument when the lengths differ.
bool dominates(const Composition& a, const Composition& b);

/// Deterministic total order refining |>: total degree, then lexicographic
/// order of the sorted parts, then lexicographic order of the parts.
bool canonical_less(const Composition& a, const Composition& b);

/// r(a, i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i}.
int rank(const Composition& a, int i);
std::vector<int> ranks(const Composition& a);

/// xi_i(a) = (N - r(a, i)) kappa + a_i + 1 with N = ctx.nvars().
std::vector<Rational> spectral_vector(const Composition& a, const ParamContext& ctx);

/// Leg-length of node (i, j), 1 <= i <= length(a), 1 <= j <= a_i.
int leg_length(const Composition& a, int i, int j);

/// h(a, t) = prod over nodes (i, j), j >= 1, of (a_i - j + t + kappa L(a; i, j)).
Rational hook_product(const Composition& a, const Rational& t, const ParamContext& ctx);

/// (t)_lambda = prod_i prod_{j < lambda_i} (t - (i - 1) kappa + j).
Rational gen_pochhammer(const Partition& lambda, const Rational& t, const ParamContext& ctx);

/// Ordinary rising factorial (t)_n.
Rational pochhammer(const Rational& t, int n);

/// E_eps(a) = prod_{i<j, a_i<a_j} (1 + eps kappa / ((r(a,i) - r(a,j)) kappa + a_j - a_i)).
Rational e_epsilon(const Composition& a, int eps, const ParamContext& ctx);

/// N! / prod(multiplicity!) = #{a : a+ = lambda}.
std::int64_t orbit_count(const Partition& lambda);

/// Reversed parts, lambda^R_i = lambda_{N+1-i}.
Composition reversed(const Composition& a);

/// All compositions with `parts` entries and weight `degree`, ascending in
/// canonical_less.
std::vector<Composition> compositions(int parts, int degree);

/// All partitions with `parts` entries (zeros allowed) and weight `degree`.
std::vector<Partition> partitions(int parts, int degree);

/// Distinct rearrangements of lambda, ascending in canonical_less.
std::vector<Composition> orbit(const Partition& lambda);

}  // namespace jack4

#endif
