#ifndef JACK4_POLY_HPP
#define JACK4_POLY_HPP

#include "jack4/combin.hpp"
#include "jack4/exact.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace jack4 {

inline constexpr int kMaxVars = 6;

/// Exponent vector; slots at or beyond the owning polynomial's nvars are 0.
using Monomial = std::array<std::uint8_t, kMaxVars>;

Monomial to_monomial(const Composition& c);
Composition to_composition(const Monomial& m, int nvars);
int total_degree(const Monomial& m);

/// Iteration order of polynomial terms: descending canonical order, so the
/// leading (most dominant) monomial comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Coordinate frame of a polynomial.
///   X  : x_1..x_N, variable k is x_{k+1}
///   Y4 : y_0..y_3, variable k is y_k
///   Y3 : y_1..y_3, variable k is y_{k+1}
///   Y0 : y_0 alone (also used for univariate polynomials in t)
enum class Frame { X, Y4, Y3, Y0 };

std::string frame_name(Frame frame, int nvars);
/// Inverse of frame_name; writes the variable count implied by the name.
Frame parse_frame(const std::string& name, int& nvars);

class SparsePoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    SparsePoly(int nvars, Frame frame);

    static SparsePoly constant(int nvars, Frame frame, const Rational& c);
    static SparsePoly monomial(int nvars, Frame frame, const Monomial& m, const Rational& c = 1);
    static SparsePoly monomial(int nvars, Frame frame, const Composition& e, const Rational& c = 1);
    /// The coordinate function with 0-based variable index `var`.
    static SparsePoly variable(int nvars, Frame frame, int var);

    int nvars() const { return nvars_; }
    Frame frame() const { return frame_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    /// Accumulates c into the coefficient of m, pruning a resulting zero.
    void add_term(const Monomial& m, const Rational& c);
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    SparsePoly homogeneous_part(int d) const;
    bool is_homogeneous() const;

    SparsePoly& operator+=(const SparsePoly& g);
    SparsePoly& operator-=(const SparsePoly& g);
    SparsePoly& operator*=(const Rational& c);

    friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
    friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator*(SparsePoly f, const Rational& c) { return f *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly f) { return f *= c; }
    SparsePoly operator-() const;

    friend bool operator==(const SparsePoly& f, const SparsePoly& g);

    /// Throws std::invalid_argument unless g has the same frame and nvars.
    void require_compatible(const SparsePoly& g, const char* op) const;

private:
    int nvars_;
    Frame frame_;
    Terms terms_;
};

Rational evaluate(const SparsePoly& f, std::span<const Rational> point);

/// w acts on monomials by x^a -> x^{w a}, (w a)_i = a_{w^{-1}(i)}.
SparsePoly apply_permutation(const Permutation& w, const SparsePoly& f);

/// Swaps variables a and b (0-based), i.e. the transposition action.
SparsePoly swap_variables(const SparsePoly& f, int a, int b);

/// sigma_i: y_i -> -y_i. In Y3 i is 1..3; in Y4 and Y0 i is the subscript of
/// y_i (0..3). In an X frame with 4 variables only i = 0 is accepted and is
/// realized as x -> x - (x_1 + x_2 + x_3 + x_4) v0.
SparsePoly sign_change(int i, const SparsePoly& f);

/// The orthonormal vectors v0..v3 (rows), entries +-1/2; y_i = <x, v_i>.
const std::array<std::array<Rational, 4>, 4>& coord_vectors();

/// Exact linear change of variables between the X (4 variables) and Y4 frames.
SparsePoly to_y(const SparsePoly& f);
SparsePoly to_x(const SparsePoly& f);

/// f(y_1^2, y_2^2, y_3^2) for a three-variable f; result in Y3.
SparsePoly substitute_squares(const SparsePoly& f);

/// Y3 -> Y4 (the y_1..y_3 variables) and Y0 -> Y4.
SparsePoly embed_y3(const SparsePoly& f);
SparsePoly embed_y0(const SparsePoly& f);

/// f with every coefficient multiplied into the monomial y^m (same frame).
SparsePoly multiply_monomial(const SparsePoly& f, const Monomial& m);

/// JSON schema {"nvars", "frame", "terms": [{"exp": [...], "coef": "p/q"}]},
/// terms in MonomialOrder.
nlohmann::json to_json(const SparsePoly& f);
SparsePoly poly_from_json(const nlohmann::json& j);

/// Human-readable rendering such as "x1^2 - 1/2*x2".
std::string to_string(const SparsePoly& f);

}  // namespace jack4

#endif
