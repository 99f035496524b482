#ifndef JACK4_TEST_HELPERS_HPP
#define JACK4_TEST_HELPERS_HPP

#include "jack4/exact.hpp"
#include "jack4/poly.hpp"

#include <random>
#include <vector>

namespace jack4::testing {

inline const std::vector<Rational>& kappa_samples()
{
    static const std::vector<Rational> ks = {rational(1, 2), rational(1), rational(3), rational(5, 7)};
    return ks;
}

inline ParamContext ctx3(const Rational& kappa, const Rational& kappa_prime = 0)
{
    return make_context(kappa, kappa_prime, 3);
}

inline SparsePoly term(Frame frame, const Composition& exps, const Rational& c = 1)
{
    return SparsePoly::monomial(static_cast<int>(exps.size()), frame, exps, c);
}

inline SparsePoly var(Frame frame, int nvars, int index)
{
    return SparsePoly::variable(nvars, frame, index);
}

inline SparsePoly constant(Frame frame, int nvars, const Rational& c)
{
    return SparsePoly::constant(nvars, frame, c);
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9)
{
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return rational(num(rng), den(rng));
}

/// Random polynomial with up to `terms` monomials of degree <= max_degree.
inline SparsePoly random_poly(std::mt19937_64& rng, Frame frame, int nvars, int max_degree, int terms)
{
    std::uniform_int_distribution<int> e(0, max_degree);
    SparsePoly f(nvars, frame);
    for (int t = 0; t < terms; ++t) {
        Monomial m{};
        int budget = e(rng);
        for (int k = 0; k < nvars && budget > 0; ++k) {
            std::uniform_int_distribution<int> part(0, budget);
            const int p = k + 1 == nvars ? budget : part(rng);
            m[k] = static_cast<std::uint8_t>(p);
            budget -= p;
        }
        f.add_term(m, random_rational(rng));
    }
    return f;
}

}  // namespace jack4::testing

#endif
