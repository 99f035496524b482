#ifndef JACK4_EXACT_HPP
#define JACK4_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace jack4 {

/// Arbitrary-precision rational; GMP keeps every value canonical (lowest
/// terms, positive denominator) after each arithmetic operation.
using Rational = mpq_class;

/// p/q in lowest terms. Throws std::invalid_argument when q == 0.
Rational rational(long p, long q = 1);

/// Parses "p" or "p/q" (optional leading '-'). Whitespace, decimals and a
/// zero denominator are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parameters of one exact session: kappa for the S_N and D_3 reflections,
/// kappa_prime for the sign change along v0, and the variable count N of the
/// type-A operators.
class ParamContext {
public:
    const Rational& kappa() const { return kappa_; }
    const Rational& kappa_prime() const { return kappa_prime_; }
    int nvars() const { return nvars_; }

    /// Same parameters, different N.
    ParamContext with_nvars(int n) const;

    std::string key() const;

private:
    friend ParamContext make_context(const Rational&, const Rational&, int);
    ParamContext(Rational k, Rational kp, int n)
        : kappa_(std::move(k)), kappa_prime_(std::move(kp)), nvars_(n) {}

    Rational kappa_;
    Rational kappa_prime_;
    int nvars_;
};

/// Validating constructor: kappa >= 0, kappa_prime >= 0, 2 <= N <= kMaxVars.
ParamContext make_context(const Rational& kappa, const Rational& kappa_prime, int nvars);

}  // namespace jack4

#endif
