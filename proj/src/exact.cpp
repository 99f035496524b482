#include "jack4/exact.hpp"

#include "jack4/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace jack4 {

Rational rational(long p, long q)
{
    if (q == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (allow_sign && !s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false)))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    mpz_class p(std::string(num), 10);
    mpz_class q(1);
    if (slash != std::string_view::npos)
        q = mpz_class(std::string(den), 10);
    if (q == 0)
        throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

ParamContext ParamContext::with_nvars(int n) const
{
    return make_context(kappa_, kappa_prime_, n);
}

std::string ParamContext::key() const
{
    return kappa_.get_str() + ";" + kappa_prime_.get_str() + ";" + std::to_string(nvars_);
}

ParamContext make_context(const Rational& kappa, const Rational& kappa_prime, int nvars)
{
    if (sgn(kappa) < 0)
        throw std::invalid_argument("kappa must be nonnegative, got " + to_string(kappa));
    if (sgn(kappa_prime) < 0)
        throw std::invalid_argument("kappa_prime must be nonnegative, got " + to_string(kappa_prime));
    if (nvars < 2 || nvars > kMaxVars)
        throw std::invalid_argument("nvars must lie in [2, " + std::to_string(kMaxVars) + "], got "
                                    + std::to_string(nvars));
    return ParamContext(kappa, kappa_prime, nvars);
}

}  // namespace jack4
