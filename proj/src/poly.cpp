#include "jack4/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace jack4 {

Monomial to_monomial(const Composition& c)
{
    if (c.size() > kMaxVars)
        throw std::invalid_argument("to_monomial: more than kMaxVars entries");
    Monomial m{};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] > 255)
            throw std::invalid_argument("to_monomial: exponent out of range");
        m[i] = static_cast<std::uint8_t>(c[i]);
    }
    return m;
}

Composition to_composition(const Monomial& m, int nvars)
{
    return Composition(m.begin(), m.begin() + nvars);
}

int total_degree(const Monomial& m)
{
    int d = 0;
    for (auto e : m)
        d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    // true when a precedes b, i.e. b < a canonically.
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    Monomial sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), std::greater<>());
    std::sort(sb.begin(), sb.end(), std::greater<>());
    if (sa != sb)
        return sa > sb;
    return a > b;
}

std::string frame_name(Frame frame, int nvars)
{
    switch (frame) {
    case Frame::X:
        return "x" + std::to_string(nvars);
    case Frame::Y4:
        return "y4";
    case Frame::Y3:
        return "y3";
    case Frame::Y0:
        return "y0";
    }
    return "?";
}

Frame parse_frame(const std::string& name, int& nvars)
{
    if (name == "y4") {
        nvars = 4;
        return Frame::Y4;
    }
    if (name == "y3") {
        nvars = 3;
        return Frame::Y3;
    }
    if (name == "y0") {
        nvars = 1;
        return Frame::Y0;
    }
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '0' + kMaxVars) {
        nvars = name[1] - '0';
        return Frame::X;
    }
    throw std::invalid_argument("unknown frame '" + name + "'");
}

namespace {

void check_frame_arity(int nvars, Frame frame)
{
    bool ok = false;
    switch (frame) {
    case Frame::X:
        ok = nvars >= 1 && nvars <= kMaxVars;
        break;
    case Frame::Y4:
        ok = nvars == 4;
        break;
    case Frame::Y3:
        ok = nvars == 3;
        break;
    case Frame::Y0:
        ok = nvars == 1;
        break;
    }
    if (!ok)
        throw std::invalid_argument("frame " + frame_name(frame, nvars) + " cannot have "
                                    + std::to_string(nvars) + " variables");
}

}  // namespace

SparsePoly::SparsePoly(int nvars, Frame frame) : nvars_(nvars), frame_(frame)
{
    check_frame_arity(nvars, frame);
}

SparsePoly SparsePoly::constant(int nvars, Frame frame, const Rational& c)
{
    SparsePoly p(nvars, frame);
    p.add_term(Monomial{}, c);
    return p;
}

SparsePoly SparsePoly::monomial(int nvars, Frame frame, const Monomial& m, const Rational& c)
{
    for (int k = nvars; k < kMaxVars; ++k)
        if (m[k] != 0)
            throw std::invalid_argument("monomial has exponents beyond nvars");
    SparsePoly p(nvars, frame);
    p.add_term(m, c);
    return p;
}

SparsePoly SparsePoly::monomial(int nvars, Frame frame, const Composition& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("monomial: exponent length differs from nvars");
    return monomial(nvars, frame, to_monomial(e), c);
}

SparsePoly SparsePoly::variable(int nvars, Frame frame, int var)
{
    if (var < 0 || var >= nvars)
        throw std::out_of_range("variable index out of range");
    Monomial m{};
    m[var] = 1;
    return monomial(nvars, frame, m);
}

Rational SparsePoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const
{
    return coefficient(Monomial{});
}

void SparsePoly::add_term(const Monomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

int SparsePoly::degree() const
{
    // MonomialOrder sorts by descending total degree.
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

SparsePoly SparsePoly::homogeneous_part(int d) const
{
    SparsePoly p(nvars_, frame_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d)
            p.terms_.emplace_hint(p.terms_.end(), m, c);
    return p;
}

bool SparsePoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

void SparsePoly::require_compatible(const SparsePoly& g, const char* op) const
{
    if (nvars_ != g.nvars_ || frame_ != g.frame_)
        throw std::invalid_argument(std::string(op) + ": frame mismatch (" + frame_name(frame_, nvars_) + " vs "
                                    + frame_name(g.frame_, g.nvars_) + ")");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& g)
{
    require_compatible(g, "operator+");
    for (const auto& [m, c] : g.terms_)
        add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& g)
{
    require_compatible(g, "operator-");
    for (const auto& [m, c] : g.terms_)
        add_term(m, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g)
{
    f.require_compatible(g, "operator*");
    SparsePoly r(f.nvars_, f.frame_);
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            Monomial m;
            for (int k = 0; k < kMaxVars; ++k)
                m[k] = static_cast<std::uint8_t>(mf[k] + mg[k]);
            r.add_term(m, cf * cg);
        }
    }
    return r;
}

SparsePoly SparsePoly::operator-() const
{
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

bool operator==(const SparsePoly& f, const SparsePoly& g)
{
    return f.nvars_ == g.nvars_ && f.frame_ == g.frame_ && f.terms_ == g.terms_;
}

Rational evaluate(const SparsePoly& f, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) != f.nvars())
        throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected "
                                    + std::to_string(f.nvars()));
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational term = c;
        for (int k = 0; k < f.nvars(); ++k)
            for (int e = 0; e < m[k]; ++e)
                term *= point[k];
        sum += term;
    }
    return sum;
}

SparsePoly apply_permutation(const Permutation& w, const SparsePoly& f)
{
    if (w.size() != f.nvars() || !w.is_valid())
        throw std::invalid_argument("apply_permutation: permutation does not act on the variables of f");
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        Monomial wm{};
        for (int i = 1; i <= w.size(); ++i)
            wm[w(i) - 1] = m[i - 1];
        r.add_term(wm, c);
    }
    return r;
}

SparsePoly swap_variables(const SparsePoly& f, int a, int b)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        Monomial s = m;
        std::swap(s[a], s[b]);
        r.add_term(s, c);
    }
    return r;
}

const std::array<std::array<Rational, 4>, 4>& coord_vectors()
{
    static const std::array<std::array<Rational, 4>, 4> v = [] {
        const Rational h(1, 2);
        return std::array<std::array<Rational, 4>, 4>{{
            {h, h, h, h},
            {h, h, -h, -h},
            {h, -h, h, -h},
            {h, -h, -h, h},
        }};
    }();
    return v;
}

namespace {

// f(x) with variable k replaced by forms[k]; all forms share the result frame.
SparsePoly linear_substitute(const SparsePoly& f, const std::vector<SparsePoly>& forms)
{
    const int deg = std::max(f.degree(), 0);
    const SparsePoly& proto = forms.front();
    std::vector<std::vector<SparsePoly>> powers(forms.size());
    for (std::size_t k = 0; k < forms.size(); ++k) {
        powers[k].push_back(SparsePoly::constant(proto.nvars(), proto.frame(), 1));
        for (int e = 1; e <= deg; ++e)
            powers[k].push_back(powers[k].back() * forms[k]);
    }
    SparsePoly r(proto.nvars(), proto.frame());
    for (const auto& [m, c] : f.terms()) {
        SparsePoly term = SparsePoly::constant(proto.nvars(), proto.frame(), c);
        for (std::size_t k = 0; k < forms.size(); ++k)
            if (m[k] > 0)
                term = term * powers[k][m[k]];
        r += term;
    }
    return r;
}

void require_x4(const SparsePoly& f, const char* op)
{
    if (f.frame() != Frame::X || f.nvars() != 4)
        throw std::invalid_argument(std::string(op) + ": expected frame x4, got " + frame_name(f.frame(), f.nvars()));
}

}  // namespace

SparsePoly sign_change(int i, const SparsePoly& f)
{
    auto negate_var = [&f](int var) {
        SparsePoly r(f.nvars(), f.frame());
        for (const auto& [m, c] : f.terms())
            r.add_term(m, m[var] % 2 ? Rational(-c) : c);
        return r;
    };
    switch (f.frame()) {
    case Frame::Y3:
        if (i >= 1 && i <= 3)
            return negate_var(i - 1);
        break;
    case Frame::Y4:
        if (i >= 0 && i <= 3)
            return negate_var(i);
        break;
    case Frame::Y0:
        if (i == 0)
            return negate_var(0);
        break;
    case Frame::X:
        if (i == 0 && f.nvars() == 4) {
            // x_j -> x_j - (x_1 + ... + x_4) / 2
            std::vector<SparsePoly> forms;
            for (int j = 0; j < 4; ++j) {
                SparsePoly form = SparsePoly::variable(4, Frame::X, j);
                for (int k = 0; k < 4; ++k) {
                    Monomial e{};
                    e[k] = 1;
                    form.add_term(e, Rational(-1, 2));
                }
                forms.push_back(std::move(form));
            }
            return linear_substitute(f, forms);
        }
        break;
    }
    throw std::invalid_argument("sign_change: sigma_" + std::to_string(i) + " does not act on frame "
                                + frame_name(f.frame(), f.nvars()));
}

SparsePoly to_y(const SparsePoly& f)
{
    require_x4(f, "to_y");
    // x = sum_i y_i v_i
    const auto& v = coord_vectors();
    std::vector<SparsePoly> forms;
    for (int j = 0; j < 4; ++j) {
        SparsePoly form(4, Frame::Y4);
        for (int i = 0; i < 4; ++i)
            form += SparsePoly::variable(4, Frame::Y4, i) * v[i][j];
        forms.push_back(std::move(form));
    }
    return linear_substitute(f, forms);
}

SparsePoly to_x(const SparsePoly& f)
{
    if (f.frame() != Frame::Y4)
        throw std::invalid_argument("to_x: expected frame y4, got " + frame_name(f.frame(), f.nvars()));
    const auto& v = coord_vectors();
    std::vector<SparsePoly> forms;
    for (int i = 0; i < 4; ++i) {
        SparsePoly form(4, Frame::X);
        for (int j = 0; j < 4; ++j)
            form += SparsePoly::variable(4, Frame::X, j) * v[i][j];
        forms.push_back(std::move(form));
    }
    return linear_substitute(f, forms);
}

SparsePoly substitute_squares(const SparsePoly& f)
{
    if (f.nvars() != 3)
        throw std::invalid_argument("substitute_squares: expected 3 variables");
    SparsePoly r(3, Frame::Y3);
    for (const auto& [m, c] : f.terms()) {
        Monomial sq{};
        for (int k = 0; k < 3; ++k)
            sq[k] = static_cast<std::uint8_t>(2 * m[k]);
        r.add_term(sq, c);
    }
    return r;
}

SparsePoly embed_y3(const SparsePoly& f)
{
    if (f.frame() != Frame::Y3)
        throw std::invalid_argument("embed_y3: expected frame y3");
    SparsePoly r(4, Frame::Y4);
    for (const auto& [m, c] : f.terms())
        r.add_term(Monomial{0, m[0], m[1], m[2]}, c);
    return r;
}

SparsePoly embed_y0(const SparsePoly& f)
{
    if (f.frame() != Frame::Y0)
        throw std::invalid_argument("embed_y0: expected frame y0");
    SparsePoly r(4, Frame::Y4);
    for (const auto& [m, c] : f.terms())
        r.add_term(Monomial{m[0]}, c);
    return r;
}

SparsePoly multiply_monomial(const SparsePoly& f, const Monomial& mono)
{
    SparsePoly r(f.nvars(), f.frame());
    for (const auto& [m, c] : f.terms()) {
        Monomial s;
        for (int k = 0; k < kMaxVars; ++k)
            s[k] = static_cast<std::uint8_t>(m[k] + mono[k]);
        r.add_term(s, c);
    }
    return r;
}

nlohmann::json to_json(const SparsePoly& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"exp", to_composition(m, f.nvars())}, {"coef", to_string(c)}});
    return {{"nvars", f.nvars()}, {"frame", frame_name(f.frame(), f.nvars())}, {"terms", terms}};
}

SparsePoly poly_from_json(const nlohmann::json& j)
{
    try {
        const int nvars = j.at("nvars").get<int>();
        int frame_vars = 0;
        const Frame frame = parse_frame(j.at("frame").get<std::string>(), frame_vars);
        if (frame_vars != nvars)
            throw std::invalid_argument("frame and nvars disagree");
        SparsePoly p(nvars, frame);
        for (const auto& t : j.at("terms")) {
            Composition e = t.at("exp").get<Composition>();
            if (static_cast<int>(e.size()) != nvars)
                throw std::invalid_argument("exponent length differs from nvars");
            p.add_term(to_monomial(e), parse_rational(t.at("coef").get<std::string>()));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::string to_string(const SparsePoly& f)
{
    if (f.is_zero())
        return "0";
    auto var_name = [&f](int k) {
        switch (f.frame()) {
        case Frame::X:
            return "x" + std::to_string(k + 1);
        case Frame::Y4:
            return "y" + std::to_string(k);
        case Frame::Y3:
            return "y" + std::to_string(k + 1);
        case Frame::Y0:
            return std::string("y0");
        }
        return std::string("?");
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational mag = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = total_degree(m) > 0 && mag == 1;
        if (!unit)
            os << to_string(mag);
        bool need_star = !unit;
        for (int k = 0; k < f.nvars(); ++k) {
            if (m[k] == 0)
                continue;
            os << (need_star ? "*" : "") << var_name(k);
            if (m[k] > 1)
                os << "^" << int(m[k]);
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

}  // namespace jack4
