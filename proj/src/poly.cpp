#include "defcoh/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace defcoh {

BaseSpec::BaseSpec(std::vector<std::string> names, std::vector<int> ws)
    : vars(std::move(names)), weights(std::move(ws)) {
    if (vars.size() != weights.size())
        throw std::invalid_argument("BaseSpec: one weight per variable required");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw std::invalid_argument("BaseSpec: duplicate variable names");
    for (int w : weights)
        if (w < 1) throw std::invalid_argument("BaseSpec: variable weights must be >= 1");
}

BasePtr make_base(std::vector<std::string> names, std::vector<int> weights) {
    return std::make_shared<const BaseSpec>(std::move(names), std::move(weights));
}

int exponent_weight(const BaseSpec& base, const Exponent& e) {
    int w = 0;
    for (std::size_t a = 0; a < e.size(); ++a) w += e[a] * base.weights[a];
    return w;
}

namespace {

void enumerate_monomials(const BaseSpec& base, std::size_t a, int remaining, Exponent& current,
                         std::vector<Exponent>& out) {
    if (a == base.nvars()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    const int w = base.weights[a];
    for (int e = remaining / w; e >= 0; --e) {
        current[a] = e;
        enumerate_monomials(base, a + 1, remaining - e * w, current, out);
    }
    current[a] = 0;
}

}  // namespace

std::vector<Exponent> monomial_basis(const BaseSpec& base, int w) {
    std::vector<Exponent> out;
    if (w < 0) return out;
    Exponent current(base.nvars(), 0);
    enumerate_monomials(base, 0, w, current, out);
    return out;
}

GradedPoly GradedPoly::constant(BasePtr base, const Rational& c) {
    GradedPoly p(std::move(base));
    if (c != 0) p.terms_[Exponent(p.base_->nvars(), 0)] = c;
    return p;
}

GradedPoly GradedPoly::variable(BasePtr base, std::size_t a) {
    GradedPoly p(std::move(base));
    Exponent e(p.base_->nvars(), 0);
    e.at(a) = 1;
    p.terms_[e] = 1;
    return p;
}

GradedPoly GradedPoly::monomial(BasePtr base, const Exponent& e, const Rational& c) {
    GradedPoly p(std::move(base));
    if (e.size() != p.base_->nvars()) throw std::invalid_argument("monomial arity mismatch");
    if (c != 0) p.terms_[e] = c;
    return p;
}

void GradedPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void require_same_base(const GradedPoly& a, const GradedPoly& b) {
    if (!a.base() || !b.base() || !(*a.base() == *b.base()))
        throw std::invalid_argument("polynomial base mismatch");
}

GradedPoly GradedPoly::operator+(const GradedPoly& other) const {
    require_same_base(*this, other);
    GradedPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
    require_same_base(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

GradedPoly GradedPoly::operator-(const GradedPoly& other) const {
    require_same_base(*this, other);
    GradedPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

GradedPoly GradedPoly::operator-() const { return scaled(Rational(-1)); }

GradedPoly GradedPoly::operator*(const GradedPoly& other) const {
    require_same_base(*this, other);
    GradedPoly out(base_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Exponent e(e1.size());
            for (std::size_t a = 0; a < e.size(); ++a) e[a] = e1[a] + e2[a];
            out.add_term(e, c1 * c2);
        }
    return out;
}

GradedPoly GradedPoly::scaled(const Rational& c) const {
    GradedPoly out(base_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
    return out;
}

bool GradedPoly::operator==(const GradedPoly& other) const {
    require_same_base(*this, other);
    return terms_ == other.terms_;
}

Rational GradedPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

GradedPoly GradedPoly::derivative(std::size_t a) const {
    GradedPoly out(base_);
    for (const auto& [e, c] : terms_) {
        if (e[a] == 0) continue;
        Exponent de = e;
        de[a] -= 1;
        out.add_term(de, c * e[a]);
    }
    return out;
}

std::optional<int> GradedPoly::weight() const {
    std::optional<int> w;
    for (const auto& [e, c] : terms_) {
        const int tw = exponent_weight(*base_, e);
        if (!w)
            w = tw;
        else if (*w != tw)
            return std::nullopt;
    }
    return w;
}

bool GradedPoly::is_homogeneous_of(int w) const {
    for (const auto& [e, c] : terms_)
        if (exponent_weight(*base_, e) != w) return false;
    return true;
}

Rational GradedPoly::constant_term() const { return coefficient(Exponent(base_->nvars(), 0)); }

Rational GradedPoly::specialize_rational(const std::vector<Rational>& point) const {
    if (point.size() != base_->nvars()) throw std::invalid_argument("specialize arity mismatch");
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (int i = 0; i < e[a]; ++i) term *= point[a];
        out += term;
    }
    return out;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Print largest exponent first so the output round-trips through the
    // parser and is stable across runs.
    std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = false;
        for (int ex : e)
            if (ex > 0) has_var = true;
        if (mag != 1 || !has_var) {
            os << rational_to_string(mag);
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (e[a] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << base_->vars[a];
            if (e[a] > 1) os << "^" << e[a];
        }
    }
    return os.str();
}

PolyDerivation::PolyDerivation(BasePtr b) : base(std::move(b)) {
    coeff.assign(base->nvars(), GradedPoly(base));
}

PolyDerivation PolyDerivation::coordinate(BasePtr b, std::size_t a) {
    PolyDerivation d(std::move(b));
    d.coeff[a] = GradedPoly::constant(d.base, 1);
    return d;
}

bool PolyDerivation::is_zero() const {
    for (const auto& p : coeff)
        if (!p.is_zero()) return false;
    return true;
}

GradedPoly PolyDerivation::apply(const GradedPoly& f) const {
    GradedPoly out(base);
    for (std::size_t a = 0; a < coeff.size(); ++a) {
        if (coeff[a].is_zero()) continue;
        out += coeff[a] * f.derivative(a);
    }
    return out;
}

PolyDerivation PolyDerivation::operator+(const PolyDerivation& other) const {
    PolyDerivation out(base);
    for (std::size_t a = 0; a < coeff.size(); ++a) out.coeff[a] = coeff[a] + other.coeff[a];
    return out;
}

PolyDerivation PolyDerivation::operator-(const PolyDerivation& other) const {
    PolyDerivation out(base);
    for (std::size_t a = 0; a < coeff.size(); ++a) out.coeff[a] = coeff[a] - other.coeff[a];
    return out;
}

PolyDerivation PolyDerivation::scaled(const Rational& c) const {
    PolyDerivation out(base);
    for (std::size_t a = 0; a < coeff.size(); ++a) out.coeff[a] = coeff[a].scaled(c);
    return out;
}

PolyDerivation PolyDerivation::scaled_poly(const GradedPoly& f) const {
    PolyDerivation out(base);
    for (std::size_t a = 0; a < coeff.size(); ++a) out.coeff[a] = coeff[a] * f;
    return out;
}

PolyDerivation& PolyDerivation::operator+=(const PolyDerivation& other) {
    for (std::size_t a = 0; a < coeff.size(); ++a) coeff[a] += other.coeff[a];
    return *this;
}

bool PolyDerivation::operator==(const PolyDerivation& other) const {
    return coeff == other.coeff;
}

std::optional<int> PolyDerivation::weight() const {
    // X = sum p_a d/dx_a has weight u iff each p_a is homogeneous of weight
    // u + w(x_a).
    std::optional<int> u;
    for (std::size_t a = 0; a < coeff.size(); ++a) {
        if (coeff[a].is_zero()) continue;
        auto w = coeff[a].weight();
        if (!w) return std::nullopt;
        const int ua = *w - base->weights[a];
        if (!u)
            u = ua;
        else if (*u != ua)
            return std::nullopt;
    }
    return u;
}

bool PolyDerivation::is_homogeneous_of(int w) const {
    for (std::size_t a = 0; a < coeff.size(); ++a)
        if (!coeff[a].is_homogeneous_of(w + base->weights[a])) return false;
    return true;
}

std::string PolyDerivation::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t a = 0; a < coeff.size(); ++a) {
        if (coeff[a].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff[a].to_string() << ")*d/d" << base->vars[a];
    }
    if (first) os << "0";
    return os.str();
}

PolyDerivation derivation_bracket(const PolyDerivation& x, const PolyDerivation& y) {
    PolyDerivation out(x.base);
    for (std::size_t a = 0; a < out.coeff.size(); ++a)
        out.coeff[a] = x.apply(y.coeff[a]) - y.apply(x.coeff[a]);
    return out;
}

}  // namespace defcoh
