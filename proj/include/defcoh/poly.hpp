#pragma once

#include "defcoh/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace defcoh {

// The graded base ring is Q[x_1..x_n] with a positive integer weight per
// variable. Positivity is what keeps every weight slice finite-dimensional.
struct BaseSpec {
    std::vector<std::string> vars;
    std::vector<int> weights;

    BaseSpec() = default;
    BaseSpec(std::vector<std::string> names, std::vector<int> ws);

    std::size_t nvars() const { return vars.size(); }
    bool operator==(const BaseSpec& other) const {
        return vars == other.vars && weights == other.weights;
    }
};

using BasePtr = std::shared_ptr<const BaseSpec>;

BasePtr make_base(std::vector<std::string> names, std::vector<int> weights);

using Exponent = std::vector<int>;

int exponent_weight(const BaseSpec& base, const Exponent& e);

// All monomials of total weight w, in lexicographic order (x-major, so e.g.
// weight 2 over x,y of weight 1 lists x^2, x*y, y^2). Empty for w < 0.
std::vector<Exponent> monomial_basis(const BaseSpec& base, int w);

class GradedPoly {
public:
    GradedPoly() = default;
    explicit GradedPoly(BasePtr base) : base_(std::move(base)) {}

    static GradedPoly zero(BasePtr base) { return GradedPoly(std::move(base)); }
    static GradedPoly constant(BasePtr base, const Rational& c);
    static GradedPoly variable(BasePtr base, std::size_t a);
    static GradedPoly monomial(BasePtr base, const Exponent& e, const Rational& c);

    const BasePtr& base() const { return base_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GradedPoly operator+(const GradedPoly& other) const;
    GradedPoly operator-(const GradedPoly& other) const;
    GradedPoly operator-() const;
    GradedPoly operator*(const GradedPoly& other) const;
    GradedPoly scaled(const Rational& c) const;
    GradedPoly& operator+=(const GradedPoly& other);
    bool operator==(const GradedPoly& other) const;

    Rational coefficient(const Exponent& e) const;
    GradedPoly derivative(std::size_t a) const;  // d/dx_a

    // Weight of a homogeneous polynomial; nullopt if inhomogeneous or zero.
    std::optional<int> weight() const;
    bool is_homogeneous_of(int w) const;  // zero counts as homogeneous of any weight

    Rational constant_term() const;
    Rational specialize_rational(const std::vector<Rational>& point) const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rational& c);

    BasePtr base_;
    std::map<Exponent, Rational> terms_;
};

void require_same_base(const GradedPoly& a, const GradedPoly& b);

// A polynomial vector field sum_a p_a d/dx_a; the model of X(M) and of all
// anchor/symbol values. d/dx_a carries weight -w(x_a).
struct PolyDerivation {
    BasePtr base;
    std::vector<GradedPoly> coeff;  // one per variable

    PolyDerivation() = default;
    explicit PolyDerivation(BasePtr b);
    static PolyDerivation zero(BasePtr b) { return PolyDerivation(std::move(b)); }
    static PolyDerivation coordinate(BasePtr b, std::size_t a);  // d/dx_a

    bool is_zero() const;
    GradedPoly apply(const GradedPoly& f) const;
    PolyDerivation operator+(const PolyDerivation& other) const;
    PolyDerivation operator-(const PolyDerivation& other) const;
    PolyDerivation scaled(const Rational& c) const;
    PolyDerivation scaled_poly(const GradedPoly& f) const;  // f * X
    PolyDerivation& operator+=(const PolyDerivation& other);
    bool operator==(const PolyDerivation& other) const;

    std::optional<int> weight() const;
    bool is_homogeneous_of(int w) const;

    std::string to_string() const;
};

// [X, Y](f) = X(Y(f)) - Y(X(f)); computed componentwise.
PolyDerivation derivation_bracket(const PolyDerivation& x, const PolyDerivation& y);

// Parser for the fixed polynomial grammar: rational coefficients, operators
// + - * ^, explicit multiplication, e.g. "3/2*x^2*y - y". Exact.
struct ParseError {
    std::string message;
    std::size_t position = 0;  // byte offset into the input string
};

struct ParsedPoly {
    // coefficient of t^d at index d; plain polynomials have exactly one entry
    std::vector<GradedPoly> t_coeffs;
};

// Parses with an optional reserved parameter name ("t" for families); when
// t_name is empty the parameter is not admitted. Throws PolyParseError.
class PolyParseError : public std::exception {
public:
    explicit PolyParseError(ParseError e) : err_(std::move(e)) {}
    const ParseError& error() const { return err_; }
    const char* what() const noexcept override { return err_.message.c_str(); }

private:
    ParseError err_;
};

ParsedPoly parse_poly_general(const BasePtr& base, const std::string& text,
                              const std::string& t_name);
GradedPoly parse_poly(const BasePtr& base, const std::string& text);

}  // namespace defcoh
