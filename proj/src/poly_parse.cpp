#include "defcoh/poly.hpp"

#include <cctype>

namespace defcoh {

namespace {

// Polynomials with a distinguished polynomial parameter: coefficient of t^d
// at index d. Plain polynomials are the d = 0 case.
struct TPoly {
    std::vector<GradedPoly> c;

    static TPoly from(GradedPoly p) { return TPoly{{std::move(p)}}; }

    void trim(const BasePtr& base) {
        while (c.size() > 1 && c.back().is_zero()) c.pop_back();
        if (c.empty()) c.push_back(GradedPoly::zero(base));
    }
};

TPoly tp_add(const BasePtr& base, const TPoly& a, const TPoly& b, bool subtract) {
    TPoly out;
    const std::size_t n = std::max(a.c.size(), b.c.size());
    for (std::size_t d = 0; d < n; ++d) {
        GradedPoly x = d < a.c.size() ? a.c[d] : GradedPoly::zero(base);
        GradedPoly y = d < b.c.size() ? b.c[d] : GradedPoly::zero(base);
        out.c.push_back(subtract ? x - y : x + y);
    }
    out.trim(base);
    return out;
}

TPoly tp_mul(const BasePtr& base, const TPoly& a, const TPoly& b) {
    TPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, GradedPoly::zero(base));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim(base);
    return out;
}

class Parser {
public:
    Parser(const BasePtr& base, const std::string& text, const std::string& t_name)
        : base_(base), text_(text), t_name_(t_name) {}

    TPoly run() {
        TPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyParseError(ParseError{msg, pos_});
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    TPoly expression() {
        skip_ws();
        bool negate = accept('-');
        TPoly acc = term();
        if (negate) acc = tp_add(base_, TPoly::from(GradedPoly::zero(base_)), acc, true);
        while (true) {
            if (accept('+'))
                acc = tp_add(base_, acc, term(), false);
            else if (accept('-'))
                acc = tp_add(base_, acc, term(), true);
            else
                break;
        }
        return acc;
    }

    TPoly term() {
        TPoly acc = factor();
        while (accept('*')) acc = tp_mul(base_, acc, factor());
        return acc;
    }

    TPoly factor() {
        TPoly a = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected exponent after '^'");
            int e = 0;
            for (std::size_t i = start; i < pos_; ++i) {
                e = e * 10 + (text_[i] - '0');
                if (e > 256) fail("exponent too large");
            }
            TPoly out = TPoly::from(GradedPoly::constant(base_, 1));
            for (int i = 0; i < e; ++i) out = tp_mul(base_, out, a);
            return out;
        }
        return a;
    }

    TPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of polynomial");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    TPoly number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) fail("expected denominator after '/'");
            num += "/" + text_.substr(dstart, pos_ - dstart);
        }
        auto q = parse_rational(num);
        if (!q) fail("malformed rational '" + num + "'");
        return TPoly::from(GradedPoly::constant(base_, *q));
    }

    TPoly identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (!t_name_.empty() && name == t_name_) {
            TPoly out;
            out.c = {GradedPoly::zero(base_), GradedPoly::constant(base_, 1)};
            return out;
        }
        for (std::size_t a = 0; a < base_->nvars(); ++a)
            if (base_->vars[a] == name) return TPoly::from(GradedPoly::variable(base_, a));
        pos_ = start;
        fail("unknown variable '" + name + "'");
    }

    BasePtr base_;
    const std::string& text_;
    std::string t_name_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_poly_general(const BasePtr& base, const std::string& text,
                              const std::string& t_name) {
    Parser p(base, text, t_name);
    TPoly tp = p.run();
    return ParsedPoly{std::move(tp.c)};
}

GradedPoly parse_poly(const BasePtr& base, const std::string& text) {
    ParsedPoly p = parse_poly_general(base, text, "");
    return p.t_coeffs.front();
}

}  // namespace defcoh
