#include "defcoh/algebroid.hpp"

#include "defcoh/defcomplex.hpp"

#include <sstream>
#include <stdexcept>

namespace defcoh {

Algebroid::Algebroid(BasePtr base, std::vector<std::string> frame_names,
                     std::vector<int> frame_weights, std::vector<std::vector<Section>> structure,
                     std::vector<PolyDerivation> anchor)
    : base_(std::move(base)),
      frame_names_(std::move(frame_names)),
      frame_weights_(std::move(frame_weights)),
      structure_(std::move(structure)),
      anchor_(std::move(anchor)) {
    const std::size_t r = frame_names_.size();
    if (frame_weights_.size() != r) throw std::invalid_argument("Algebroid: weights per frame");
    if (anchor_.size() != r) throw std::invalid_argument("Algebroid: anchor per frame");
    if (structure_.size() != r) throw std::invalid_argument("Algebroid: structure shape");
    for (std::size_t i = 0; i < r; ++i) {
        if (structure_[i].size() != r) throw std::invalid_argument("Algebroid: structure shape");
        for (std::size_t j = i + 1; j < r; ++j)
            if (structure_[i][j].size() != r)
                throw std::invalid_argument("Algebroid: structure value must have rank entries");
    }
}

Section Algebroid::zero_section() const { return Section(rank(), GradedPoly(base_)); }

Section Algebroid::frame_section(std::size_t i) const {
    Section s = zero_section();
    s[i] = GradedPoly::constant(base_, 1);
    return s;
}

Section Algebroid::bracket_frames(std::size_t i, std::size_t j) const {
    if (i == j) return zero_section();
    if (i < j) return structure_[i][j];
    return section_scale(structure_[j][i], Rational(-1));
}

Section Algebroid::bracket(const Section& s, const Section& t) const {
    // [sum f_i e_i, sum g_j e_j] = sum_{i,j} f_i g_j [e_i,e_j]
    //   + sum_j rho(s)(g_j) e_j - sum_i rho(t)(f_i) e_i
    Section out = zero_section();
    for (std::size_t i = 0; i < rank(); ++i) {
        if (s[i].is_zero()) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (i == j || t[j].is_zero()) continue;
            const Section br = bracket_frames(i, j);
            const GradedPoly fg = s[i] * t[j];
            for (std::size_t k = 0; k < rank(); ++k) out[k] += br[k] * fg;
        }
    }
    const PolyDerivation rs = anchor_of(s);
    const PolyDerivation rt = anchor_of(t);
    for (std::size_t j = 0; j < rank(); ++j) {
        out[j] += rs.apply(t[j]);
        out[j] += -rt.apply(s[j]);
    }
    return out;
}

PolyDerivation Algebroid::anchor_of(const Section& s) const {
    PolyDerivation out(base_);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (s[i].is_zero()) continue;
        out += anchor_[i].scaled_poly(s[i]);
    }
    return out;
}

Section Algebroid::section_add(const Section& s, const Section& t) const {
    Section out = s;
    for (std::size_t i = 0; i < rank(); ++i) out[i] += t[i];
    return out;
}

Section Algebroid::section_sub(const Section& s, const Section& t) const {
    Section out = s;
    for (std::size_t i = 0; i < rank(); ++i) out[i] += -t[i];
    return out;
}

Section Algebroid::section_scale(const Section& s, const Rational& c) const {
    Section out = s;
    for (auto& f : out) f = f.scaled(c);
    return out;
}

Section Algebroid::section_scale_poly(const Section& s, const GradedPoly& f) const {
    Section out = s;
    for (auto& g : out) g = g * f;
    return out;
}

bool Algebroid::section_is_zero(const Section& s) const {
    for (const auto& f : s)
        if (!f.is_zero()) return false;
    return true;
}

bool Algebroid::section_homogeneous_of(const Section& s, int w) const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (!s[i].is_homogeneous_of(w - frame_weights_[i])) return false;
    return true;
}

std::optional<int> Algebroid::section_weight(const Section& s) const {
    std::optional<int> w;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (s[i].is_zero()) continue;
        auto pw = s[i].weight();
        if (!pw) return std::nullopt;
        const int sw = *pw + frame_weights_[i];
        if (!w)
            w = sw;
        else if (*w != sw)
            return std::nullopt;
    }
    return w;
}

Representation::ESection Representation::zero() const {
    return ESection(rank(), GradedPoly(owner->base()));
}

Representation::ESection Representation::frame(std::size_t j) const {
    ESection s = zero();
    s[j] = GradedPoly::constant(owner->base(), 1);
    return s;
}

Representation::ESection Representation::nabla_frame(std::size_t i, const ESection& s) const {
    // nabla_{e_i}(sum f_j eps_j) = sum_j rho(e_i)(f_j) eps_j + f_j nabla_{e_i}(eps_j)
    ESection out = zero();
    const PolyDerivation& rho_i = owner->anchor()[i];
    for (std::size_t j = 0; j < rank(); ++j) {
        if (s[j].is_zero()) continue;
        out[j] += rho_i.apply(s[j]);
        for (std::size_t k = 0; k < rank(); ++k) out[k] += gamma[i][k][j] * s[j];
    }
    return out;
}

Representation::ESection Representation::nabla(const Section& alpha, const ESection& s) const {
    // nabla_{f alpha} = f nabla_alpha, so expand over the frame of A.
    ESection out = zero();
    for (std::size_t i = 0; i < owner->rank(); ++i) {
        if (alpha[i].is_zero()) continue;
        ESection term = nabla_frame(i, s);
        for (std::size_t k = 0; k < rank(); ++k) out[k] += term[k] * alpha[i];
    }
    return out;
}

Representation::ESection Representation::add(const ESection& a, const ESection& b) const {
    ESection out = a;
    for (std::size_t k = 0; k < rank(); ++k) out[k] += b[k];
    return out;
}

Representation::ESection Representation::sub(const ESection& a, const ESection& b) const {
    ESection out = a;
    for (std::size_t k = 0; k < rank(); ++k) out[k] += -b[k];
    return out;
}

Representation::ESection Representation::scale_poly(const ESection& a, const GradedPoly& f) const {
    ESection out = a;
    for (auto& g : out) g = g * f;
    return out;
}

bool Representation::is_zero(const ESection& a) const {
    for (const auto& f : a)
        if (!f.is_zero()) return false;
    return true;
}

Representation Representation::trivial(AlgebroidPtr owner) {
    Representation e;
    e.frame_names = {"1"};
    e.frame_weights = {0};
    e.gamma = {std::vector<std::vector<GradedPoly>>(
        1, std::vector<GradedPoly>(1, GradedPoly(owner->base())))};
    e.gamma.resize(owner->rank(),
                   std::vector<std::vector<GradedPoly>>(
                       1, std::vector<GradedPoly>(1, GradedPoly(owner->base()))));
    e.owner = std::move(owner);
    return e;
}

bool Representation::is_frame_flat() const {
    for (const auto& gi : gamma)
        for (const auto& row : gi)
            for (const auto& g : row)
                if (!g.is_zero()) return false;
    return true;
}

namespace {

std::string frame_pair_name(const Algebroid& a, std::size_t i, std::size_t j) {
    return "(" + a.frame_names()[i] + ", " + a.frame_names()[j] + ")";
}

}  // namespace

ValidationReport validate_algebroid(const AlgebroidPtr& a) {
    ValidationReport rep;

    // Homogeneity: the structure cochain has total weight 0, i.e. c_ij^k is
    // homogeneous of weight w(e_i) + w(e_j) - w(e_k) and rho(e_i) is a
    // derivation of weight w(e_i).
    {
        CheckResult c{"homogeneity"};
        for (std::size_t i = 0; i < a->rank() && c.passed; ++i) {
            if (!a->anchor()[i].is_homogeneous_of(a->frame_weight(i))) {
                c.passed = false;
                c.witness = "anchor of " + a->frame_names()[i] + " is not homogeneous of weight " +
                            std::to_string(a->frame_weight(i));
                break;
            }
            for (std::size_t j = i + 1; j < a->rank() && c.passed; ++j) {
                const Section br = a->bracket_frames(i, j);
                for (std::size_t k = 0; k < a->rank(); ++k) {
                    const int want = a->frame_weight(i) + a->frame_weight(j) - a->frame_weight(k);
                    if (!br[k].is_homogeneous_of(want)) {
                        c.passed = false;
                        c.witness = "c" + frame_pair_name(*a, i, j) + "^" + a->frame_names()[k] +
                                    " not homogeneous of weight " + std::to_string(want);
                        break;
                    }
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }

    // Jacobi: [m, m] = 0 in the deformation complex.
    {
        CheckResult c{"jacobi"};
        const DefCochain m = DefCochain::structure_cochain(a);
        const DefCochain mm = gerstenhaber_bracket(m, m);
        if (!mm.is_zero()) {
            c.passed = false;
            auto witness = mm.first_nonzero_entry();
            c.witness = witness;
        }
        rep.checks.push_back(std::move(c));
    }

    // Anchor morphism: rho([e_i, e_j]) = [rho(e_i), rho(e_j)].
    {
        CheckResult c{"anchor_morphism"};
        for (std::size_t i = 0; i < a->rank() && c.passed; ++i)
            for (std::size_t j = i + 1; j < a->rank(); ++j) {
                const PolyDerivation lhs = a->anchor_of(a->bracket_frames(i, j));
                const PolyDerivation rhs = derivation_bracket(a->anchor()[i], a->anchor()[j]);
                if (!(lhs == rhs)) {
                    c.passed = false;
                    c.witness = "anchor morphism fails on " + frame_pair_name(*a, i, j);
                    break;
                }
            }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

ValidationReport validate_representation(const Representation& e) {
    ValidationReport rep;
    const Algebroid& a = *e.owner;

    {
        CheckResult c{"connection_homogeneity"};
        for (std::size_t i = 0; i < a.rank() && c.passed; ++i)
            for (std::size_t k = 0; k < e.rank() && c.passed; ++k)
                for (std::size_t j = 0; j < e.rank(); ++j) {
                    const int want = a.frame_weight(i) + e.frame_weights[j] - e.frame_weights[k];
                    if (!e.gamma[i][k][j].is_homogeneous_of(want)) {
                        c.passed = false;
                        c.witness = "Gamma_" + a.frame_names()[i] + "[" + e.frame_names[k] + "][" +
                                    e.frame_names[j] + "] not homogeneous of weight " +
                                    std::to_string(want);
                        break;
                    }
                }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"flatness"};
        for (std::size_t i = 0; i < a.rank() && c.passed; ++i)
            for (std::size_t j = i + 1; j < a.rank() && c.passed; ++j)
                for (std::size_t l = 0; l < e.rank(); ++l) {
                    const auto lhs = e.nabla(a.bracket_frames(i, j), e.frame(l));
                    const auto rhs = e.sub(e.nabla_frame(i, e.nabla_frame(j, e.frame(l))),
                                           e.nabla_frame(j, e.nabla_frame(i, e.frame(l))));
                    if (!e.is_zero(e.sub(lhs, rhs))) {
                        c.passed = false;
                        c.witness = "flatness fails on " + frame_pair_name(a, i, j) + " applied to " +
                                    e.frame_names[l];
                        break;
                    }
                }
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

AlgebroidPtr build_lie_algebra(const std::vector<std::vector<std::vector<Rational>>>& constants,
                               std::vector<std::string> frame_names) {
    const std::size_t r = constants.size();
    BasePtr base = make_base({}, {});
    if (frame_names.empty())
        for (std::size_t i = 0; i < r; ++i) frame_names.push_back("e" + std::to_string(i + 1));
    if (frame_names.size() != r) throw std::invalid_argument("build_lie_algebra: frame name count");

    for (std::size_t i = 0; i < r; ++i) {
        if (constants[i].size() != r) throw std::invalid_argument("build_lie_algebra: shape");
        for (std::size_t j = 0; j < r; ++j) {
            if (constants[i][j].size() != r) throw std::invalid_argument("build_lie_algebra: shape");
            for (std::size_t k = 0; k < r; ++k)
                if (constants[i][j][k] != -constants[j][i][k])
                    throw std::invalid_argument(
                        "build_lie_algebra: constants not antisymmetric in (i, j)");
        }
    }

    std::vector<std::vector<Section>> structure(r, std::vector<Section>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            Section s;
            for (std::size_t k = 0; k < r; ++k)
                s.push_back(GradedPoly::constant(base, constants[i][j][k]));
            structure[i][j] = std::move(s);
        }

    std::vector<PolyDerivation> anchor(r, PolyDerivation(base));
    return std::make_shared<const Algebroid>(base, std::move(frame_names), std::vector<int>(r, 0),
                                             std::move(structure), std::move(anchor));
}

AlgebroidPtr build_tangent_model(const BasePtr& base) {
    const std::size_t n = base->nvars();
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("e_" + base->vars[a]);
        weights.push_back(-base->weights[a]);
    }
    std::vector<std::vector<Section>> structure(n, std::vector<Section>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) structure[i][j] = Section(n, GradedPoly(base));
    std::vector<PolyDerivation> anchor;
    for (std::size_t a = 0; a < n; ++a) anchor.push_back(PolyDerivation::coordinate(base, a));
    return std::make_shared<const Algebroid>(base, std::move(names), std::move(weights),
                                             std::move(structure), std::move(anchor));
}

ActionAlgebroid build_action_algebroid(
    const std::vector<std::vector<std::vector<Rational>>>& g_constants,
    const std::vector<PolyDerivation>& action, std::vector<std::string> frame_names) {
    const std::size_t r = g_constants.size();
    if (action.size() != r)
        throw std::invalid_argument("build_action_algebroid: one action field per generator");
    const BasePtr base = action.empty() ? nullptr : action.front().base;
    if (!base) throw std::invalid_argument("build_action_algebroid: empty Lie algebra");

    for (std::size_t i = 0; i < r; ++i)
        if (!action[i].is_homogeneous_of(0))
            throw std::invalid_argument("build_action_algebroid: action field " +
                                        std::to_string(i + 1) +
                                        " is not homogeneous of weight 0");

    // Morphism check on generators: [rho(v_i), rho(v_j)] = rho([v_i, v_j]).
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            PolyDerivation lhs = derivation_bracket(action[i], action[j]);
            PolyDerivation rhs(base);
            for (std::size_t k = 0; k < r; ++k)
                rhs += action[k].scaled(g_constants[i][j][k]);
            if (!(lhs == rhs))
                throw std::invalid_argument(
                    "build_action_algebroid: action is not a Lie algebra morphism on generators (" +
                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }

    if (frame_names.empty())
        for (std::size_t i = 0; i < r; ++i) frame_names.push_back("v" + std::to_string(i + 1));

    std::vector<std::vector<Section>> structure(r, std::vector<Section>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            Section s;
            for (std::size_t k = 0; k < r; ++k)
                s.push_back(GradedPoly::constant(base, g_constants[i][j][k]));
            structure[i][j] = std::move(s);
        }

    ActionAlgebroid out;
    out.algebroid = std::make_shared<const Algebroid>(base, frame_names, std::vector<int>(r, 0),
                                                      std::move(structure), action);

    // g_M: fiber g, nabla_{v_i}(w_j) = [v_i, w_j] = sum_k c_ij^k w_k.
    {
        Representation g;
        g.owner = out.algebroid;
        g.frame_names = frame_names;
        g.frame_weights.assign(r, 0);
        g.gamma.assign(r, std::vector<std::vector<GradedPoly>>(
                              r, std::vector<GradedPoly>(r, GradedPoly(base))));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < r; ++k)
                    g.gamma[i][k][j] = GradedPoly::constant(
                        base, i < j   ? g_constants[i][j][k]
                              : i > j ? -g_constants[j][i][k]
                                      : Rational(0));
        out.g_rep = std::move(g);
    }

    // TM: Der(R) with frame d/dx_a, nabla_{v_i}(X) = [rho(v_i), X]; on the
    // coordinate frame this is [rho(v_i), d/dx_a] = -sum_b d_a(rho_i^b) d/dx_b.
    {
        const std::size_t n = base->nvars();
        Representation tm;
        tm.owner = out.algebroid;
        for (std::size_t a = 0; a < n; ++a) {
            tm.frame_names.push_back("d/d" + base->vars[a]);
            tm.frame_weights.push_back(-base->weights[a]);
        }
        tm.gamma.assign(r, std::vector<std::vector<GradedPoly>>(
                               n, std::vector<GradedPoly>(n, GradedPoly(base))));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    tm.gamma[i][b][a] = -action[i].coeff[b].derivative(a);
        out.tm_rep = std::move(tm);
    }

    return out;
}

}  // namespace defcoh
