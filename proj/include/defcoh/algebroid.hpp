#pragma once

#include "defcoh/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace defcoh {

// A section of the rank-r free module A, expressed in the frame.
using Section = std::vector<GradedPoly>;

class MultiVectorField;  // poisson.hpp

// Graded Lie-Rinehart algebroid on a free module with frame: structure
// functions c_ij^k (i < j), anchor rho(e_i) in Der(R), and integer frame
// weights. The structure cochain m must be homogeneous of total weight 0,
// which is what makes every weight slice of the deformation complex finite
// dimensional; validate_algebroid checks this together with Jacobi and the
// anchor morphism identity.
class Algebroid {
public:
    Algebroid(BasePtr base, std::vector<std::string> frame_names, std::vector<int> frame_weights,
              std::vector<std::vector<Section>> structure, std::vector<PolyDerivation> anchor);

    const BasePtr& base() const { return base_; }
    std::size_t rank() const { return frame_names_.size(); }
    const std::vector<std::string>& frame_names() const { return frame_names_; }
    const std::vector<int>& frame_weights() const { return frame_weights_; }
    int frame_weight(std::size_t i) const { return frame_weights_[i]; }
    const std::vector<PolyDerivation>& anchor() const { return anchor_; }

    Section zero_section() const;
    Section frame_section(std::size_t i) const;

    // [e_i, e_j] for any i, j (antisymmetry applied; zero on the diagonal).
    Section bracket_frames(std::size_t i, std::size_t j) const;

    // Full bracket of sections via the Leibniz rule. This is the direct
    // formula, independent of the deformation-complex evaluation path.
    Section bracket(const Section& s, const Section& t) const;

    // R-linear anchor applied to a section.
    PolyDerivation anchor_of(const Section& s) const;

    Section section_add(const Section& s, const Section& t) const;
    Section section_sub(const Section& s, const Section& t) const;
    Section section_scale(const Section& s, const Rational& c) const;
    Section section_scale_poly(const Section& s, const GradedPoly& f) const;
    bool section_is_zero(const Section& s) const;
    // Weight of a homogeneous section (components f_i of weight w - w(e_i)).
    bool section_homogeneous_of(const Section& s, int w) const;
    std::optional<int> section_weight(const Section& s) const;

private:
    BasePtr base_;
    std::vector<std::string> frame_names_;
    std::vector<int> frame_weights_;
    std::vector<std::vector<Section>> structure_;  // structure_[i][j] for i < j
    std::vector<PolyDerivation> anchor_;
};

using AlgebroidPtr = std::shared_ptr<const Algebroid>;

// A representation: free R-module E with frame and a flat A-connection given
// by connection coefficients, nabla_{e_i}(eps_j) = sum_k (gamma[i])_{kj} eps_k.
struct Representation {
    AlgebroidPtr owner;
    std::vector<std::string> frame_names;
    std::vector<int> frame_weights;
    std::vector<std::vector<std::vector<GradedPoly>>> gamma;  // gamma[i][k][j]

    std::size_t rank() const { return frame_names.size(); }

    // E-valued sections are vectors of length rank().
    using ESection = std::vector<GradedPoly>;

    ESection zero() const;
    ESection frame(std::size_t j) const;
    ESection nabla_frame(std::size_t i, const ESection& s) const;  // nabla_{e_i}
    ESection nabla(const Section& alpha, const ESection& s) const;
    ESection add(const ESection& a, const ESection& b) const;
    ESection sub(const ESection& a, const ESection& b) const;
    ESection scale_poly(const ESection& a, const GradedPoly& f) const;
    bool is_zero(const ESection& a) const;

    // The trivial line bundle: rank 1, weight 0, nabla_alpha = L_{rho(alpha)}.
    static Representation trivial(AlgebroidPtr owner);
    bool is_frame_flat() const;  // all connection coefficients zero
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // filled on failure
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Homogeneity (m of total weight 0), Jacobi ([m,m] = 0 through the
// Gerstenhaber bracket), and the anchor morphism identity, each reported
// with a witness tuple on failure.
ValidationReport validate_algebroid(const AlgebroidPtr& a);

// Flatness on all frame pairs applied to all E-frames, plus homogeneity of
// the connection coefficients.
ValidationReport validate_representation(const Representation& e);

// Lie algebra as an algebroid over the point: base has no variables, frame
// weights zero, anchor zero. constants[i][j][k] is the coefficient of e_k in
// [e_i, e_j]; antisymmetry in (i, j) is required.
AlgebroidPtr build_lie_algebra(const std::vector<std::vector<std::vector<Rational>>>& constants,
                               std::vector<std::string> frame_names = {});

// The tangent algebroid of the graded affine space: rank n, frame weight
// -w(x_a), anchor rho(e_a) = d/dx_a, zero structure functions.
AlgebroidPtr build_tangent_model(const BasePtr& base);

struct ActionAlgebroid {
    AlgebroidPtr algebroid;
    Representation g_rep;   // fiber g with nabla_v(w) = [v, w]
    Representation tm_rep;  // Der(R) with nabla_v(X) = [rho(v), X]
};

// Action algebroid g x M for an infinitesimal action of the Lie algebra g:
// the action fields must form a Lie algebra morphism and be homogeneous of
// weight 0 (frame weights are 0). Throws std::invalid_argument otherwise.
ActionAlgebroid build_action_algebroid(
    const std::vector<std::vector<std::vector<Rational>>>& g_constants,
    const std::vector<PolyDerivation>& action, std::vector<std::string> frame_names = {});

// Cotangent algebroid of a homogeneous Poisson bivector (implemented with
// the multivector calculus): anchor pi-sharp, bracket [dx_a, dx_b] = d(pi_ab).
AlgebroidPtr build_cotangent_algebroid(const MultiVectorField& pi);

}  // namespace defcoh
