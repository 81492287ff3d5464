#pragma once

#include "defcoh/matrix.hpp"

#include <string>
#include <vector>

namespace defcoh {

// A bounded cochain complex of finite-dimensional Q-vector spaces.
// dims[i] is the dimension in degree lo + i; maps[i] is d: (lo+i) -> (lo+i+1)
// as a dims[i+1] x dims[i] matrix. d o d = 0 is enforced at construction.
class FiniteComplex {
public:
    FiniteComplex() = default;
    FiniteComplex(int lo, std::vector<std::size_t> dims, std::vector<RatMatrix> maps);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int k) const;
    // Differential out of degree k; a zero matrix of the right shape when k
    // is at or beyond the top of the support interval.
    RatMatrix d(int k) const;

private:
    int lo_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<RatMatrix> maps_;
};

// Per-degree dimensions of ker d_k / im d_{k-1}, indexed lo..hi.
std::vector<std::size_t> betti(const FiniteComplex& c);

// Canonical bases attached to one degree of a complex: cocycles, boundaries,
// and representatives completing the boundaries to a basis of the cocycles.
// Everything is derived from canonical echelon forms, so repeated runs give
// identical bases and identical class coordinates.
struct CohomologyBasis {
    std::vector<RatVec> cocycles;
    std::vector<RatVec> boundaries;
    std::vector<RatVec> reps;

    std::size_t dim() const { return reps.size(); }
    // Coordinates of the cocycle z in the reps basis, modulo boundaries.
    RatVec class_coordinates(const RatVec& z) const;
};

CohomologyBasis cohomology_basis(const FiniteComplex& c, int k);

// A degree-wise linear map commuting with the differentials (verified).
struct ComplexMap {
    FiniteComplex src;
    FiniteComplex dst;
    std::vector<RatMatrix> mats;  // per degree of the common support

    static ComplexMap checked(FiniteComplex src, FiniteComplex dst, std::vector<RatMatrix> mats);
    const RatMatrix& mat(int k) const;
};

// Short exact sequence of complexes 0 -> sub -i-> mid -p-> quot -> 0.
// Construction verifies: chain maps, p o i = 0, i injective, p surjective,
// and rank i + rank p = dim mid in every degree.
struct SesOfComplexes {
    ComplexMap incl;
    ComplexMap proj;

    static SesOfComplexes checked(ComplexMap incl, ComplexMap proj);
    const FiniteComplex& sub() const { return incl.src; }
    const FiniteComplex& mid() const { return incl.dst; }
    const FiniteComplex& quot() const { return proj.dst; }
};

// The long exact sequence ... -> H^k(sub) -> H^k(mid) -> H^k(quot)
//   -∂-> H^{k+1}(sub) -> ... with the connecting map computed by the usual
// zig-zag (lift through p, apply d, pull back through i).
struct LesReport {
    int lo = 0;
    std::vector<std::size_t> h_sub, h_mid, h_quot;  // cohomology dims per degree
    std::vector<RatMatrix> induced_i;               // H^k(sub) -> H^k(mid)
    std::vector<RatMatrix> induced_p;               // H^k(mid) -> H^k(quot)
    std::vector<RatMatrix> connecting;              // H^k(quot) -> H^{k+1}(sub)
    bool exact = false;
    std::string failure;  // empty when exact
};

LesReport les_from_ses(const SesOfComplexes& s);

// Exactness certificate for a generic sequence of composable maps
// V_0 -> V_1 -> ... (rank(incoming) = dim ker(outgoing) at every inner node,
// and each composite is zero). Used for the assembled long exact sequences.
struct NodeCheck {
    std::string label;
    bool composite_zero = false;
    bool ranks_match = false;
};
bool exact_at_nodes(const std::vector<RatMatrix>& maps, const std::vector<std::size_t>& dims,
                    std::vector<NodeCheck>* details);

}  // namespace defcoh
