#include "defcoh/complex.hpp"

#include <sstream>
#include <stdexcept>

namespace defcoh {

FiniteComplex::FiniteComplex(int lo, std::vector<std::size_t> dims, std::vector<RatMatrix> maps)
    : lo_(lo), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.empty()) throw std::invalid_argument("FiniteComplex: empty degree interval");
    if (maps_.size() + 1 != dims_.size())
        throw std::invalid_argument("FiniteComplex: need one map per adjacent degree pair");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        if (maps_[i].rows() != dims_[i + 1] || maps_[i].cols() != dims_[i])
            throw std::invalid_argument("FiniteComplex: map shape does not match dims");
    }
    for (std::size_t i = 0; i + 1 < maps_.size(); ++i) {
        if (!(maps_[i + 1] * maps_[i]).is_zero())
            throw std::invalid_argument("FiniteComplex: d o d != 0");
    }
}

std::size_t FiniteComplex::dim(int k) const {
    if (k < lo_ || k > hi()) return 0;
    return dims_[static_cast<std::size_t>(k - lo_)];
}

RatMatrix FiniteComplex::d(int k) const {
    if (k >= lo_ && k < hi()) return maps_[static_cast<std::size_t>(k - lo_)];
    return RatMatrix(dim(k + 1), dim(k));
}

std::vector<std::size_t> betti(const FiniteComplex& c) {
    std::vector<std::size_t> out;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        const std::size_t z = c.dim(k) - rank_of(c.d(k));
        const std::size_t b = rank_of(c.d(k - 1));
        if (b > z) throw std::logic_error("betti: negative dimension, complex invalid");
        out.push_back(z - b);
    }
    return out;
}

RatVec CohomologyBasis::class_coordinates(const RatVec& z) const {
    std::vector<RatVec> cols = boundaries;
    cols.insert(cols.end(), reps.begin(), reps.end());
    if (cols.empty()) {
        if (!is_zero_vec(z)) throw std::logic_error("class_coordinates: nonzero vector, zero cohomology");
        return {};
    }
    RatMatrix m = RatMatrix::from_columns(cols, z.size());
    auto sol = solve_or_none(m, z);
    if (!sol) throw std::logic_error("class_coordinates: vector is not a cocycle of this degree");
    return RatVec(sol->begin() + static_cast<std::ptrdiff_t>(boundaries.size()), sol->end());
}

CohomologyBasis cohomology_basis(const FiniteComplex& c, int k) {
    CohomologyBasis out;
    out.cocycles = rank_kernel(c.d(k)).kernel;

    const RatMatrix din = c.d(k - 1);
    Echelon e = echelon_form(din);
    for (std::size_t pc : e.pivot_cols) {
        RatVec col(din.rows());
        for (std::size_t i = 0; i < din.rows(); ++i) col[i] = din.at(i, pc);
        out.boundaries.push_back(std::move(col));
    }

    // Extend the boundary basis to a basis of the cocycles, greedily and in
    // the canonical cocycle order.
    std::vector<RatVec> span = out.boundaries;
    std::size_t current_rank = span.empty() ? 0 : rank_of(RatMatrix::from_columns(span, c.dim(k)));
    for (const auto& v : out.cocycles) {
        std::vector<RatVec> trial = span;
        trial.push_back(v);
        const std::size_t r = rank_of(RatMatrix::from_columns(trial, c.dim(k)));
        if (r > current_rank) {
            span = std::move(trial);
            current_rank = r;
            out.reps.push_back(v);
        }
    }
    return out;
}

ComplexMap ComplexMap::checked(FiniteComplex src, FiniteComplex dst, std::vector<RatMatrix> mats) {
    if (src.lo() != dst.lo() || src.hi() != dst.hi())
        throw std::invalid_argument("ComplexMap: complexes must share the degree interval");
    if (mats.size() != static_cast<std::size_t>(src.hi() - src.lo() + 1))
        throw std::invalid_argument("ComplexMap: one matrix per degree required");
    ComplexMap cm{std::move(src), std::move(dst), std::move(mats)};
    for (int k = cm.src.lo(); k <= cm.src.hi(); ++k) {
        const RatMatrix& f = cm.mat(k);
        if (f.rows() != cm.dst.dim(k) || f.cols() != cm.src.dim(k))
            throw std::invalid_argument("ComplexMap: matrix shape mismatch");
        if (k < cm.src.hi()) {
            if (!(cm.dst.d(k) * f == cm.mat(k + 1) * cm.src.d(k)))
                throw std::invalid_argument("ComplexMap: does not commute with differentials");
        }
    }
    return cm;
}

const RatMatrix& ComplexMap::mat(int k) const {
    return mats[static_cast<std::size_t>(k - src.lo())];
}

SesOfComplexes SesOfComplexes::checked(ComplexMap incl, ComplexMap proj) {
    SesOfComplexes s{std::move(incl), std::move(proj)};
    for (int k = s.mid().lo(); k <= s.mid().hi(); ++k) {
        const RatMatrix& i = s.incl.mat(k);
        const RatMatrix& p = s.proj.mat(k);
        if (!(p * i).is_zero()) throw std::invalid_argument("SES: p o i != 0");
        if (rank_of(i) != s.sub().dim(k)) throw std::invalid_argument("SES: inclusion not injective");
        if (rank_of(p) != s.quot().dim(k)) throw std::invalid_argument("SES: projection not surjective");
        if (rank_of(i) + rank_of(p) != s.mid().dim(k))
            throw std::invalid_argument("SES: rank i + rank p != dim mid");
    }
    return s;
}

bool exact_at_nodes(const std::vector<RatMatrix>& maps, const std::vector<std::size_t>& dims,
                    std::vector<NodeCheck>* details) {
    if (maps.size() + 1 != dims.size())
        throw std::invalid_argument("exact_at_nodes: need one map per adjacent pair");
    std::vector<std::size_t> ranks(maps.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (maps[j].rows() != dims[j + 1] || maps[j].cols() != dims[j])
            throw std::invalid_argument("exact_at_nodes: map shape mismatch");
        ranks[j] = rank_of(maps[j]);
    }
    bool all = true;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        NodeCheck nc;
        std::ostringstream label;
        label << "node " << j;
        nc.label = label.str();
        const std::size_t rin = (j == 0) ? 0 : ranks[j - 1];
        const std::size_t rout = (j == maps.size()) ? 0 : ranks[j];
        nc.ranks_match = (rin + rout == dims[j]);
        nc.composite_zero = true;
        if (j > 0 && j < dims.size() - 1) nc.composite_zero = (maps[j] * maps[j - 1]).is_zero();
        all = all && nc.ranks_match && nc.composite_zero;
        if (details) details->push_back(std::move(nc));
    }
    return all;
}

LesReport les_from_ses(const SesOfComplexes& s) {
    LesReport rep;
    const FiniteComplex& sub = s.sub();
    const FiniteComplex& mid = s.mid();
    const FiniteComplex& quot = s.quot();
    rep.lo = mid.lo();
    const int lo = mid.lo(), hi = mid.hi();

    std::vector<CohomologyBasis> hb_sub, hb_mid, hb_quot;
    for (int k = lo; k <= hi; ++k) {
        hb_sub.push_back(cohomology_basis(sub, k));
        hb_mid.push_back(cohomology_basis(mid, k));
        hb_quot.push_back(cohomology_basis(quot, k));
        rep.h_sub.push_back(hb_sub.back().dim());
        rep.h_mid.push_back(hb_mid.back().dim());
        rep.h_quot.push_back(hb_quot.back().dim());
    }

    auto induced = [&](const ComplexMap& f, const CohomologyBasis& from, const CohomologyBasis& to,
                       int k) {
        RatMatrix out(to.dim(), from.dim());
        for (std::size_t c = 0; c < from.reps.size(); ++c) {
            const RatVec img = f.mat(k).apply(from.reps[c]);
            const RatVec coords = to.class_coordinates(img);
            for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, c) = coords[r];
        }
        return out;
    };

    for (int k = lo; k <= hi; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k - lo);
        rep.induced_i.push_back(induced(s.incl, hb_sub[idx], hb_mid[idx], k));
        rep.induced_p.push_back(induced(s.proj, hb_mid[idx], hb_quot[idx], k));

        // Connecting map by the zig-zag: lift through p, apply d, pull back
        // through i. The canonical solver makes the choice deterministic.
        const std::size_t hsub_next = (k + 1 <= hi) ? hb_sub[idx + 1].dim() : 0;
        RatMatrix conn(hsub_next, hb_quot[idx].dim());
        for (std::size_t c = 0; c < hb_quot[idx].reps.size(); ++c) {
            auto lift = solve_or_none(s.proj.mat(k), hb_quot[idx].reps[c]);
            if (!lift) throw std::logic_error("les_from_ses: projection lift failed");
            const RatVec y = mid.d(k).apply(*lift);
            if (k + 1 > hi) {
                if (!is_zero_vec(y)) throw std::logic_error("les_from_ses: nonzero boundary at top degree");
                continue;
            }
            auto w = solve_or_none(s.incl.mat(k + 1), y);
            if (!w) throw std::logic_error("les_from_ses: inclusion pullback failed");
            if (!is_zero_vec(sub.d(k + 1).apply(*w)))
                throw std::logic_error("les_from_ses: connecting image is not a cocycle");
            const RatVec coords = hb_sub[idx + 1].class_coordinates(*w);
            for (std::size_t r = 0; r < coords.size(); ++r) conn.at(r, c) = coords[r];
        }
        rep.connecting.push_back(std::move(conn));
    }

    // Assemble the LES as one flat sequence and certify exactness.
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> maps;
    for (int k = lo; k <= hi; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k - lo);
        dims.push_back(rep.h_sub[idx]);
        maps.push_back(rep.induced_i[idx]);
        dims.push_back(rep.h_mid[idx]);
        maps.push_back(rep.induced_p[idx]);
        dims.push_back(rep.h_quot[idx]);
        if (k < hi) maps.push_back(rep.connecting[idx]);
    }
    std::vector<NodeCheck> checks;
    rep.exact = exact_at_nodes(maps, dims, &checks);
    if (!rep.exact) {
        for (const auto& nc : checks)
            if (!nc.ranks_match || !nc.composite_zero) {
                rep.failure = nc.label + (nc.ranks_match ? " composite nonzero" : " rank defect");
                break;
            }
    }
    return rep;
}

}  // namespace defcoh
