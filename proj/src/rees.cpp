#include "reeskit/rees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "engine.hpp"

namespace reeskit {

namespace {

struct GradedContext {
    PolyRingPtr tot_amb;
    std::vector<std::string> tnames;
    std::vector<Poly> base_ext;   // base defining relations inside tot_amb
    AffineRingPtr base_ext_ring;  // A[T] = tot_amb / base_ext
    std::vector<std::size_t> base_map;
};

GradedContext graded_context(const AffineRingPtr& base, std::size_t n, const std::string& stem) {
    GradedContext ctx;
    const auto& amb = base->ambient();
    ctx.tnames = fresh_var_names(amb->vars(), stem, n);
    std::vector<std::string> vars = amb->vars();
    for (const auto& t : ctx.tnames) vars.push_back(t);
    ctx.tot_amb = PolyRing::make(amb->field(), vars);
    ctx.base_map.resize(amb->nvars());
    for (std::size_t i = 0; i < ctx.base_map.size(); ++i) ctx.base_map[i] = i;
    for (const auto& g : base->defining()) ctx.base_ext.push_back(reindex(g, ctx.tot_amb, ctx.base_map));
    ctx.base_ext_ring = AffineRing::make(ctx.tot_amb, ctx.base_ext);
    return ctx;
}

} // namespace

GradedAlgebra GradedAlgebra::make(AffineRingPtr base, std::vector<std::string> tvars,
                                  AffineRingPtr total) {
    const auto& bamb = base->ambient();
    const auto& tamb = total->ambient();
    if (tamb->nvars() != bamb->nvars() + tvars.size())
        throw DimensionError("total ring must extend the base by the T-variables");
    for (std::size_t i = 0; i < bamb->nvars(); ++i)
        if (tamb->vars()[i] != bamb->vars()[i])
            throw Error("total ring must list the base variables first");
    for (std::size_t i = 0; i < tvars.size(); ++i)
        if (tamb->vars()[bamb->nvars() + i] != tvars[i])
            throw Error("total ring must list the T-variables after the base");

    GradedAlgebra g;
    g.base_ = std::move(base);
    g.tvars_ = std::move(tvars);
    g.total_ = std::move(total);

    std::vector<char> mask = g.tmask();
    for (const auto& gen : g.total_->defining_gb())
        if (!gen.is_homogeneous_on(mask))
            throw Error("graded algebra ideal is not T-homogeneous: " + gen.str());
    std::vector<std::size_t> bmap(bamb->nvars());
    for (std::size_t i = 0; i < bmap.size(); ++i) bmap[i] = i;
    for (const auto& gen : g.base_->defining()) {
        if (!g.total_->is_zero_elem(reindex(gen, tamb, bmap)))
            throw Error("graded algebra ideal does not contain the base relations");
    }
    return g;
}

std::vector<char> GradedAlgebra::tmask() const {
    std::vector<char> mask(total_->ambient()->nvars(), 0);
    for (std::size_t i = base_->ambient()->nvars(); i < mask.size(); ++i) mask[i] = 1;
    return mask;
}

Ideal GradedAlgebra::ideal() const {
    return Ideal::make(AffineRing::poly_ring(total_->ambient()), total_->defining());
}

std::vector<Poly> GradedAlgebra::tpart_gens() const {
    std::vector<std::size_t> bmap(base_->ambient()->nvars());
    for (std::size_t i = 0; i < bmap.size(); ++i) bmap[i] = i;
    std::vector<Poly> base_ext;
    for (const auto& g : base_->defining())
        base_ext.push_back(reindex(g, total_->ambient(), bmap));
    AffineRingPtr ext = AffineRing::make(total_->ambient(), base_ext);
    std::vector<Poly> out;
    for (const auto& g : total_->defining_gb())
        if (!ext->is_zero_elem(g)) out.push_back(g);
    return out;
}

bool GradedAlgebra::ideal_equals(const GradedAlgebra& o) const {
    if (!(*total_->ambient() == *o.total_->ambient())) return false;
    return total_->defining_gb() == o.total_->defining_gb();
}

std::string GradedAlgebra::str() const {
    std::ostringstream os;
    os << base_->str() << " [";
    for (std::size_t i = 0; i < tvars_.size(); ++i) {
        if (i) os << ",";
        os << tvars_[i];
    }
    os << "]";
    std::vector<Poly> tg = tpart_gens();
    if (!tg.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < tg.size(); ++i) {
            if (i) os << ", ";
            os << tg[i].str();
        }
        os << ")";
    }
    return os.str();
}

VersalMap versal_map(const FPModule& M) {
    HomModule D = dual(M);
    std::vector<Vec> covectors;
    for (const auto& h : D.gen_maps) {
        Vec v;
        for (std::size_t i = 0; i < M.ngens(); ++i) v.push_back(h.at(0, i));
        covectors.push_back(std::move(v));
    }
    PolyMatrix mat(M.ring(), covectors.size(), M.ngens());
    for (std::size_t k = 0; k < covectors.size(); ++k)
        for (std::size_t i = 0; i < M.ngens(); ++i) mat.set(k, i, covectors[k][i]);
    return VersalMap{M, std::move(covectors), std::move(mat)};
}

VersalMap versal_map_from(const FPModule& M, std::vector<Vec> covectors) {
    const auto& ring = M.ring();
    FPModule target = FPModule::free_module(ring, 1);
    for (auto& h : covectors) {
        if (h.size() != M.ngens()) throw DimensionError("covector length mismatch");
        for (auto& c : h) c = ring->nf(c);
        PolyMatrix row(ring, 1, M.ngens());
        for (std::size_t i = 0; i < M.ngens(); ++i) row.set(0, i, h[i]);
        if (!ModuleMap::try_make(M, target, row))
            throw IllDefinedMapError("covector is not a homomorphism on M");
    }
    // the chosen covectors must generate the dual
    HomModule D = dual(M);
    Submodule span = Submodule::make(ring, M.ngens(), covectors);
    for (const auto& h : D.gen_maps) {
        Vec v;
        for (std::size_t i = 0; i < M.ngens(); ++i) v.push_back(h.at(0, i));
        if (!span.contains(v))
            throw IllDefinedMapError("covectors do not surject onto the dual");
    }
    PolyMatrix mat(ring, covectors.size(), M.ngens());
    for (std::size_t k = 0; k < covectors.size(); ++k)
        for (std::size_t i = 0; i < M.ngens(); ++i) mat.set(k, i, covectors[k][i]);
    return VersalMap{M, std::move(covectors), std::move(mat)};
}

GradedAlgebra sym_presentation(const FPModule& M) {
    const auto& base = M.ring();
    std::size_t n = M.ngens();
    GradedContext ctx = graded_context(base, n, "T");

    std::vector<Poly> gens = ctx.base_ext;
    for (std::size_t j = 0; j < M.presentation().ncols(); ++j) {
        Poly linear = Poly::zero(ctx.tot_amb);
        for (std::size_t i = 0; i < n; ++i) {
            Poly coeff = reindex(M.presentation().at(i, j), ctx.tot_amb, ctx.base_map);
            linear = linear + coeff * Poly::var(ctx.tot_amb, base->ambient()->nvars() + i);
        }
        gens.push_back(linear);
    }
    return GradedAlgebra::make(base, ctx.tnames, AffineRing::make(ctx.tot_amb, gens));
}

GradedAlgebra rees_presentation(const FPModule& M) { return rees_presentation(M, versal_map(M)); }

GradedAlgebra rees_presentation(const FPModule& M, const VersalMap& v) {
    const auto& base = M.ring();
    std::size_t n = M.ngens();
    std::size_t r = v.covectors.size();
    GradedContext tctx = graded_context(base, n, "T");
    GradedContext yctx = graded_context(base, r, "Y");

    std::vector<Poly> images;
    std::size_t nb = base->ambient()->nvars();
    for (std::size_t i = 0; i < nb; ++i) images.push_back(Poly::var(yctx.tot_amb, i));
    for (std::size_t i = 0; i < n; ++i) {
        Poly im = Poly::zero(yctx.tot_amb);
        for (std::size_t k = 0; k < r; ++k) {
            Poly coeff = reindex(v.matrix.at(k, i), yctx.tot_amb, yctx.base_map);
            im = im + coeff * Poly::var(yctx.tot_amb, nb + k);
        }
        images.push_back(im);
    }
    RingMap phi = RingMap::make(tctx.base_ext_ring, yctx.base_ext_ring, std::move(images));
    Ideal kernel = ring_map_kernel(phi);

    std::vector<Poly> gens = tctx.base_ext;
    for (const auto& g : kernel.gens()) gens.push_back(g);
    return GradedAlgebra::make(base, tctx.tnames, AffineRing::make(tctx.tot_amb, gens));
}

std::vector<std::vector<unsigned>> homogeneous_exponents(std::size_t nvars, unsigned degree) {
    std::vector<std::vector<unsigned>> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    std::vector<unsigned> cur(nvars, 0);
    // descending lex enumeration
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = static_cast<int>(left); e >= 0; --e) {
            cur[i] = static_cast<unsigned>(e);
            rec(i + 1, left - static_cast<unsigned>(e));
        }
    };
    rec(0, degree);
    return out;
}

FPModule graded_piece(const GradedAlgebra& G, unsigned n) {
    const auto& base = G.base();
    const auto& tamb = G.total()->ambient();
    std::size_t nb = base->ambient()->nvars();
    std::size_t nt = G.ntvars();

    auto tuples = homogeneous_exponents(nt, n);
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t k = 0; k < tuples.size(); ++k) index[tuples[k]] = k;

    std::vector<char> mask = G.tmask();
    std::vector<Vec> rel_cols;
    for (const auto& g : G.total()->defining_gb()) {
        unsigned d = g.degree_on(mask);
        if (d > n) continue;
        for (const auto& mult : homogeneous_exponents(nt, n - d)) {
            Monomial tm(tamb->nvars());
            for (std::size_t k = 0; k < nt; ++k) tm.e[nb + k] = mult[k];
            Poly prod = g.times_term(Coeff::one(tamb->field()), tm);
            // split each term into its T-monomial and base coefficient
            Vec col(tuples.size(), Poly::zero(base->ambient()));
            for (const auto& term : prod.terms()) {
                std::vector<unsigned> texp(nt);
                Monomial bm(nb);
                for (std::size_t k = 0; k < nt; ++k) texp[k] = term.m.e[nb + k];
                for (std::size_t k = 0; k < nb; ++k) bm.e[k] = term.m.e[k];
                auto it = index.find(texp);
                if (it == index.end()) throw Error("graded piece: inhomogeneous generator");
                col[it->second] =
                    col[it->second] + Poly::term(base->ambient(), std::move(bm), term.c);
            }
            bool zero = true;
            for (auto& c : col) {
                c = base->nf(c);
                if (!c.is_zero()) zero = false;
            }
            if (!zero) rel_cols.push_back(std::move(col));
        }
    }
    return FPModule::cokernel(base, PolyMatrix::from_columns(base, tuples.size(), rel_cols));
}

AffineRingPtr algebra_image_quotient(const AffineRingPtr& B, const RingMap& psi) {
    if (!B->same_as(*psi.source())) throw RingMismatchError("map does not start at the algebra");
    Ideal kernel = ring_map_kernel(psi);
    std::vector<Poly> gens = B->defining();
    for (const auto& g : kernel.gens()) gens.push_back(g);
    return AffineRing::make(B->ambient(), std::move(gens));
}

RingMap versal_induced_map(const GradedAlgebra& G, const VersalMap& v) {
    const auto& base = G.base();
    std::size_t n = G.ntvars();
    if (v.matrix.ncols() != n) throw DimensionError("versal map does not match the T-variables");
    std::size_t r = v.covectors.size();
    GradedContext yctx = graded_context(base, r, "Y");
    std::size_t nb = base->ambient()->nvars();

    std::vector<Poly> images;
    for (std::size_t i = 0; i < nb; ++i) images.push_back(Poly::var(yctx.tot_amb, i));
    for (std::size_t i = 0; i < n; ++i) {
        Poly im = Poly::zero(yctx.tot_amb);
        for (std::size_t k = 0; k < r; ++k) {
            Poly coeff = reindex(v.matrix.at(k, i), yctx.tot_amb, yctx.base_map);
            im = im + coeff * Poly::var(yctx.tot_amb, nb + k);
        }
        images.push_back(im);
    }
    return RingMap::make(G.total(), yctx.base_ext_ring, std::move(images));
}

namespace {

// transports polynomials of R(M)'s total ambient (over A) into B[T]'s ambient
std::vector<Poly> extension_images(const GradedAlgebra& RM, const RingMap& phi,
                                   const PolyRingPtr& target_amb) {
    std::size_t na = RM.base()->ambient()->nvars();
    std::size_t nb = phi.target()->ambient()->nvars();
    std::vector<std::size_t> bmap(nb);
    for (std::size_t i = 0; i < nb; ++i) bmap[i] = i;
    std::vector<Poly> images;
    for (std::size_t i = 0; i < na; ++i)
        images.push_back(reindex(phi.images()[i], target_amb, bmap));
    for (std::size_t i = 0; i < RM.ntvars(); ++i)
        images.push_back(Poly::var(target_amb, nb + i));
    return images;
}

} // namespace

CompareReport compare_base_change(const FPModule& M, const RingMap& phi) {
    if (!M.ring()->same_as(*phi.source()))
        throw RingMismatchError("module not over the map's source");
    GradedAlgebra RM = rees_presentation(M);
    FPModule N = base_change(M, phi);
    GradedAlgebra RN = rees_presentation(N);

    const auto& bt_amb = RN.total()->ambient();
    std::vector<std::size_t> bmap(phi.target()->ambient()->nvars());
    for (std::size_t i = 0; i < bmap.size(); ++i) bmap[i] = i;
    std::vector<Poly> bext;
    for (const auto& g : phi.target()->defining()) bext.push_back(reindex(g, bt_amb, bmap));
    AffineRingPtr bt_ring = AffineRing::make(bt_amb, bext);

    std::vector<Poly> images = extension_images(RM, phi, bt_amb);
    std::vector<Poly> left_gens;
    for (const auto& g : RM.total()->defining())
        left_gens.push_back(substitute(g, bt_amb, images));

    CompareReport rep{true, std::nullopt, Ideal::make(bt_ring, left_gens),
                      Ideal::make(bt_ring, RN.total()->defining())};
    for (const auto& g : rep.left.ring_gens()) {
        if (!rep.right.contains(g)) {
            rep.surjection = false;
            rep.witness = g;
            break;
        }
    }
    return rep;
}

bool check_injectivity_flat(const FPModule& M, const RingMap& phi, bool hypotheses_asserted) {
    if (!M.ring()->same_as(*phi.source()))
        throw RingMismatchError("module not over the map's source");
    if (!hypotheses_asserted && !is_principal_localization(phi))
        throw Error("base change hypotheses are neither asserted nor recognized");
    if (!ring_map_kernel(phi).is_zero())
        throw NonInjectiveBaseChange("base change map has a nonzero kernel");

    GradedAlgebra RM = rees_presentation(M);
    FPModule N = base_change(M, phi);
    GradedAlgebra RN = rees_presentation(N);
    std::vector<Poly> images = extension_images(RM, phi, RN.total()->ambient());
    RingMap induced = RingMap::make(RM.total(), RN.total(), std::move(images));
    return ring_map_kernel(induced).is_zero();
}

} // namespace reeskit
