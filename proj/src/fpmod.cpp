#include "reeskit/fpmod.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "engine.hpp"

namespace reeskit {

struct FPModule::Cache {
    std::mutex mu;
    std::optional<Submodule> rel;
};

FPModule::FPModule(AffineRingPtr ring, PolyMatrix pres)
    : ring_(std::move(ring)), pres_(std::move(pres)), cache_(std::make_shared<Cache>()) {}

FPModule FPModule::cokernel(AffineRingPtr ring, PolyMatrix pres) {
    if (!pres.ring() || !pres.ring()->same_as(*ring)) {
        PolyMatrix m(ring, pres.nrows(), pres.ncols());
        for (std::size_t i = 0; i < pres.nrows(); ++i)
            for (std::size_t j = 0; j < pres.ncols(); ++j) m.set(i, j, pres.at(i, j));
        pres = std::move(m);
    }
    return FPModule(std::move(ring), pres.drop_zero_columns());
}

FPModule FPModule::free_module(AffineRingPtr ring, std::size_t n) {
    PolyMatrix pres(ring, n, 0);
    return FPModule(std::move(ring), std::move(pres));
}

FPModule FPModule::quotient_by_ideal(const Ideal& I) {
    std::vector<Vec> cols;
    for (const auto& g : I.gens()) cols.push_back(Vec{g});
    PolyMatrix pres = PolyMatrix::from_columns(I.ring(), 1, cols);
    return cokernel(I.ring(), std::move(pres));
}

const Submodule& FPModule::relations() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->rel) cache_->rel = Submodule::make(ring_, ngens(), pres_.columns());
    return *cache_->rel;
}

bool FPModule::is_zero() const {
    const Submodule& rel = relations();
    for (std::size_t i = 0; i < ngens(); ++i) {
        Vec e(ngens(), Poly::zero(ring_->ambient()));
        e[i] = Poly::constant(ring_->ambient(), 1);
        if (!rel.contains(e)) return false;
    }
    return true;
}

FPModule FPModule::minimized() const {
    std::vector<std::vector<Poly>> a(ngens());
    for (std::size_t i = 0; i < ngens(); ++i)
        for (std::size_t j = 0; j < pres_.ncols(); ++j) a[i].push_back(pres_.at(i, j));

    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t rows = a.size();
        std::size_t cols = rows ? a[0].size() : 0;
        for (std::size_t j = 0; j < cols && !changed; ++j) {
            for (std::size_t i = 0; i < rows && !changed; ++i) {
                const Poly& piv = a[i][j];
                if (piv.is_zero() || !piv.is_constant()) continue;
                Coeff u = piv.leading().c;
                for (std::size_t j2 = 0; j2 < cols; ++j2) {
                    if (j2 == j || a[i][j2].is_zero()) continue;
                    Poly factor = a[i][j2];
                    for (std::size_t i2 = 0; i2 < rows; ++i2)
                        a[i2][j2] = ring_->nf(a[i2][j2] - (a[i2][j] * factor).scaled(u.inverse()));
                }
                for (std::size_t i2 = 0; i2 < rows; ++i2) a[i2].erase(a[i2].begin() + j);
                a.erase(a.begin() + i);
                changed = true;
            }
        }
    }

    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    PolyMatrix m(ring_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, a[i][j]);
    return cokernel(ring_, std::move(m));
}

bool FPModule::same_presentation(const FPModule& o) const {
    return ring_->same_as(*o.ring_) && pres_ == o.pres_;
}

ModuleMap ModuleMap::make(FPModule source, FPModule target, PolyMatrix mat) {
    if (mat.nrows() != target.ngens() || mat.ncols() != source.ngens())
        throw DimensionError("module map matrix has wrong shape");
    require_same_ring(source.ring(), target.ring());
    for (std::size_t j = 0; j < source.presentation().ncols(); ++j) {
        Vec image = mat.mul_vec(source.presentation().column(j));
        if (!target.relations().contains(image))
            throw IllDefinedMapError("module map does not respect relations");
    }
    return ModuleMap(std::move(source), std::move(target), std::move(mat));
}

std::optional<ModuleMap> ModuleMap::try_make(FPModule source, FPModule target, PolyMatrix mat) {
    try {
        return make(std::move(source), std::move(target), std::move(mat));
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool ModuleMap::is_surjective() const {
    std::vector<Vec> span = mat_.columns();
    for (const auto& c : target_.presentation().columns()) span.push_back(c);
    Submodule s = Submodule::make(target_.ring(), target_.ngens(), std::move(span));
    for (std::size_t k = 0; k < target_.ngens(); ++k) {
        Vec e(target_.ngens(), Poly::zero(target_.ring()->ambient()));
        e[k] = Poly::constant(target_.ring()->ambient(), 1);
        if (!s.contains(e)) return false;
    }
    return true;
}

Presented present(const AffineRingPtr& ring, std::size_t rank, std::vector<Vec> gens) {
    Presented out;
    for (auto& g : gens) {
        if (g.size() != rank) throw DimensionError("generator rank mismatch");
        for (auto& c : g) c = ring->nf(c);
    }
    PolyMatrix cols = PolyMatrix::from_columns(ring, rank, gens);
    PolyMatrix rel = syzygies(cols);
    out.module = FPModule::cokernel(ring, std::move(rel));
    out.span_gens = std::move(gens);
    return out;
}

Presented present(const Submodule& S) { return present(S.ring(), S.rank(), S.gens()); }

HomModule hom_module(const FPModule& M, const FPModule& N) {
    require_same_ring(M.ring(), N.ring());
    const auto& ring = M.ring();
    const auto& amb = ring->ambient();
    const std::size_t nm = M.ngens(), nn = N.ngens();
    const std::size_t m = M.presentation().ncols(), q = N.presentation().ncols();
    const std::size_t s = nm * nn;  // flattened lift H, column-major: block i holds H(.,i)

    // K = { H : H*P lands columnwise in im Q }: first-s projection of the
    // syzygies of [beta | Gamma], beta(H) = H*P stacked, Gamma = blockwise Q
    std::vector<Vec> hom_vectors;
    if (s == 0) {
        // no generators on one side: the zero module of homs
    } else if (nn * m == 0) {
        for (std::size_t t = 0; t < s; ++t) {
            Vec v(s, Poly::zero(amb));
            v[t] = Poly::constant(amb, 1);
            hom_vectors.push_back(std::move(v));
        }
    } else {
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < nm; ++i) {
            for (std::size_t k = 0; k < nn; ++k) {
                Vec v(nn * m, Poly::zero(amb));
                for (std::size_t j = 0; j < m; ++j) v[j * nn + k] = M.presentation().at(i, j);
                cols.push_back(std::move(v));
            }
        }
        for (std::size_t l = 0; l < q; ++l) {
            for (std::size_t j = 0; j < m; ++j) {
                Vec v(nn * m, Poly::zero(amb));
                for (std::size_t k = 0; k < nn; ++k) v[j * nn + k] = N.presentation().at(k, l);
                cols.push_back(std::move(v));
            }
        }
        PolyMatrix sys = PolyMatrix::from_columns(ring, nn * m, cols);
        PolyMatrix syz = syzygies(sys);
        for (std::size_t c = 0; c < syz.ncols(); ++c) {
            Vec head(s, Poly::zero(amb));
            for (std::size_t t = 0; t < s; ++t) head[t] = syz.at(t, c);
            if (!engine::vec_is_zero(head)) hom_vectors.push_back(std::move(head));
        }
    }

    // trivial lifts: N-relation columns placed in each generator slot
    std::vector<Vec> trivial;
    for (std::size_t l = 0; l < q; ++l) {
        for (std::size_t i = 0; i < nm; ++i) {
            Vec v(s, Poly::zero(amb));
            for (std::size_t k = 0; k < nn; ++k) v[i * nn + k] = N.presentation().at(k, l);
            trivial.push_back(std::move(v));
        }
    }

    std::vector<Vec> combined = hom_vectors;
    for (const auto& w : trivial) combined.push_back(w);
    std::size_t r = hom_vectors.size();
    PolyMatrix rel(ring, r, 0);
    if (r > 0) {
        PolyMatrix comb_cols = PolyMatrix::from_columns(ring, s, combined);
        PolyMatrix syz2 = syzygies(comb_cols);
        rel = PolyMatrix(ring, r, syz2.ncols());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < syz2.ncols(); ++j) rel.set(i, j, syz2.at(i, j));
    }

    HomModule out;
    out.module = FPModule::cokernel(ring, rel.drop_zero_columns());
    for (const auto& h : hom_vectors) {
        PolyMatrix H(ring, nn, nm);
        for (std::size_t i = 0; i < nm; ++i)
            for (std::size_t k = 0; k < nn; ++k) H.set(k, i, h[i * nn + k]);
        out.gen_maps.push_back(std::move(H));
    }
    return out;
}

HomModule dual(const FPModule& M) { return hom_module(M, FPModule::free_module(M.ring(), 1)); }

namespace {

// evaluation vector of generator i of M inside A^r, r = #dual generators
Vec evaluation_vector(const HomModule& D, std::size_t i) {
    Vec v;
    v.reserve(D.gen_maps.size());
    for (const auto& h : D.gen_maps) v.push_back(h.at(0, i));
    return v;
}

} // namespace

ModuleMap double_dual_map(const FPModule& M) {
    HomModule D = dual(M);
    HomModule DD = dual(D.module);
    const auto& ring = M.ring();
    std::size_t r = D.gen_maps.size();
    std::size_t t = DD.gen_maps.size();

    std::vector<Vec> psi;
    for (const auto& g : DD.gen_maps) {
        Vec row;
        for (std::size_t k = 0; k < r; ++k) row.push_back(g.at(0, k));
        psi.push_back(std::move(row));
    }
    Submodule span = Submodule::make(ring, r, psi);

    PolyMatrix mat(ring, t, M.ngens());
    for (std::size_t i = 0; i < M.ngens(); ++i) {
        Vec ev = evaluation_vector(D, i);
        auto coeffs = span.express(ev);
        if (!coeffs) throw Error("evaluation vector is not a bidual element");
        for (std::size_t j = 0; j < t; ++j) mat.set(j, i, (*coeffs)[j]);
    }
    return ModuleMap::make(M, DD.module, std::move(mat));
}

Torsionless torsionless_quotient(const FPModule& M) {
    HomModule D = dual(M);
    std::size_t r = D.gen_maps.size();
    std::vector<Vec> images;
    for (std::size_t i = 0; i < M.ngens(); ++i) images.push_back(evaluation_vector(D, i));
    Presented pres = present(M.ring(), r, std::move(images));
    ModuleMap surj = ModuleMap::make(M, pres.module, PolyMatrix::identity(M.ring(), M.ngens()));
    return Torsionless{pres.module, std::move(surj)};
}

bool is_principal_localization(const RingMap& phi) {
    const auto& src = phi.source();
    const auto& tgt = phi.target();
    const auto& samb = src->ambient();
    const auto& tamb = tgt->ambient();
    if (tamb->nvars() != samb->nvars() + 1) return false;
    for (std::size_t i = 0; i < samb->nvars(); ++i) {
        if (tamb->vars()[i] != samb->vars()[i]) return false;
        if (!(phi.images()[i] == tgt->nf(Poly::var(tamb, i)))) return false;
    }
    std::size_t z = samb->nvars();
    std::vector<std::size_t> lift_map(samb->nvars());
    for (std::size_t i = 0; i < lift_map.size(); ++i) lift_map[i] = i;
    std::vector<Poly> lifted_src;
    for (const auto& g : src->defining()) lifted_src.push_back(reindex(g, tamb, lift_map));
    bool found_inverter = false;
    for (const auto& g : tgt->defining()) {
        bool matches_source = false;
        for (const auto& e : lifted_src)
            if (g == e) matches_source = true;
        if (matches_source) continue;
        if (found_inverter) return false;
        // required shape: f*z - 1 with f free of z
        Poly fz = g + Poly::constant(tamb, 1);  // should equal f*z
        if (fz.is_zero()) return false;
        for (const auto& term : fz.terms())
            if (term.m.e[z] != 1) return false;
        found_inverter = true;
    }
    return found_inverter;
}

FPModule torsionless_via_flat(const FPModule& M, const RingMap& phi, bool flat_asserted) {
    if (!M.ring()->same_as(*phi.source()))
        throw RingMismatchError("module not over the map's source");
    if (!flat_asserted && !is_principal_localization(phi))
        throw Error("flatness of the base change is neither asserted nor recognized");
    Ideal ker = ring_map_kernel(phi);
    if (!ker.is_zero()) throw NonInjectiveBaseChange("base change map has a nonzero kernel");

    const auto& src = phi.source();
    const auto& tgt = phi.target();
    const auto& samb = src->ambient();
    const auto& tamb = tgt->ambient();
    std::size_t n = M.ngens();

    std::vector<std::string> tnames;
    {
        std::vector<std::string> taken = samb->vars();
        for (std::size_t i = 0; i < tamb->nvars(); ++i) {
            auto fresh = fresh_var_names(taken, tamb->vars()[i], 1);
            tnames.push_back(fresh[0]);
            taken.push_back(fresh[0]);
        }
    }
    std::vector<std::string> vars = tnames;
    for (const auto& v : samb->vars()) vars.push_back(v);
    std::vector<char> mask(vars.size(), 0);
    for (std::size_t i = 0; i < tnames.size(); ++i) mask[i] = 1;
    auto comb = PolyRing::make(samb->field(), vars, MonomialOrder::block(mask));
    std::vector<std::size_t> tmap(tamb->nvars()), smap(samb->nvars());
    for (std::size_t i = 0; i < tmap.size(); ++i) tmap[i] = i;
    for (std::size_t i = 0; i < smap.size(); ++i) smap[i] = tnames.size() + i;

    std::vector<Vec> w;
    for (std::size_t j = 0; j < M.presentation().ncols(); ++j) {
        Vec v(n, Poly::zero(comb));
        for (std::size_t i = 0; i < n; ++i)
            v[i] = reindex(phi.apply(M.presentation().at(i, j)), comb, tmap);
        w.push_back(std::move(v));
    }
    auto push_scalar_multiples = [&](const Poly& scalar) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec v(n, Poly::zero(comb));
            v[i] = scalar;
            w.push_back(std::move(v));
        }
    };
    for (std::size_t i = 0; i < samb->nvars(); ++i)
        push_scalar_multiples(reindex(Poly::var(samb, i), comb, smap) -
                              reindex(phi.images()[i], comb, tmap));
    for (const auto& g : tgt->defining()) push_scalar_multiples(reindex(g, comb, tmap));
    for (const auto& g : src->defining()) push_scalar_multiples(reindex(g, comb, smap));

    engine::ModOrder order{comb, mask};
    auto gb = engine::buchberger(order, w, n, false);

    std::vector<Vec> rel_cols;
    for (const auto& b : gb.basis) {
        bool elim_free = true;
        for (const auto& coord : b) {
            for (const auto& term : coord.terms()) {
                for (std::size_t i = 0; i < tnames.size() && elim_free; ++i)
                    if (term.m.e[i]) elim_free = false;
                if (!elim_free) break;
            }
            if (!elim_free) break;
        }
        if (!elim_free) continue;
        Vec v(n, Poly::zero(samb));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Term> terms;
            for (const auto& term : b[i].terms()) {
                Monomial mo(samb->nvars());
                for (std::size_t k = 0; k < samb->nvars(); ++k)
                    mo.e[k] = term.m.e[tnames.size() + k];
                terms.push_back({std::move(mo), term.c});
            }
            v[i] = src->nf(Poly::from_terms(samb, std::move(terms)));
        }
        if (!engine::vec_is_zero(v)) rel_cols.push_back(std::move(v));
    }
    return FPModule::cokernel(src, PolyMatrix::from_columns(src, n, rel_cols));
}

FPModule base_change(const FPModule& M, const RingMap& phi) {
    if (!M.ring()->same_as(*phi.source()))
        throw RingMismatchError("module not over the map's source");
    PolyMatrix m(phi.target(), M.ngens(), M.presentation().ncols());
    for (std::size_t i = 0; i < M.ngens(); ++i)
        for (std::size_t j = 0; j < M.presentation().ncols(); ++j)
            m.set(i, j, phi.apply(M.presentation().at(i, j)));
    return FPModule::cokernel(phi.target(), std::move(m));
}

namespace {

void subsets_of_size(std::size_t n, unsigned d, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == d) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (d - cur.size()) <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace

FPModule exterior_power(const FPModule& M, unsigned d) {
    const auto& ring = M.ring();
    std::size_t n = M.ngens();
    if (d == 0) return FPModule::free_module(ring, 1);

    std::vector<std::vector<std::size_t>> subsets;
    subsets_of_size(n, d, subsets);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < subsets.size(); ++k) index[subsets[k]] = k;

    std::vector<std::vector<std::size_t>> small;
    subsets_of_size(n, d - 1, small);

    std::vector<Vec> rel_cols;
    for (std::size_t j = 0; j < M.presentation().ncols(); ++j) {
        Vec c = M.presentation().column(j);
        for (const auto& R : small) {
            // (sum_i c_i g_i) wedge g_{R}
            Vec v(subsets.size(), Poly::zero(ring->ambient()));
            for (std::size_t i = 0; i < n; ++i) {
                if (c[i].is_zero()) continue;
                if (std::find(R.begin(), R.end(), i) != R.end()) continue;
                std::vector<std::size_t> S = R;
                S.push_back(i);
                std::sort(S.begin(), S.end());
                // moving g_i into sorted position passes the smaller indices of R
                std::size_t below = 0;
                for (std::size_t rj : R)
                    if (rj < i) ++below;
                bool negative = below % 2 != 0;
                std::size_t idx = index.at(S);
                v[idx] = v[idx] + (negative ? -c[i] : c[i]);
            }
            if (!engine::vec_is_zero(v)) rel_cols.push_back(std::move(v));
        }
    }
    return FPModule::cokernel(ring, PolyMatrix::from_columns(ring, subsets.size(), rel_cols));
}

Ideal annihilator(const FPModule& M) {
    const auto& ring = M.ring();
    if (M.ngens() == 0) return Ideal::unit(ring);
    std::optional<Ideal> acc;
    for (std::size_t i = 0; i < M.ngens(); ++i) {
        // { a : a*e_i lies in the relation submodule }
        std::vector<Vec> cols;
        Vec e(M.ngens(), Poly::zero(ring->ambient()));
        e[i] = Poly::constant(ring->ambient(), 1);
        cols.push_back(std::move(e));
        for (const auto& c : M.presentation().columns()) cols.push_back(c);
        PolyMatrix combined = PolyMatrix::from_columns(ring, M.ngens(), cols);
        PolyMatrix syz = syzygies(combined);
        std::vector<Poly> gens;
        for (std::size_t j = 0; j < syz.ncols(); ++j) gens.push_back(syz.at(0, j));
        Ideal colon = Ideal::make(ring, std::move(gens));
        acc = acc ? intersect(*acc, colon) : colon;
    }
    return *acc;
}

bool ass_membership(const Ideal& p, const FPModule& M) {
    require_same_ring(p.ring(), M.ring());
    if (p.is_unit()) throw UnitIdealError("the unit ideal is not prime");
    HomModule H = hom_module(FPModule::quotient_by_ideal(p), M);
    Ideal ann = annihilator(H.module);
    for (const auto& g : ann.gens())
        if (!p.contains(g)) return false;
    return true;
}

bool iso_via_mutual_surjections(const FPModule& M, const FPModule& N, const PolyMatrix& to,
                                const PolyMatrix& from) {
    auto f = ModuleMap::try_make(M, N, to);
    auto g = ModuleMap::try_make(N, M, from);
    return f && g && f->is_surjective() && g->is_surjective();
}

} // namespace reeskit
