#include "reeskit/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

#include "engine.hpp"

namespace reeskit {

struct Ideal::Cache {
    std::mutex mu;
    std::optional<std::vector<Poly>> gb;
};

Ideal::Ideal(AffineRingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

Ideal Ideal::make(AffineRingPtr ring, std::vector<Poly> gens) {
    std::vector<Poly> normalized;
    for (auto& g : gens) {
        Poly h = ring->nf(g);
        if (!h.is_zero()) normalized.push_back(std::move(h));
    }
    return Ideal(std::move(ring), std::move(normalized));
}

Ideal Ideal::unit(AffineRingPtr ring) {
    Poly one = Poly::constant(ring->ambient(), 1);
    return make(std::move(ring), {one});
}

const std::vector<Poly>& Ideal::lifted_gb() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) {
        std::vector<Poly> lift = gens_;
        for (const auto& g : ring_->defining()) lift.push_back(g);
        cache_->gb = reduced_groebner(ring_->ambient(), lift);
    }
    return *cache_->gb;
}

std::vector<Poly> Ideal::ring_gens() const {
    std::vector<Poly> out;
    for (const auto& g : lifted_gb())
        if (!ring_->is_zero_elem(g)) out.push_back(g);
    return out;
}

bool Ideal::contains(const Poly& f) const { return reduce(f).is_zero(); }

Poly Ideal::reduce(const Poly& f) const { return normal_form(f, lifted_gb()); }

bool Ideal::is_unit() const {
    const auto& gb = lifted_gb();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::equals(const Ideal& o) const {
    require_same_ring(ring_, o.ring_);
    return lifted_gb() == o.lifted_gb();
}

std::string Ideal::str() const {
    std::vector<Poly> gs = ring_gens();
    if (gs.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) os << ", ";
        os << gs[i].str();
    }
    os << ")";
    return os.str();
}

std::vector<Poly> reduced_groebner(const PolyRingPtr& ring, const std::vector<Poly>& gens) {
    engine::ModOrder o{ring, {}};
    std::vector<engine::Vec> vecs;
    for (const auto& g : gens) {
        if (!g.ring() || !(*g.ring() == *ring)) throw RingMismatchError("generator ring mismatch");
        vecs.push_back({g});
    }
    auto res = engine::buchberger(o, vecs, 1, false);
    std::vector<Poly> gb;
    for (auto& v : res.basis) gb.push_back(std::move(v[0]));
    return gb;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gb) {
    if (gb.empty()) return f;
    engine::ModOrder o{gb[0].ring(), {}};
    std::vector<engine::Vec> basis;
    for (const auto& g : gb) basis.push_back({g});
    return engine::normal_form(o, {f}, basis, false).remainder[0];
}

namespace {

struct ElimResult {
    PolyRingPtr ring;  // polynomial ring on the kept variables
    std::vector<Poly> gens;
};

// Contraction of (gens) in `ring` to the subring on variables with mask == 0.
ElimResult poly_eliminate(const PolyRingPtr& ring, const std::vector<Poly>& gens,
                          const std::vector<char>& mask) {
    auto block = PolyRing::make(ring->field(), ring->vars(), MonomialOrder::block(mask));
    std::vector<std::size_t> ident(ring->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;

    std::vector<Poly> moved;
    for (const auto& g : gens) moved.push_back(reindex(g, block, ident));
    std::vector<Poly> gb = reduced_groebner(block, moved);

    std::vector<std::string> kept_vars;
    std::vector<std::size_t> kept_idx;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (!mask[i]) {
            kept_vars.push_back(ring->vars()[i]);
            kept_idx.push_back(i);
        }
    }
    auto result_ring = PolyRing::make(ring->field(), kept_vars);

    ElimResult out;
    out.ring = result_ring;
    for (const auto& g : gb) {
        bool free_of_elim = true;
        for (const auto& t : g.terms()) {
            for (std::size_t i = 0; i < mask.size() && free_of_elim; ++i)
                if (mask[i] && t.m.e[i]) free_of_elim = false;
            if (!free_of_elim) break;
        }
        if (!free_of_elim) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m(kept_vars.size());
            for (std::size_t k = 0; k < kept_idx.size(); ++k) m.e[k] = t.m.e[kept_idx[k]];
            terms.push_back({std::move(m), t.c});
        }
        out.gens.push_back(Poly::from_terms(result_ring, std::move(terms)));
    }
    return out;
}

std::vector<Poly> lifted_gens(const Ideal& I) {
    std::vector<Poly> out = I.gens();
    for (const auto& g : I.ring()->defining()) out.push_back(g);
    return out;
}

// intersection of two ideals of the ambient polynomial ring, by t*I + (1-t)*J
std::vector<Poly> poly_intersect(const PolyRingPtr& ring, const std::vector<Poly>& I,
                                 const std::vector<Poly>& J) {
    std::vector<std::string> tname = fresh_var_names(ring->vars(), "t", 1);
    std::vector<std::string> vars;
    vars.push_back(tname[0]);
    for (const auto& v : ring->vars()) vars.push_back(v);
    std::vector<char> mask(vars.size(), 0);
    mask[0] = 1;
    auto ext = PolyRing::make(ring->field(), vars, MonomialOrder::block(mask));

    std::vector<std::size_t> shift(ring->nvars());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;
    Poly t = Poly::var(ext, 0);
    Poly one_minus_t = Poly::constant(ext, 1) - t;

    std::vector<Poly> gens;
    for (const auto& f : I) gens.push_back(t * reindex(f, ext, shift));
    for (const auto& g : J) gens.push_back(one_minus_t * reindex(g, ext, shift));

    auto res = poly_eliminate(ext, gens, mask);
    // transport back to the original ring object
    std::vector<std::size_t> ident(ring->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
    std::vector<Poly> out;
    for (const auto& g : res.gens) out.push_back(reindex(g, ring, ident));
    return out;
}

// exact division h / f in a polynomial ring; h must lie in (f)
Poly divide_exact(const Poly& h, const Poly& f) {
    engine::ModOrder o{h.ring(), {}};
    auto nf = engine::normal_form(o, {h}, {{f}}, true);
    if (!engine::vec_is_zero(nf.remainder)) throw Error("inexact polynomial division");
    return nf.quotients[0];
}

// saturation of an ambient-ring ideal by a single polynomial (Rabinowitsch)
std::vector<Poly> poly_saturate_single(const PolyRingPtr& ring, const std::vector<Poly>& I,
                                       const Poly& f) {
    std::vector<std::string> tname = fresh_var_names(ring->vars(), "t", 1);
    std::vector<std::string> vars;
    vars.push_back(tname[0]);
    for (const auto& v : ring->vars()) vars.push_back(v);
    std::vector<char> mask(vars.size(), 0);
    mask[0] = 1;
    auto ext = PolyRing::make(ring->field(), vars, MonomialOrder::block(mask));

    std::vector<std::size_t> shift(ring->nvars());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = i + 1;

    std::vector<Poly> gens;
    for (const auto& g : I) gens.push_back(reindex(g, ext, shift));
    gens.push_back(Poly::constant(ext, 1) - Poly::var(ext, 0) * reindex(f, ext, shift));

    auto res = poly_eliminate(ext, gens, mask);
    std::vector<std::size_t> ident(ring->nvars());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
    std::vector<Poly> out;
    for (const auto& g : res.gens) out.push_back(reindex(g, ring, ident));
    return out;
}

} // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
    const auto& amb = I.ring()->ambient();
    std::vector<char> mask(amb->nvars(), 0);
    for (const auto& v : vars) {
        auto idx = amb->var_index(v);
        if (!idx) throw Error("eliminate: unknown variable " + v);
        mask[*idx] = 1;
    }
    auto res = poly_eliminate(amb, lifted_gens(I), mask);
    return Ideal::make(AffineRing::poly_ring(res.ring), std::move(res.gens));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Poly> gens = I.gens();
    for (const auto& g : J.gens()) gens.push_back(g);
    return Ideal::make(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    auto out = poly_intersect(I.ring()->ambient(), lifted_gens(I), lifted_gens(J));
    return Ideal::make(I.ring(), std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero()) return Ideal::unit(I.ring());
    const auto& amb = I.ring()->ambient();
    std::optional<Ideal> acc;
    for (const auto& f : J.gens()) {
        auto meet = poly_intersect(amb, lifted_gens(I), {f});
        std::vector<Poly> quots;
        for (const auto& h : meet) quots.push_back(divide_exact(h, f));
        Ideal part = Ideal::make(I.ring(), std::move(quots));
        acc = acc ? intersect(*acc, part) : part;
    }
    return *acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    if (J.is_zero()) return Ideal::unit(I.ring());
    const auto& amb = I.ring()->ambient();
    std::optional<Ideal> acc;
    for (const auto& f : J.gens()) {
        auto sat = poly_saturate_single(amb, lifted_gens(I), f);
        Ideal part = Ideal::make(I.ring(), std::move(sat));
        acc = acc ? intersect(*acc, part) : part;
    }
    return *acc;
}

Ideal saturate_iterated(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    Ideal q = I;
    while (true) {
        Ideal next = ideal_quotient(q, J);
        if (next.equals(q)) return q;
        q = next;
    }
}

Ideal ring_map_kernel(const RingMap& phi) {
    const auto& src = phi.source();
    const auto& tgt = phi.target();
    const auto& samb = src->ambient();
    const auto& tamb = tgt->ambient();

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

    std::vector<Poly> gens;
    for (const auto& g : tgt->defining()) gens.push_back(reindex(g, comb, tmap));
    for (std::size_t i = 0; i < samb->nvars(); ++i)
        gens.push_back(reindex(Poly::var(samb, i), comb, smap) - reindex(phi.images()[i], comb, tmap));
    for (const auto& g : src->defining()) gens.push_back(reindex(g, comb, smap));

    auto res = poly_eliminate(comb, gens, mask);
    std::vector<std::size_t> back(samb->nvars());
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = i;
    std::vector<Poly> out;
    for (const auto& g : res.gens) out.push_back(reindex(g, samb, back));
    return Ideal::make(src, std::move(out));
}

} // namespace reeskit
