#include "engine.hpp"

#include <algorithm>
#include <set>

namespace reeskit {
namespace engine {

namespace {

int cmp_elim_block(const Monomial& a, const Monomial& b, const std::vector<char>& elim) {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < elim.size(); ++i) {
        if (!elim[i]) continue;
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = elim.size(); i-- > 0;) {
        if (!elim[i]) continue;
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

} // namespace

int cmp_modterm(const ModOrder& o, std::size_t p1, const Monomial& m1, std::size_t p2,
                const Monomial& m2) {
    if (!o.elim.empty()) {
        if (int c = cmp_elim_block(m1, m2, o.elim)) return c;
    }
    if (p1 != p2) return p1 < p2 ? 1 : -1;
    return mono_cmp(m1, m2, o.ring->order());
}

bool vec_is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

Vec vec_zero(const PolyRingPtr& ring, std::size_t rank) {
    return Vec(rank, Poly::zero(ring));
}

Vec vec_axpy(const Vec& f, const Coeff& c, const Monomial& m, const Vec& g) {
    Vec r(f);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + g[i].times_term(c, m);
    return r;
}

std::optional<ModTerm> vec_leading(const ModOrder& o, const Vec& v) {
    if (o.elim.empty()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) return ModTerm{i, v[i].leading().m, v[i].leading().c};
        }
        return std::nullopt;
    }
    std::optional<ModTerm> best;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (const auto& t : v[i].terms()) {
            if (!best || cmp_modterm(o, i, t.m, best->pos, best->m) > 0)
                best = ModTerm{i, t.m, t.c};
        }
    }
    return best;
}

NFResult normal_form(const ModOrder& o, Vec f, const std::vector<Vec>& basis, bool track) {
    NFResult out;
    out.remainder = vec_zero(o.ring, f.size());
    if (track) out.quotients.assign(basis.size(), Poly::zero(o.ring));

    while (true) {
        auto lt = vec_leading(o, f);
        if (!lt) break;
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto bt = vec_leading(o, basis[k]);
            if (!bt || bt->pos != lt->pos || !bt->m.divides(lt->m)) continue;
            Coeff c = lt->c / bt->c;
            Monomial q = lt->m / bt->m;
            f = vec_axpy(f, -c, q, basis[k]);
            if (track) out.quotients[k] = out.quotients[k] + Poly::term(o.ring, q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::term(o.ring, lt->m, lt->c);
            out.remainder[lt->pos] = out.remainder[lt->pos] + t;
            f[lt->pos] = f[lt->pos] - t;
        }
    }
    return out;
}

namespace {

struct Pair {
    std::size_t i, j;
    std::size_t pos;
    Monomial lcm;
};

struct Working {
    std::vector<Vec> basis;
    std::vector<ModTerm> lts;
    std::vector<std::vector<Poly>> reps;
};

void add_pairs(const Working& w, std::size_t j, std::vector<Pair>& pairs) {
    for (std::size_t i = 0; i < j; ++i) {
        if (w.lts[i].pos != w.lts[j].pos) continue;
        pairs.push_back({i, j, w.lts[j].pos, mono_lcm(w.lts[i].m, w.lts[j].m)});
    }
}

} // namespace

GBResult buchberger(const ModOrder& o, const std::vector<Vec>& gens, std::size_t rank, bool track) {
    Working w;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (vec_is_zero(gens[j])) continue;
        w.basis.push_back(gens[j]);
        w.lts.push_back(*vec_leading(o, gens[j]));
        if (track) {
            std::vector<Poly> rep(gens.size(), Poly::zero(o.ring));
            rep[j] = Poly::constant(o.ring, 1);
            w.reps.push_back(std::move(rep));
        }
    }

    std::vector<Pair> pairs;
    for (std::size_t j = 0; j < w.basis.size(); ++j) add_pairs(w, j, pairs);

    auto pending = [&](std::size_t a, std::size_t b) {
        for (const auto& p : pairs)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pairs.empty()) {
        // normal selection: smallest lcm under the module order
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (cmp_modterm(o, pairs[k].pos, pairs[k].lcm, pairs[best].pos, pairs[best].lcm) < 0)
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);

        // Buchberger's first criterion (ideals only)
        if (rank == 1 && mono_coprime(w.lts[p.i].m, w.lts[p.j].m)) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < w.basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (w.lts[k].pos != p.pos || !w.lts[k].m.divides(p.lcm)) continue;
            if (!pending(p.i, k) && !pending(k, p.j)) skip = true;
        }
        if (skip) continue;

        const auto& fi = w.basis[p.i];
        const auto& fj = w.basis[p.j];
        Vec s = vec_axpy(vec_zero(o.ring, rank), w.lts[p.i].c.inverse(), p.lcm / w.lts[p.i].m, fi);
        s = vec_axpy(s, -(w.lts[p.j].c.inverse()), p.lcm / w.lts[p.j].m, fj);
        std::vector<Poly> rep;
        if (track) {
            rep.assign(gens.size(), Poly::zero(o.ring));
            Poly qi = Poly::term(o.ring, p.lcm / w.lts[p.i].m, w.lts[p.i].c.inverse());
            Poly qj = Poly::term(o.ring, p.lcm / w.lts[p.j].m, w.lts[p.j].c.inverse());
            for (std::size_t t = 0; t < gens.size(); ++t)
                rep[t] = qi * w.reps[p.i][t] - qj * w.reps[p.j][t];
        }

        NFResult nf = normal_form(o, s, w.basis, track);
        if (vec_is_zero(nf.remainder)) continue;
        if (track) {
            for (std::size_t k = 0; k < w.basis.size(); ++k) {
                if (nf.quotients[k].is_zero()) continue;
                for (std::size_t t = 0; t < gens.size(); ++t)
                    rep[t] = rep[t] - nf.quotients[k] * w.reps[k][t];
            }
            w.reps.push_back(std::move(rep));
        }
        w.basis.push_back(nf.remainder);
        w.lts.push_back(*vec_leading(o, nf.remainder));
        add_pairs(w, w.basis.size() - 1, pairs);
    }

    // minimize: drop elements whose leading term is divisible by another's
    std::vector<std::size_t> keep;
    {
        std::vector<std::size_t> idx(w.basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            int c = cmp_modterm(o, w.lts[a].pos, w.lts[a].m, w.lts[b].pos, w.lts[b].m);
            return c ? c < 0 : a < b;
        });
        for (std::size_t a : idx) {
            bool dominated = false;
            for (std::size_t b : keep) {
                if (w.lts[b].pos == w.lts[a].pos && w.lts[b].m.divides(w.lts[a].m)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) keep.push_back(a);
        }
    }

    GBResult out;
    std::vector<std::vector<Poly>> kept_reps;
    for (std::size_t a : keep) {
        Coeff inv = w.lts[a].c.inverse();
        Vec g = w.basis[a];
        for (auto& c : g) c = c.scaled(inv);
        out.basis.push_back(std::move(g));
        if (track) {
            std::vector<Poly> r = w.reps[a];
            for (auto& c : r) c = c.scaled(inv);
            kept_reps.push_back(std::move(r));
        }
    }

    // tail-reduce each element against the others
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
        std::vector<Vec> others;
        std::vector<std::size_t> omap;
        for (std::size_t t = 0; t < out.basis.size(); ++t) {
            if (t == k) continue;
            others.push_back(out.basis[t]);
            omap.push_back(t);
        }
        NFResult nf = normal_form(o, out.basis[k], others, track);
        out.basis[k] = nf.remainder;
        if (track) {
            for (std::size_t t = 0; t < others.size(); ++t) {
                if (nf.quotients[t].is_zero()) continue;
                for (std::size_t g = 0; g < kept_reps[k].size(); ++g)
                    kept_reps[k][g] = kept_reps[k][g] - nf.quotients[t] * kept_reps[omap[t]][g];
            }
        }
    }

    // canonical ordering: descending leading terms
    std::vector<std::size_t> order_idx(out.basis.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        auto la = vec_leading(o, out.basis[a]);
        auto lb = vec_leading(o, out.basis[b]);
        return cmp_modterm(o, la->pos, la->m, lb->pos, lb->m) > 0;
    });
    GBResult sorted;
    for (std::size_t i : order_idx) {
        sorted.basis.push_back(std::move(out.basis[i]));
        if (track) sorted.reps.push_back(std::move(kept_reps[i]));
    }
    return sorted;
}

std::optional<std::vector<Poly>> lift_through(const ModOrder& o, const Vec& f, const GBResult& gb,
                                              std::size_t ngens) {
    NFResult nf = normal_form(o, f, gb.basis, true);
    if (!vec_is_zero(nf.remainder)) return std::nullopt;
    std::vector<Poly> out(ngens, Poly::zero(o.ring));
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        if (nf.quotients[k].is_zero()) continue;
        for (std::size_t t = 0; t < ngens; ++t) out[t] = out[t] + nf.quotients[k] * gb.reps[k][t];
    }
    return out;
}

} // namespace engine
} // namespace reeskit
