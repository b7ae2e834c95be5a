#include "reeskit/projgeo.hpp"

#include <sstream>

#include "engine.hpp"

namespace reeskit {

std::string ProjChart::ideal_str() const {
    if (shown.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < shown.size(); ++i) {
        if (i) os << ", ";
        os << shown[i];
    }
    os << ")";
    return os.str();
}

namespace {

// interreduce a generating set without remaking it monic; keeps the shape of
// the dehomogenized canonical generators
std::vector<Poly> light_autoreduce(std::vector<Poly> gens) {
    std::vector<Poly> work;
    for (auto& g : gens)
        if (!g.is_zero()) work.push_back(std::move(g));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < work.size(); ++j)
                if (j != i) others.push_back(work[j]);
            Poly r = normal_form(work[i], others);
            if (!(r == work[i])) {
                changed = true;
                if (r.is_zero()) {
                    work.erase(work.begin() + i);
                } else {
                    work[i] = r;
                }
                break;
            }
        }
    }
    return work;
}

} // namespace

std::vector<ProjChart> proj_charts(const GradedAlgebra& G) {
    const auto& base = G.base();
    std::size_t nb = base->ambient()->nvars();
    std::size_t nt = G.ntvars();

    std::vector<ProjChart> charts;
    for (std::size_t i = 0; i < nt; ++i) {
        std::vector<std::string> unames;
        {
            std::vector<std::string> taken = base->ambient()->vars();
            for (std::size_t j = 0; j < nt; ++j) {
                if (j == i) continue;
                auto f = fresh_var_names(taken, "u" + std::to_string(j + 1), 1);
                unames.push_back(f[0]);
                taken.push_back(f[0]);
            }
        }
        std::vector<std::string> vars = base->ambient()->vars();
        for (const auto& u : unames) vars.push_back(u);
        auto chart_amb = PolyRing::make(base->ambient()->field(), vars);

        std::vector<Poly> images;
        for (std::size_t k = 0; k < nb; ++k) images.push_back(Poly::var(chart_amb, k));
        std::size_t upos = 0;
        for (std::size_t j = 0; j < nt; ++j) {
            if (j == i) {
                images.push_back(Poly::constant(chart_amb, 1));
            } else {
                images.push_back(Poly::var(chart_amb, nb + upos));
                ++upos;
            }
        }
        std::vector<Poly> raw;
        std::vector<std::string> raw_shown;
        for (const auto& g : G.total()->defining_gb()) {
            raw.push_back(substitute(g, chart_amb, images));
            // termwise image of g, keeping g's canonical term order
            std::vector<Term> terms;
            for (const auto& t : g.terms()) {
                Monomial m(chart_amb->nvars());
                for (std::size_t k = 0; k < nb; ++k) m.e[k] = t.m.e[k];
                std::size_t up = 0;
                for (std::size_t j = 0; j < nt; ++j) {
                    if (j == i) continue;
                    m.e[nb + up] = t.m.e[nb + j];
                    ++up;
                }
                terms.push_back({std::move(m), t.c});
            }
            raw_shown.push_back(format_terms(chart_amb, terms));
        }
        std::vector<Poly> gens = light_autoreduce(raw);

        ProjChart chart;
        chart.index = i;
        chart.uvars = unames;
        for (const auto& g : gens) {
            std::string s = g.str();
            for (std::size_t k = 0; k < raw.size(); ++k) {
                if (raw[k] == g) {
                    s = raw_shown[k];
                    break;
                }
            }
            chart.shown.push_back(std::move(s));
        }
        chart.ring = AffineRing::make(chart_amb, std::move(gens));
        charts.push_back(std::move(chart));
    }
    return charts;
}

bool is_proj_empty(const GradedAlgebra& G) {
    Ideal J = G.ideal();
    const auto& amb = G.total()->ambient();
    std::size_t nb = G.base()->ambient()->nvars();
    for (std::size_t i = 0; i < G.ntvars(); ++i) {
        Ideal ti = Ideal::make(J.ring(), {Poly::var(amb, nb + i)});
        if (!saturate(J, ti).is_unit()) return false;
    }
    return true;
}

DensityReport schematically_dense(const AffineRingPtr& A, const Ideal& Jc) {
    require_same_ring(A, Jc.ring());
    Ideal sat = saturate(Ideal::zero(A), Jc);
    if (sat.is_zero()) return DensityReport{true, std::nullopt};
    return DensityReport{false, sat.ring_gens().front()};
}

AssofReport assofrees_check(const FPModule& M, const std::vector<Ideal>& primes) {
    const auto& A = M.ring();
    FPModule ring_as_module = FPModule::free_module(A, 1);
    HomModule D = dual(M);

    AssofReport rep{{}, true};
    for (const auto& p : primes) {
        require_same_ring(A, p.ring());
        if (!ass_membership(p, ring_as_module))
            throw NotAssociatedError("supplied prime is not an associated prime of the base: " +
                                     p.str());
        bool holds = true;
        for (const auto& h : D.gen_maps) {
            for (std::size_t i = 0; i < M.ngens() && holds; ++i)
                if (!p.contains(h.at(0, i))) holds = false;
            if (!holds) break;
        }
        rep.per_prime.push_back(holds);
        rep.aggregate = rep.aggregate && holds;
    }
    return rep;
}

GradedAlgebra closure_of_preimage(const GradedAlgebra& G, const Ideal& Jc) {
    require_same_ring(G.base(), Jc.ring());
    const auto& tamb = G.total()->ambient();
    std::vector<std::size_t> bmap(G.base()->ambient()->nvars());
    for (std::size_t i = 0; i < bmap.size(); ++i) bmap[i] = i;

    Ideal J = G.ideal();
    std::vector<Poly> jc_ext;
    for (const auto& g : Jc.gens()) jc_ext.push_back(reindex(g, tamb, bmap));
    Ideal sat = saturate(J, Ideal::make(J.ring(), jc_ext));
    return GradedAlgebra::make(G.base(), G.tvars(),
                               AffineRing::make(tamb, sat.lifted_gb()));
}

bool proj_subscheme_equal(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (!(*a.total()->ambient() == *b.total()->ambient()) || a.ntvars() != b.ntvars())
        throw RingMismatchError("graded algebras live over different total rings");
    const auto& amb = a.total()->ambient();
    std::size_t nb = a.base()->ambient()->nvars();
    std::vector<Poly> irr;
    for (std::size_t i = 0; i < a.ntvars(); ++i) irr.push_back(Poly::var(amb, nb + i));
    Ideal Ja = a.ideal();
    Ideal Jb = b.ideal();
    Ideal R = Ideal::make(Ja.ring(), irr);
    return saturate(Ja, R).equals(saturate(Jb, R));
}

NashResult nash_transform(const FPModule& M, unsigned d, const Ideal& Jc) {
    if (d < 1) throw DimensionError("nash transform requires rank d >= 1");
    FPModule wedge = exterior_power(M, d);
    GradedAlgebra G = rees_presentation(wedge);
    GradedAlgebra closed = closure_of_preimage(G, Jc);
    NashResult out;
    out.charts = proj_charts(closed);
    out.algebra = std::move(closed);
    return out;
}

} // namespace reeskit
