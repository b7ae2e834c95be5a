#include <algorithm>
#include <random>
#include <thread>

#include "doctest.h"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace reeskit;
using testutil::P;

TEST_CASE("buchberger worked examples") {
    auto R = PolyRing::make(Field{0}, {"x", "y"}, MonomialOrder::lex());
    auto gb = reduced_groebner(R, {P(R, "x^2 - 1"), P(R, "x*y - 1")});
    REQUIRE(gb.size() == 2);
    CHECK(gb[0].str() == "x - y");
    CHECK(gb[1].str() == "y^2 - 1");

    auto R2 = PolyRing::make(Field{0}, {"x"});
    auto gb2 = reduced_groebner(R2, {P(R2, "x")});
    REQUIRE(gb2.size() == 1);
    CHECK(gb2[0].str() == "x");

    // already a Groebner basis: pairwise coprime-style leading terms
    auto R3 = PolyRing::make(Field{0}, {"x", "T"});
    auto gb3 = reduced_groebner(R3, {P(R3, "x^2"), P(R3, "x*T"), P(R3, "T^2")});
    REQUIRE(gb3.size() == 3);
    CHECK(gb3[0].str() == "x^2");
    CHECK(gb3[1].str() == "x*T");
    CHECK(gb3[2].str() == "T^2");

    CHECK(reduced_groebner(R3, {}).empty());
}

TEST_CASE("normal form examples") {
    auto R = PolyRing::make(Field{0}, {"x"});
    CHECK(normal_form(P(R, "x^2"), {P(R, "x")}).is_zero());

    auto R2 = PolyRing::make(Field{0}, {"x", "T"});
    auto gb = reduced_groebner(R2, {P(R2, "x*T"), P(R2, "x^2")});
    CHECK(normal_form(P(R2, "T^2"), gb).str() == "T^2");

    auto R3 = PolyRing::make(Field{0}, {"x", "y"});
    CHECK(normal_form(P(R3, "y - x"), {P(R3, "x - y")}).is_zero());
}

TEST_CASE("eliminate examples") {
    auto R = PolyRing::make(Field{0}, {"t", "x"});
    auto A = AffineRing::poly_ring(R);
    Ideal E = eliminate(Ideal::make(A, {P(R, "t^2"), P(R, "x - t")}), {"t"});
    CHECK(E.str() == "(x^2)");

    auto Rxy = PolyRing::make(Field{0}, {"x", "y"});
    auto Axy = AffineRing::poly_ring(Rxy);
    Ideal E2 = eliminate(Ideal::make(Axy, {P(Rxy, "x - y")}), {});
    CHECK(E2.str() == "(x - y)");

    // I = (Y*x - T, x^2) in QQ[x,Y,T], eliminating Y; checked against the oracle below
    auto R3 = PolyRing::make(Field{0}, {"x", "Y", "T"});
    auto A3 = AffineRing::poly_ring(R3);
    std::vector<Poly> gens3 = {P(R3, "Y*x - T"), P(R3, "x^2")};
    Ideal E3 = eliminate(Ideal::make(A3, gens3), {"Y"});
    Ideal expected = Ideal::make(E3.ring(), {P(E3.ring(), "x^2"), P(E3.ring(), "x*T"),
                                             P(E3.ring(), "T^2")});
    CHECK(E3.equals(expected));

    // oracle: soundness and completeness at bounded degree
    std::vector<char> mask = {0, 1, 0};
    auto space = oracle::elimination_space(gens3, mask, 4);
    CHECK(!space.empty());
    std::vector<Poly> lifted;
    for (const auto& g : E3.gens()) {
        // map back into the 3-variable ring to compare
        lifted.push_back(P(R3, g.str()));
        CHECK(oracle::member_bounded(gens3, lifted.back(), 5));
    }
    for (const auto& w : space) CHECK(oracle::member_bounded(lifted, w, 5));
}

TEST_CASE("ideal quotient examples") {
    testutil::Fix f = testutil::fix();

    auto Rxy = PolyRing::make(Field{0}, {"x", "y"});
    auto Axy = AffineRing::make(Rxy, {P(Rxy, "x*y")});
    Ideal Q = ideal_quotient(Ideal::zero(Axy), Ideal::make(Axy, {P(Rxy, "x")}));
    CHECK(Q.str() == "(y)");

    auto A = AffineRing::poly_ring(Rxy);
    Ideal I = Ideal::make(A, {P(Rxy, "x^2*y")});
    CHECK(ideal_quotient(I, Ideal::unit(A)).equals(I));
    Ideal Q2 = ideal_quotient(I, Ideal::make(A, {P(Rxy, "y")}));
    CHECK(Q2.str() == "(x^2)");
}

TEST_CASE("saturation examples and two independent routes") {
    testutil::Fix f = testutil::fix();

    // over A = QQ[x]/(x^2) inside A[T]: ((xT, T^2) : T^inf) = (1)
    auto RxT = PolyRing::make(Field{0}, {"x", "T"});
    auto AxT = AffineRing::make(RxT, {P(RxT, "x^2")});
    Ideal I = Ideal::make(AxT, {P(RxT, "x*T"), P(RxT, "T^2")});
    Ideal J = Ideal::make(AxT, {P(RxT, "T")});
    CHECK(saturate(I, J).is_unit());
    CHECK(saturate_iterated(I, J).is_unit());

    auto Rxy = PolyRing::make(Field{0}, {"x", "y"});
    auto Axy = AffineRing::make(Rxy, {P(Rxy, "x*y")});
    Ideal S = saturate(Ideal::zero(Axy), Ideal::make(Axy, {P(Rxy, "x")}));
    CHECK(S.str() == "(y)");
    CHECK(saturate_iterated(Ideal::zero(Axy), Ideal::make(Axy, {P(Rxy, "x")})).equals(S));

    Ideal I2 = Ideal::make(Axy, {P(Rxy, "y")});
    CHECK(saturate(I2, Ideal::unit(Axy)).equals(I2));

    // idempotence, and saturation contains the first colon
    Ideal sat = saturate(Ideal::zero(Axy), Ideal::make(Axy, {P(Rxy, "x")}));
    CHECK(saturate(sat, Ideal::make(Axy, {P(Rxy, "x")})).equals(sat));
    Ideal colon = ideal_quotient(Ideal::zero(Axy), Ideal::make(Axy, {P(Rxy, "x")}));
    for (const auto& g : colon.gens()) CHECK(sat.contains(g));
}

TEST_CASE("ring map kernels") {
    testutil::Fix f = testutil::fix();

    auto RT = PolyRing::make(Field{0}, {"T"});
    auto AT = AffineRing::poly_ring(RT);
    RingMap phi = RingMap::make(AT, f.A1, {P(f.A1, "x")});
    CHECK(ring_map_kernel(phi).str() == "(T^2)");

    // Example data: A[T] -> A[Y], T -> x*Y over the dual numbers
    auto RxT = PolyRing::make(Field{0}, {"x", "T"});
    auto RxY = PolyRing::make(Field{0}, {"x", "Y"});
    auto AxT = AffineRing::make(RxT, {P(RxT, "x^2")});
    auto AxY = AffineRing::make(RxY, {P(RxY, "x^2")});
    RingMap psi = RingMap::make(AxT, AxY, {P(RxY, "x"), P(RxY, "x*Y")});
    Ideal K = ring_map_kernel(psi);
    CHECK(K.str() == "(x*T, T^2)");
    // soundness: kernel generators map to zero
    for (const auto& g : K.gens()) CHECK(psi.apply(g).is_zero());

    CHECK(ring_map_kernel(RingMap::identity(f.A1)).is_zero());
}

TEST_CASE("ring map kernels are complete at small degree") {
    testutil::Fix f = testutil::fix();

    std::vector<RingMap> maps;
    {
        auto RT = PolyRing::make(Field{0}, {"T"});
        maps.push_back(RingMap::make(AffineRing::poly_ring(RT), f.A1, {P(f.A1, "x")}));
    }
    {
        auto RxT = PolyRing::make(Field{0}, {"x", "T"});
        auto RxY = PolyRing::make(Field{0}, {"x", "Y"});
        auto AxT = AffineRing::make(RxT, {P(RxT, "x^2")});
        auto AxY = AffineRing::make(RxY, {P(RxY, "x^2")});
        maps.push_back(RingMap::make(AxT, AxY, {P(RxY, "x"), P(RxY, "x*Y")}));
    }
    {
        // parametrization of the parabola: QQ[x,y] -> QQ[t], kernel (y - x^2)
        auto Rt = PolyRing::make(Field{0}, {"t"});
        auto At = AffineRing::poly_ring(Rt);
        maps.push_back(RingMap::make(f.Axy, At, {P(Rt, "t"), P(Rt, "t^2")}));
    }
    for (const auto& phi : maps) {
        Ideal K = ring_map_kernel(phi);
        for (const auto& g : K.gens()) CHECK(phi.apply(g).is_zero());
        for (const auto& w : oracle::map_kernel_space(phi, 4)) CHECK(K.contains(w));
    }
}

TEST_CASE("intersection examples") {
    auto Rxy = PolyRing::make(Field{0}, {"x", "y"});
    auto A = AffineRing::poly_ring(Rxy);
    Ideal X = Ideal::make(A, {P(Rxy, "x")});
    Ideal Y = Ideal::make(A, {P(Rxy, "y")});
    CHECK(intersect(X, Y).str() == "(x*y)");
    CHECK(intersect(X, X).equals(X));
    CHECK(intersect(X, Ideal::unit(A)).equals(X));
}

TEST_CASE("zero and unit ideals short-circuit to canonical bases") {
    auto R = PolyRing::make(Field{0}, {"x", "y"});
    auto A = AffineRing::poly_ring(R);
    CHECK(Ideal::zero(A).lifted_gb().empty());
    Ideal unit = Ideal::unit(A);
    REQUIRE(unit.lifted_gb().size() == 1);
    CHECK(unit.lifted_gb()[0].str() == "1");
    CHECK(Ideal::make(A, {P(R, "x"), P(R, "x - 1")}).is_unit());
}

TEST_CASE("concurrent cache fills are harmless") {
    auto R = PolyRing::make(Field{0}, {"x", "y", "z"});
    auto A = AffineRing::make(R, {P(R, "x*y - z^2")});
    Ideal I = Ideal::make(A, {P(R, "x^2 - z"), P(R, "y*z - x")});
    Poly probe = P(R, "x^3 - x*z");

    std::vector<std::thread> workers;
    std::vector<std::string> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            results[t] = normal_form(probe, I.lifted_gb()).str() + "|" +
                         A->nf(P(R, "x^2*y^2")).str();
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("reduced GB is canonical under generator permutation") {
    auto R = PolyRing::make(Field{0}, {"x", "y", "z"});
    std::vector<Poly> gens = {P(R, "x*y - z"), P(R, "x^2 - y"), P(R, "y^2 - x*z")};
    auto reference = reduced_groebner(R, gens);
    std::sort(gens.begin(), gens.end(),
              [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
    do {
        CHECK(reduced_groebner(R, gens) == reference);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) {
        return a.str() < b.str();
    }));
}

TEST_CASE("randomized ideals: containments and oracle differential") {
    std::mt19937 rng(91);
    auto R = PolyRing::make(Field{0}, {"x", "y"});
    auto A = AffineRing::poly_ring(R);
    auto monos = oracle::monomials_up_to(2, 2);
    auto random_poly = [&] {
        std::vector<Term> terms;
        int nt = 1 + rng() % 2;
        for (int i = 0; i < nt; ++i)
            terms.push_back({monos[rng() % monos.size()],
                             Coeff::rational((long)(rng() % 5) - 2)});
        return Poly::from_terms(R, terms);
    };
    for (int trial = 0; trial < 12; ++trial) {
        Poly f = random_poly(), g = random_poly();
        if (f.is_zero() || g.is_zero()) continue;
        Ideal I = Ideal::make(A, {f});
        Ideal J = Ideal::make(A, {g});
        Ideal meet = intersect(I, J);
        Ideal colon = ideal_quotient(I, J);
        // I cap J inside both; (I : J) * J inside I
        for (const auto& h : meet.gens()) {
            CHECK(I.contains(h));
            CHECK(J.contains(h));
        }
        for (const auto& q : colon.gens())
            for (const auto& jj : J.gens()) CHECK(I.contains(q * jj));
        // membership differential on a few probes
        for (int p = 0; p < 4; ++p) {
            Poly probe = random_poly();
            CHECK(I.contains(probe) == oracle::member_bounded({f}, probe, 6));
        }
    }
}

TEST_CASE("membership agrees with the degree-bounded oracle") {
    auto R = PolyRing::make(Field{0}, {"x", "y"});
    auto A = AffineRing::poly_ring(R);
    std::vector<std::vector<Poly>> ideals = {
        {P(R, "x^2 - 1"), P(R, "x*y - 1")},
        {P(R, "x*y")},
        {P(R, "x"), P(R, "y")},
        {P(R, "x^2"), P(R, "y^3")},
    };
    std::mt19937 rng(23);
    auto monos = oracle::monomials_up_to(2, 3);
    for (const auto& gens : ideals) {
        Ideal I = Ideal::make(A, gens);
        for (int it = 0; it < 20; ++it) {
            std::vector<Term> terms;
            for (int i = 0; i < 3; ++i)
                terms.push_back({monos[rng() % monos.size()],
                                 Coeff::rational((long)(rng() % 5) - 2)});
            Poly probe = Poly::from_terms(R, terms);
            CHECK(I.contains(probe) == oracle::member_bounded(gens, probe, 6));
        }
        // every reduced GB element is in the ideal per the oracle
        for (const auto& g : I.lifted_gb()) CHECK(oracle::member_bounded(gens, g, 6));
    }
}
