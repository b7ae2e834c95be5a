#include "doctest.h"
#include "test_util.hpp"

using namespace reeskit;
using testutil::P;

TEST_CASE("present: worked examples") {
    testutil::Fix f = testutil::fix();

    // the running torsion module appears as the span of x in the dual numbers
    auto p1 = present(f.A1, 1, {Vec{P(f.A1, "x")}});
    CHECK(p1.module.ngens() == 1);
    REQUIRE(p1.module.presentation().ncols() == 1);
    CHECK(p1.module.presentation().at(0, 0).str() == "x");

    // unit vectors give a free presentation
    auto p2 = present(f.Axy, 2,
                      {Vec{Poly::constant(f.Axy->ambient(), 1), Poly::zero(f.Axy->ambient())},
                       Vec{Poly::zero(f.Axy->ambient()), Poly::constant(f.Axy->ambient(), 1)}});
    CHECK(p2.module.is_free_presentation());

    // the (x,y) span has the Koszul column as its relations
    CHECK(f.Mxy.presentation().str() == "[[y],[-x]]");
}

TEST_CASE("hom_module: worked examples") {
    testutil::Fix f = testutil::fix();

    // Hom(M1, A1) has a single generator sending the generator to x
    HomModule h1 = hom_module(f.M1, FPModule::free_module(f.A1, 1));
    REQUIRE(h1.gen_maps.size() == 1);
    CHECK(h1.gen_maps[0].at(0, 0).str() == "x");
    // and is isomorphic to A1/(x)
    FPModule a1modx = FPModule::quotient_by_ideal(Ideal::make(f.A1, {P(f.A1, "x")}));
    CHECK(iso_via_mutual_surjections(h1.module, a1modx, PolyMatrix::identity(f.A1, 1),
                                     PolyMatrix::identity(f.A1, 1)));

    // Hom(A^2, A) is free of rank 2
    HomModule h2 = hom_module(FPModule::free_module(f.Axy, 2), FPModule::free_module(f.Axy, 1));
    CHECK(h2.gen_maps.size() == 2);
    CHECK(h2.module.is_free_presentation());

    // Hom(A/(x), A) = 0 over a domain
    HomModule h3 = hom_module(FPModule::quotient_by_ideal(Ideal::make(f.Ax, {P(f.Ax, "x")})),
                              FPModule::free_module(f.Ax, 1));
    CHECK(h3.module.is_zero());
}

TEST_CASE("hom generator maps are well-defined and independent") {
    testutil::Fix f = testutil::fix();
    std::vector<std::pair<FPModule, FPModule>> pairs = {
        {f.Mxy, f.Mxy},
        {f.M1, FPModule::free_module(f.A1, 1)},
        {f.Msum, f.Msum},
    };
    for (const auto& [M, N] : pairs) {
        HomModule h = hom_module(M, N);
        for (const auto& g : h.gen_maps) CHECK(ModuleMap::try_make(M, N, g).has_value());

        // relation columns evaluate to the zero homomorphism
        const auto& rel = h.module.presentation();
        for (std::size_t j = 0; j < rel.ncols(); ++j) {
            for (std::size_t i = 0; i < M.ngens(); ++i) {
                Vec image(N.ngens(), Poly::zero(N.ring()->ambient()));
                for (std::size_t t = 0; t < h.gen_maps.size(); ++t)
                    for (std::size_t k = 0; k < N.ngens(); ++k)
                        image[k] = image[k] + rel.at(t, j) * h.gen_maps[t].at(k, i);
                CHECK(N.relations().contains(image));
            }
        }

        // independence: a generator map is the zero homomorphism exactly when
        // its coordinate vector already lies in the relations
        for (std::size_t t = 0; t < h.gen_maps.size(); ++t) {
            bool zero_map = true;
            for (std::size_t i = 0; i < M.ngens() && zero_map; ++i) {
                Vec col = h.gen_maps[t].column(i);
                if (!N.relations().contains(col)) zero_map = false;
            }
            Vec unit(h.gen_maps.size(), Poly::zero(M.ring()->ambient()));
            unit[t] = Poly::constant(M.ring()->ambient(), 1);
            CHECK(zero_map == h.module.relations().contains(unit));
        }
    }
}

TEST_CASE("dual and double dual") {
    testutil::Fix f = testutil::fix();

    // free modules are reflexive with the identity as canonical map
    FPModule free2 = FPModule::free_module(f.Axy, 2);
    ModuleMap dd = double_dual_map(free2);
    CHECK(dd.target().is_free_presentation());
    CHECK(dd.target().ngens() == 2);
    CHECK(dd.matrix() == PolyMatrix::identity(f.Axy, 2));

    // the torsion example is torsionless: M1 -> M1** is an isomorphism
    ModuleMap dd1 = double_dual_map(f.M1);
    CHECK(dd1.is_surjective());
    CHECK(dd1.target().same_presentation(f.M1));  // both are coker([x])
    CHECK(iso_via_mutual_surjections(f.M1, dd1.target(), dd1.matrix(),
                                     PolyMatrix::identity(f.A1, 1)));

    // Hom into a module with relations: Hom(A^2, A/(x)) over QQ[x]
    FPModule amodx = FPModule::quotient_by_ideal(Ideal::make(f.Ax, {P(f.Ax, "x")}));
    HomModule hq = hom_module(FPModule::free_module(f.Ax, 2), amodx);
    REQUIRE(hq.gen_maps.size() == 2);
    PolyMatrix expected(f.Ax, 2, 2);
    expected.set(0, 0, P(f.Ax, "x"));
    expected.set(1, 1, P(f.Ax, "x"));
    CHECK(hq.module.presentation() == expected);

    // M = A + A/(x): the bidual is free of rank 1, the map is the projection (1, 0)
    ModuleMap dds = double_dual_map(f.Msum);
    CHECK(dds.target().minimized().is_free_presentation());
    REQUIRE(dds.matrix().nrows() == 1);
    CHECK(dds.matrix().at(0, 0).str() == "1");
    CHECK(dds.matrix().at(0, 1).is_zero());
    CHECK(dds.is_surjective());
}

TEST_CASE("torsionless quotient: worked examples") {
    testutil::Fix f = testutil::fix();

    // free module: unchanged
    FPModule free2 = FPModule::free_module(f.Axy, 2);
    Torsionless t0 = torsionless_quotient(free2);
    CHECK(t0.module.is_free_presentation());
    CHECK(t0.module.ngens() == 2);

    // torsion dies: A + A/(x) -> A
    Torsionless ts = torsionless_quotient(f.Msum);
    FPModule mini = ts.module.minimized();
    CHECK(mini.ngens() == 1);
    CHECK(mini.is_free_presentation());
    CHECK(ts.surjection.is_surjective());

    // the running example is already torsionless: identical presentation
    Torsionless t1 = torsionless_quotient(f.M1);
    CHECK(t1.module.same_presentation(f.M1));

    // idempotence
    Torsionless twice = torsionless_quotient(ts.module);
    CHECK(twice.module.minimized().same_presentation(ts.module.minimized()));
}

TEST_CASE("composite through the versal free module is injective on the quotient") {
    testutil::Fix f = testutil::fix();
    for (const FPModule& M : {f.M1, f.Mxy, f.Msum}) {
        HomModule D = dual(M);
        Torsionless tl = torsionless_quotient(M);
        // M^tl embeds into A^r: the relations of M^tl are exactly the kernel
        PolyMatrix v(M.ring(), D.gen_maps.size(), M.ngens());
        for (std::size_t k = 0; k < D.gen_maps.size(); ++k)
            for (std::size_t i = 0; i < M.ngens(); ++i) v.set(k, i, D.gen_maps[k].at(0, i));
        Submodule ker = kernel_of_free_map(v);
        for (const auto& g : ker.gens()) CHECK(tl.module.relations().contains(g));
        for (const auto& c : tl.module.presentation().columns()) CHECK(ker.contains(c));
    }
}

TEST_CASE("torsionless via flat base change agrees with the double-dual route") {
    testutil::Fix f = testutil::fix();

    RingMap loc = testutil::localize_at_x(f.Axy);
    FPModule via = torsionless_via_flat(f.Mxy, loc, false);
    FPModule direct = torsionless_quotient(f.Mxy).module;
    CHECK(iso_via_mutual_surjections(via, direct, PolyMatrix::identity(f.Axy, via.ngens()),
                                     PolyMatrix::identity(f.Axy, via.ngens())));

    RingMap locx = testutil::localize_qq_x(f.Ax);
    FPModule via2 = torsionless_via_flat(f.Msum, locx, false);
    FPModule direct2 = torsionless_quotient(f.Msum).module;
    CHECK(iso_via_mutual_surjections(via2, direct2, PolyMatrix::identity(f.Ax, 2),
                                     PolyMatrix::identity(f.Ax, 2)));
    CHECK(via2.minimized().is_free_presentation());

    // free module: unchanged
    FPModule via3 = torsionless_via_flat(FPModule::free_module(f.Axy, 2), loc, false);
    CHECK(via3.is_free_presentation());

    // non-injective base change is rejected
    auto Rxy = f.Axy->ambient();
    auto quot = AffineRing::make(Rxy, {P(Rxy, "x")});
    RingMap bad = RingMap::make(f.Axy, quot, {P(Rxy, "x"), P(Rxy, "y")});
    CHECK_THROWS_AS(torsionless_via_flat(f.Mxy, bad, true), NonInjectiveBaseChange);
    // unrecognized, unasserted flatness is rejected
    CHECK_THROWS_AS(torsionless_via_flat(f.Mxy, RingMap::identity(f.Axy), false), Error);
}

TEST_CASE("principal localization shape recognition") {
    testutil::Fix f = testutil::fix();
    CHECK(is_principal_localization(testutil::localize_at_x(f.Axy)));
    CHECK(is_principal_localization(testutil::localize_qq_x(f.Ax)));
    CHECK(!is_principal_localization(RingMap::identity(f.Axy)));
    CHECK(!is_principal_localization(testutil::a1_to_b(f)));
}

TEST_CASE("base change: worked examples") {
    testutil::Fix f = testutil::fix();

    // the torsion module extends to B/(x)
    RingMap ab = testutil::a1_to_b(f);
    FPModule mb = base_change(f.M1, ab);
    CHECK(mb.presentation().str() == "[[x]]");

    // identity is neutral
    FPModule same = base_change(f.Mxy, RingMap::identity(f.Axy));
    CHECK(same.same_presentation(f.Mxy));

    // restriction to the line y = 0 splits off torsion
    auto Rxy = f.Axy->ambient();
    auto line = AffineRing::make(Rxy, {P(Rxy, "y")});
    RingMap to_line = RingMap::make(f.Axy, line, {P(Rxy, "x"), P(Rxy, "y")});
    FPModule ml = base_change(f.Mxy, to_line);
    REQUIRE(ml.presentation().ncols() == 1);
    CHECK(ml.presentation().at(0, 0).is_zero());
    CHECK(ml.presentation().at(1, 0).str() == "-x");

    // composition of base changes matches the composed map, via a genuine chain
    // QQ[x,y] -> QQ[x,y]/(y) -> (QQ[x,y]/(y))[w : x*w = 1]
    auto Rw = PolyRing::make(Field{0}, {"x", "y", "w"});
    auto line_loc = AffineRing::make(Rw, {P(Rw, "y"), P(Rw, "x*w - 1")});
    RingMap second = RingMap::make(line, line_loc, {P(Rw, "x"), P(Rw, "y")});
    FPModule two_step = base_change(base_change(f.Mxy, to_line), second);
    FPModule one_step = base_change(f.Mxy, compose(second, to_line));
    CHECK(two_step.same_presentation(one_step));
}

TEST_CASE("exterior powers") {
    testutil::Fix f = testutil::fix();

    FPModule w1 = exterior_power(f.Mxy, 1);
    CHECK(w1.same_presentation(f.Mxy));

    FPModule w2 = exterior_power(FPModule::free_module(f.Axy, 3), 2);
    CHECK(w2.is_free_presentation());
    CHECK(w2.ngens() == 3);

    FPModule ws = exterior_power(f.Msum, 2);
    REQUIRE(ws.ngens() == 1);
    REQUIRE(ws.presentation().ncols() == 1);
    CHECK(ws.presentation().at(0, 0).str() == "-x");

    // ranks: wedge^d of free rank n has rank C(n, d)
    for (unsigned n = 0; n <= 4; ++n) {
        FPModule fr = FPModule::free_module(f.Axy, n);
        unsigned binom = 1;
        for (unsigned d = 0; d <= n; ++d) {
            FPModule w = exterior_power(fr, d);
            CHECK(w.is_free_presentation());
            CHECK(w.ngens() == binom);
            binom = binom * (n - d) / (d + 1);
        }
        CHECK(exterior_power(fr, n + 1).ngens() == 0);
    }
}

TEST_CASE("annihilator: worked examples") {
    testutil::Fix f = testutil::fix();

    CHECK(annihilator(FPModule::free_module(f.Axy, 1)).is_zero());

    FPModule a1modx = FPModule::quotient_by_ideal(Ideal::make(f.A1, {P(f.A1, "x")}));
    CHECK(annihilator(a1modx).str() == "(x)");

    CHECK(annihilator(FPModule::zero_module(f.Axy)).is_unit());
}

TEST_CASE("associated prime membership") {
    testutil::Fix f = testutil::fix();

    Ideal px = Ideal::make(f.A1, {P(f.A1, "x")});
    CHECK(ass_membership(px, FPModule::free_module(f.A1, 1)));

    Ideal pxy = Ideal::make(f.Axy, {P(f.Axy, "x"), P(f.Axy, "y")});
    CHECK(!ass_membership(pxy, FPModule::free_module(f.Axy, 1)));

    auto Rxy = f.Axy->ambient();
    auto Across = AffineRing::make(Rxy, {P(Rxy, "x*y")});
    FPModule cross = FPModule::free_module(Across, 1);
    CHECK(ass_membership(Ideal::make(Across, {P(Rxy, "x")}), cross));
    CHECK(ass_membership(Ideal::make(Across, {P(Rxy, "y")}), cross));

    CHECK_THROWS_AS(ass_membership(Ideal::unit(f.Axy), FPModule::free_module(f.Axy, 1)),
                    UnitIdealError);
}

TEST_CASE("zero module edge cases across operations") {
    testutil::Fix f = testutil::fix();
    FPModule zero = FPModule::zero_module(f.Axy);
    CHECK(zero.is_zero());
    CHECK(dual(zero).module.is_zero());
    CHECK(torsionless_quotient(zero).module.is_zero());
    CHECK(exterior_power(zero, 1).is_zero());
    CHECK(base_change(zero, RingMap::identity(f.Axy)).is_zero());
}
