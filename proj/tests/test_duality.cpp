#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lkd/cohomology.hpp"
#include "lkd/duality.hpp"
#include "lkd/random.hpp"

using namespace lkd;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const std::vector<FieldSpec> kFields{Q, F2, F3};

const Window kWin{-6, 6, -12, 12};

void require_ok(const CheckReport& r) {
    INFO(r.summary());
    REQUIRE(r.ok);
}

}  // namespace

TEST_CASE("A of the unit is T and B of the unit is S") {
    std::mt19937_64 rng(11);
    for (const FieldSpec& f : kFields) {
        KoszulDuality k(random_two_term(f, 2, 1, rng));
        DgModule a = k.functor_A(unit_module(f, k.S().signature()));
        DgModule b = k.functor_B(unit_module(f, k.T().signature()));
        CHECK(dimension_table(a, kWin) == dimension_table(k.T().module(), kWin));
        CHECK(dimension_table(b, kWin) == dimension_table(k.S().module(), kWin));
        require_ok(check_dg_axioms(a, kWin));
        require_ok(check_dg_axioms(b, kWin));
    }
}

TEST_CASE("K1 and K2 resolve the unit") {
    std::mt19937_64 rng(12);
    for (const FieldSpec& f : kFields) {
        for (std::size_t v = 0; v <= 2; ++v) {
            for (std::size_t w = 0; w <= 2; ++w) {
                KoszulDuality k(random_two_term(f, v, w, rng));
                for (const DgModule& m : {k.K1(), k.K2()}) {
                    CAPTURE(f.name());
                    CAPTURE(m.name());
                    CAPTURE(v);
                    CAPTURE(w);
                    require_ok(check_dg_axioms(m, kWin));
                    require_ok(check_differential_parts(m, kWin));
                    CohomologyTable h = cohomology_table(m, kWin);
                    CHECK(h.cells == std::map<BiDegree, std::size_t>{{{0, 0}, 1}});
                    ChainMap e = k.augmentation(m);
                    require_ok(check_chain_map(e, kWin, true));
                    require_ok(is_quasi_iso(e, kWin));
                }
            }
        }
    }
}

TEST_CASE("functor on maps: identity, scalars and composition") {
    std::mt19937_64 rng(13);
    KoszulDuality k(random_two_term(F3, 1, 2, rng));
    DgModule s = k.S().module();
    ChainMap id = ChainMap::identity(s);
    require_ok(check_maps_equal(k.functor_on_map(id, Functor::A), ChainMap::identity(k.functor_A(s)), kWin));
    ChainMap two(s, s, {0, 0}, "2", [&](BiDegree x) { return Matrix::identity(F3, s.dim(x)).scaled(2); });
    ChainMap a2 = k.functor_on_map(two, Functor::A);
    require_ok(check_chain_map(a2, kWin, true));
    ChainMap four = ChainMap::compose(two, two);
    require_ok(check_maps_equal(k.functor_on_map(four, Functor::A),
                                ChainMap::compose(a2, k.functor_on_map(two, Functor::A)), kWin));
    DgModule t = k.T().module();
    ChainMap two_t(t, t, {0, 0}, "2", [&](BiDegree x) { return Matrix::identity(F3, t.dim(x)).scaled(2); });
    require_ok(check_chain_map(k.functor_on_map(two_t, Functor::B), kWin, true));
}

TEST_CASE("functor on the augmentation of T reverses direction") {
    std::mt19937_64 rng(14);
    KoszulDuality k(random_two_term(Q, 2, 1, rng));
    DgModule t = k.T().module();
    DgModule o = unit_module(Q, k.T().signature());
    ChainMap eps(t, o, {0, 0}, "eps", [&](BiDegree x) {
        Matrix m(Q, o.dim(x), t.dim(x));
        if (x == BiDegree{0, 0}) m.set(0, 0, 1L);
        return m;
    });
    require_ok(check_chain_map(eps, kWin, true));
    ChainMap b = k.functor_on_map(eps, Functor::B);
    CHECK(b.source().name() == "B(" + o.name() + ")");
    require_ok(check_chain_map(b, kWin, true));
}

TEST_CASE("round trip on the unit and on S") {
    std::mt19937_64 rng(15);
    for (const FieldSpec& f : kFields) {
        KoszulDuality k(random_two_term(f, 1, 1, rng));
        for (const DgModule& p : {unit_module(f, k.S().signature()), k.S().module()}) {
            CAPTURE(f.name());
            CAPTURE(p.name());
            ChainMap phi = k.phi(p);
            ChainMap psi = k.psi(p);
            require_ok(check_chain_map(phi, kWin, true));
            require_ok(check_chain_map(psi, kWin, false));
            require_ok(check_maps_equal(ChainMap::compose(phi, psi), ChainMap::identity(p), kWin));
            require_ok(is_quasi_iso(phi, kWin));
        }
    }
}

TEST_CASE("mirrored round trip on the unit and on T") {
    std::mt19937_64 rng(16);
    for (const FieldSpec& f : kFields) {
        KoszulDuality k(random_two_term(f, 1, 1, rng));
        for (const DgModule& q : {unit_module(f, k.T().signature()), k.T().module()}) {
            CAPTURE(f.name());
            CAPTURE(q.name());
            ChainMap phi = k.phi_mirror(q);
            ChainMap psi = k.psi_mirror(q);
            require_ok(check_chain_map(phi, kWin, true));
            require_ok(check_chain_map(psi, kWin, false));
            require_ok(check_maps_equal(ChainMap::compose(phi, psi), ChainMap::identity(q), kWin));
            require_ok(is_quasi_iso(phi, kWin));
        }
    }
}

TEST_CASE("kappa of T and of the unit") {
    std::mt19937_64 rng(17);
    for (const FieldSpec& f : kFields) {
        KoszulDuality k(random_two_term(f, 2, 2, rng));
        DgModule kt = k.kappa(k.T().module());
        require_ok(check_dg_axioms(kt, kWin));
        CHECK(cohomology_table(kt, kWin).cells == std::map<BiDegree, std::size_t>{{{0, 0}, 1}});
        DgModule ko = k.kappa(unit_module(f, k.T().signature()));
        CHECK(dimension_table(ko, kWin) == dimension_table(k.R().module(), kWin));
        CHECK(cohomology_table(ko, kWin) == cohomology_table(k.R().module(), kWin));
        CHECK(dimension_table(regrade_xi(k.S().module()), kWin) == dimension_table(k.R().module(), kWin));
    }
}

TEST_CASE("kappa degree law") {
    std::mt19937_64 rng(18);
    KoszulDuality k(random_two_term(Q, 1, 1, rng));
    DgModule n = k.T().module();
    const Window big{-14, 14, -20, 20};
    CohomologyTable base = dimension_table(k.kappa(n), big);
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            BiDegree s = kappa_shift(a, b);
            CohomologyTable lhs = dimension_table(k.kappa(shift(n, a, b)), kWin);
            CHECK(lhs == shift_table(base, s.i, s.j, kWin));
        }
    }
}

TEST_CASE("round trip on random quotient modules") {
    Rng rng(19);
    const Window w{-4, 4, -8, 8};
    for (const FieldSpec& f : kFields) {
        for (int n = 0; n < 4; ++n) {
            KoszulDuality k(random_two_term(f, draw(rng, 3), draw(rng, 3), rng));
            DgModule p = random_quotient_module(k.S(), rng);
            DgModule q = random_quotient_module(k.T(), rng);
            CAPTURE(f.name());
            CAPTURE(p.name());
            require_ok(check_dg_axioms(p, w));
            require_ok(check_dg_axioms(q, w));
            ChainMap phi = k.phi(p);
            require_ok(check_chain_map(phi, w, true));
            require_ok(check_chain_map(k.psi(p), w, false));
            require_ok(check_maps_equal(ChainMap::compose(phi, k.psi(p)), ChainMap::identity(p), w));
            require_ok(is_quasi_iso(phi, w));
            ChainMap phi2 = k.phi_mirror(q);
            require_ok(check_chain_map(phi2, w, true));
            require_ok(check_maps_equal(ChainMap::compose(phi2, k.psi_mirror(q)), ChainMap::identity(q), w));
            require_ok(is_quasi_iso(phi2, w));
        }
    }
}
