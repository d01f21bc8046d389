#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lkd/cohomology.hpp"
#include "lkd/duality.hpp"
#include "test_util.hpp"

using namespace lkd;
using lkd::testing::random_complex;
using lkd::testing::random_invertible;
using lkd::testing::random_matrix;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

TwoTermData data(const FieldSpec& f, std::size_t v, std::size_t w, Matrix m) { return {f, v, w, std::move(m)}; }

// Conjugate every component of a finite module over the base field by a random basis change.
DgModule rebased(const DgModule& m, const Window& w, std::mt19937_64& rng) {
    std::map<BiDegree, Matrix> change;
    for (BiDegree x : w.cells())
        if (m.dim(x) != 0) change.emplace(x, random_invertible(m.field(), m.dim(x), rng));
    FiniteModuleBuilder b(m.field(), m.algebra(), m.name());
    for (const auto& [x, p] : change) b.set_dim(x, p.rows());
    for (const auto& [x, p] : change) {
        auto up = change.find(x + kDiffDegree);
        if (up == change.end()) continue;
        Matrix inv = *solve(p, Matrix::identity(m.field(), p.rows()));
        b.set_d(x, up->second * m.d(x) * inv);
    }
    return b.build();
}

long euler(const CohomologyTable& t, long j) {
    long s = 0;
    for (const auto& [x, n] : t.cells)
        if (x.j == j) s += sign_of(x.i) * static_cast<long>(n);
    return s;
}

}  // namespace

TEST_CASE("classical Koszul complex of rank 1") {
    KoszulComplex k = koszul_classical(Q, 1, 1);
    CHECK(cohomology_dim(k.module, {0, 0}) == 1);
    CHECK(cohomology_dim(k.module, {-1, 2}) == 0);
    FiniteModuleBuilder zero(Q, trivial_algebra(Q), "0");
    CHECK(cohomology_dim(zero.build(), {3, -1}) == 0);
}

TEST_CASE("K1 table on the reference window") {
    std::mt19937_64 rng(1);
    KoszulDuality k(data(Q, 1, 1, random_matrix(Q, 1, 1, rng)));
    CohomologyTable t = cohomology_table(k.K1(), {-2, 6, -12, 2});
    CHECK(t.cells == std::map<BiDegree, std::size_t>{{{0, 0}, 1}});
    CHECK(t.tsv() == "0\t0\t1\n");
    CHECK(t.json() == R"({"window":{"i":[-2,6],"j":[-12,2]},"cells":[{"i":0,"j":0,"dim":1}]})");
}

TEST_CASE("zero differential: cohomology equals dimensions") {
    SymAlgebra t = build_T(data(F3, 2, 2, Matrix(F3, 2, 2)));
    Window w{-3, 1, -2, 10};
    CHECK(cohomology_table(t.module(), w) == dimension_table(t.module(), w));
}

TEST_CASE("table of a shift is the reindexed table") {
    std::mt19937_64 rng(2);
    SymAlgebra t = build_T(data(Q, 2, 1, random_matrix(Q, 1, 2, rng)));
    Window big{-10, 10, -10, 20};
    Window w{-4, 4, -4, 10};
    CohomologyTable base = cohomology_table(t.module(), big);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) CHECK(cohomology_table(shift(t.module(), a, b), w) == shift_table(base, a, b, w));
}

TEST_CASE("quasi-isomorphism examples") {
    std::mt19937_64 rng(3);
    KoszulDuality k(data(F2, 1, 2, random_matrix(F2, 2, 1, rng)));
    Window w{-4, 4, -8, 8};
    CHECK(is_quasi_iso(ChainMap::identity(k.T().module()), w).ok);
    CHECK(is_quasi_iso(k.augmentation(k.K1()), w).ok);
    DgModule o = unit_module(F2, k.S().signature());
    ChainMap zero(o, o, {0, 0}, "0", [&](BiDegree x) { return Matrix(F2, o.dim(x), o.dim(x)); });
    CheckReport r = is_quasi_iso(zero, w);
    CHECK_FALSE(r.ok);
    CHECK(r.cell == BiDegree{0, 0});
}

TEST_CASE("hilbert series formatting") {
    Window w{-2, 2, -2, 8};
    CHECK(hilbert_series({w, {{{0, 0}, 1}}}) == "1");
    CHECK(hilbert_series({w, {{{0, 0}, 1}, {{-1, 2}, 1}}}) == "q^-1 t^2 + 1");
    CHECK(hilbert_series({w, {}}) == "0");
    CHECK(hilbert_series({w, {{{1, -2}, 3}, {{2, 1}, 1}}}) == "3 q t^-2 + q^2 t");
    SymAlgebra t = build_T(data(Q, 0, 1, Matrix(Q, 1, 0)));
    CHECK(hilbert_series(cohomology_table(t.module(), {-2, 2, -1, 4})) == "1 + t^2 + t^4");
}

TEST_CASE("Euler characteristic per internal degree") {
    std::mt19937_64 rng(4);
    for (const FieldSpec& f : {Q, F2, F3}) {
        SymAlgebra t = build_T(data(f, 3, 2, random_matrix(f, 2, 3, rng)));
        Window w{-4, 0, 0, 10};
        CohomologyTable d = dimension_table(t.module(), w);
        CohomologyTable h = cohomology_table(t.module(), w);
        for (long j = w.jmin; j <= w.jmax; ++j) CHECK(euler(d, j) == euler(h, j));
    }
}

TEST_CASE("cohomology is invariant under change of basis") {
    std::mt19937_64 rng(5);
    for (const FieldSpec& f : {Q, F2, F3}) {
        for (int n = 0; n < 10; ++n) {
            auto c = random_complex(f, -2, 3, 0, rng);
            Window w{-3, 4, 0, 0};
            CohomologyTable h = cohomology_table(c.module, w);
            CHECK(h.cells == c.h);
            CHECK(cohomology_table(rebased(c.module, w, rng), w) == h);
        }
    }
}

TEST_CASE("quasi-isomorphism agrees with acyclicity of the cone") {
    std::mt19937_64 rng(6);
    Window w{-3, 4, 0, 0};
    Window cw{-4, 4, 0, 0};
    std::size_t seen_true = 0;
    std::size_t seen_false = 0;
    for (const FieldSpec& f : {Q, F2, F3}) {
        for (int n = 0; n < 40; ++n) {
            auto c = random_complex(f, -2, 3, 0, rng);
            const DgModule& s = c.module;
            // random endomorphisms of the form a.id + (d k + k d) with k of degree -1
            std::map<BiDegree, Matrix> homotopy;
            for (BiDegree x : w.cells()) homotopy.emplace(x, random_matrix(f, s.dim(x - kDiffDegree), s.dim(x), rng));
            long a = static_cast<long>(rng() % 3);
            ChainMap h(s, s, {0, 0}, "h", [&, a](BiDegree x) {
                Matrix out = Matrix::identity(f, s.dim(x)).scaled(a);
                auto k0 = homotopy.find(x);
                auto k1 = homotopy.find(x + kDiffDegree);
                if (k0 != homotopy.end()) out = out + s.d(x - kDiffDegree) * k0->second;
                if (k1 != homotopy.end()) out = out + k1->second * s.d(x);
                return out;
            });
            REQUIRE(check_chain_map(h, w).ok);
            bool qi = is_quasi_iso(h, w).ok;
            DgModule cone = mapping_cone(h);
            REQUIRE(check_dg_axioms(cone, cw).ok);
            bool acyclic = cohomology_table(cone, cw).cells.empty();
            CHECK(qi == acyclic);
            (qi ? seen_true : seen_false) += 1;
        }
    }
    CHECK(seen_true > 0);
    CHECK(seen_false > 0);
}
