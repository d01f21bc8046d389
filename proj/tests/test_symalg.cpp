#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lkd/symalg.hpp"
#include "test_util.hpp"

using namespace lkd;
using lkd::testing::random_matrix;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

TwoTermData data(const FieldSpec& f, std::size_t v, std::size_t w, Matrix m) { return {f, v, w, std::move(m)}; }

TwoTermData random_two_term(const FieldSpec& f, std::mt19937_64& rng, std::size_t max_dim = 3) {
    std::size_t v = rng() % (max_dim + 1);
    std::size_t w = rng() % (max_dim + 1);
    return data(f, v, w, random_matrix(f, w, v, rng));
}

std::size_t h_dim(const DgModule& m, BiDegree x) { return m.dim(x) - rank(m.d(x)) - rank(m.d(x - kDiffDegree)); }

unsigned long choose(long n, long k) {
    if (k < 0 || k > n) return 0;
    unsigned long r = 1;
    for (long t = 1; t <= k; ++t) r = r * static_cast<unsigned long>(n - k + t) / static_cast<unsigned long>(t);
    return r;
}

// multiset coefficient: monomials of degree m in n variables
unsigned long multichoose(long n, long m) {
    if (m == 0) return 1;
    if (n == 0) return 0;
    return choose(n + m - 1, m);
}

// Oracle for products: write both monomials as words of generator letters and sort the
// concatenation by adjacent swaps, counting swaps of two odd letters.
SignedMonomial word_product(const SymAlgebra& a, const Monomial& x, const Monomial& y) {
    std::vector<std::size_t> word;  // odd letters as indices, even letters as n_odd + l
    auto push = [&](const Monomial& m) {
        for (std::size_t e : m.exterior) word.push_back(e);
        for (std::size_t l = 0; l < m.symmetric.size(); ++l)
            for (unsigned r = 0; r < m.symmetric[l]; ++r) word.push_back(a.n_odd() + l);
    };
    push(x);
    push(y);
    int sign = 1;
    for (std::size_t pass = 0; pass < word.size(); ++pass)
        for (std::size_t k = 0; k + 1 < word.size(); ++k)
            if (word[k] > word[k + 1]) {
                if (word[k] < a.n_odd() && word[k + 1] < a.n_odd()) sign = -sign;
                std::swap(word[k], word[k + 1]);
            }
    SignedMonomial out;
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
        if (word[k] == word[k + 1] && word[k] < a.n_odd()) return out;
    out.sign = sign;
    out.monomial.symmetric.assign(a.n_even(), 0);
    for (std::size_t l : word) {
        if (l < a.n_odd()) {
            out.monomial.exterior.push_back(l);
        } else {
            out.monomial.symmetric[l - a.n_odd()] += 1;
        }
    }
    return out;
}

// Negates one entry of one differential block of a module.
class Corrupted : public ModuleImpl {
public:
    Corrupted(DgModule m, BiDegree at) : m_(std::move(m)), at_(at) {}
    std::size_t dim(BiDegree x) const override { return m_.dim(x); }
    Matrix differential(BiDegree x) const override {
        Matrix d = m_.d(x);
        if (x == at_) d.set(0, 0, Scalar(-d.at(0, 0).value()));
        return d;
    }
    Matrix action(std::size_t g, BiDegree x) const override { return m_.action(g, x); }

private:
    DgModule m_;
    BiDegree at_;
};

}  // namespace

TEST_CASE("monomial basis examples") {
    SymAlgebra t = build_T(data(Q, 1, 1, Matrix(Q, 1, 1)));
    const auto& b = t.basis({-1, 4});
    REQUIRE(b.size() == 1);
    CHECK(t.label(b[0]) == "v1*w1");
    for (long j = -10; j <= 10; ++j) CHECK(t.basis({-2, j}).empty());
    for (const FieldSpec& f : {Q, F2}) {
        SymAlgebra r = build_R(data(f, 2, 3, Matrix(f, 3, 2)));
        REQUIRE(r.basis({0, 0}).size() == 1);
        CHECK(r.basis({0, 0})[0] == r.unit());
    }
    SymAlgebra s2 = build_S(data(Q, 2, 2, Matrix(Q, 2, 2)));
    const auto& b2 = s2.basis({4, -4});
    // v*^2 monomials: exponent vectors (0,2), (1,1), (2,0)
    REQUIRE(b2.size() == 3);
    CHECK(s2.label(b2[0]) == "v*2^2");
    CHECK(s2.label(b2[2]) == "v*1^2");
}

TEST_CASE("S placement") {
    SymAlgebra s = build_S(data(Q, 1, 1, Matrix(Q, 1, 1)));
    Monomial m{{0}, {1}};
    CHECK(s.degree(m) == BiDegree{3, -4});
    REQUIRE(s.index_of({3, -4}, m).has_value());
}

TEST_CASE("multiplication examples") {
    SymAlgebra t = build_T(data(Q, 2, 1, Matrix(Q, 1, 2)));
    Monomial v1{{0}, {0}};
    CHECK(t.multiply(v1, v1).sign == 0);
    SymAlgebra r = build_R(data(Q, 1, 2, Matrix(Q, 2, 1)));
    Monomial w1{{0}, {0}};
    Monomial w2{{1}, {0}};
    SignedMonomial a = r.multiply(w1, w2);
    SignedMonomial b = r.multiply(w2, w1);
    CHECK(a.monomial == b.monomial);
    CHECK(a.sign == -b.sign);
    Monomial x{{}, {1}};
    SignedMonomial xx = r.multiply(x, x);
    CHECK(xx.sign == 1);
    CHECK(xx.monomial.symmetric[0] == 2);
}

TEST_CASE("products agree with word sorting; associativity and graded commutativity") {
    std::mt19937_64 rng(21);
    SymAlgebra s = build_S(data(Q, 2, 3, Matrix(Q, 3, 2)));
    auto random_monomial = [&] {
        Monomial m;
        for (std::size_t e = 0; e < s.n_odd(); ++e)
            if (rng() % 2) m.exterior.push_back(e);
        for (std::size_t l = 0; l < s.n_even(); ++l) m.symmetric.push_back(static_cast<unsigned>(rng() % 3));
        return m;
    };
    for (int t = 0; t < 300; ++t) {
        Monomial a = random_monomial();
        Monomial b = random_monomial();
        Monomial c = random_monomial();
        SignedMonomial ab = s.multiply(a, b);
        SignedMonomial oracle = word_product(s, a, b);
        CHECK(ab.sign == oracle.sign);
        if (ab.sign != 0) CHECK(ab.monomial == oracle.monomial);
        SignedMonomial ba = s.multiply(b, a);
        long parity = s.degree(a).i * s.degree(b).i;
        CHECK(ab.sign == ba.sign * sign_of(parity));
        SignedMonomial left = ab.sign ? s.multiply(ab.monomial, c) : SignedMonomial{};
        SignedMonomial bc = s.multiply(b, c);
        SignedMonomial right = bc.sign ? s.multiply(a, bc.monomial) : SignedMonomial{};
        CHECK(left.sign * ab.sign == right.sign * bc.sign);
        if (left.sign != 0) CHECK(left.monomial == right.monomial);
    }
}

TEST_CASE("generator actions match multiplication") {
    SymAlgebra t = build_T(data(F3, 2, 2, Matrix::from_rows(F3, {{1, 2}, {0, 1}})));
    const DgModule& m = t.module();
    for (long i = -2; i <= 0; ++i) {
        for (long j = 0; j <= 8; ++j) {
            BiDegree x{i, j};
            for (std::size_t g = 0; g < m.algebra()->gens.size(); ++g) {
                BiDegree y = x + m.algebra()->gens[g].degree;
                Monomial gm = t.unit();
                if (g < t.n_odd()) {
                    gm.exterior.push_back(g);
                } else {
                    gm.symmetric[g - t.n_odd()] = 1;
                }
                const Matrix& a = m.action(g, x);
                for (std::size_t c = 0; c < t.basis(x).size(); ++c) {
                    SignedMonomial p = t.multiply(gm, t.basis(x)[c]);
                    for (std::size_t r = 0; r < a.rows(); ++r) {
                        long expect = (p.sign != 0 && t.basis(y)[r] == p.monomial) ? p.sign : 0;
                        CHECK(a.at(r, c) == Scalar::in_field(F3, mpq_class(expect)));
                    }
                }
            }
        }
    }
}

TEST_CASE("build_T with zero f has zero differential") {
    SymAlgebra t = build_T(data(Q, 2, 2, Matrix(Q, 2, 2)));
    for (BiDegree x : Window{-3, 1, -1, 10}.cells()) {
        CHECK(t.module().d(x).is_zero());
        CHECK(h_dim(t.module(), x) == t.module().dim(x));
    }
}

TEST_CASE("acyclic Koszul factor") {
    SymAlgebra t = build_T(data(Q, 1, 1, Matrix::from_rows(Q, {{1}})));
    for (BiDegree x : Window{-4, 4, -12, 12}.cells()) CHECK(h_dim(t.module(), x) == (x == BiDegree{0, 0} ? 1U : 0U));
}

TEST_CASE("dimension counts") {
    for (std::size_t v = 0; v <= 3; ++v) {
        for (std::size_t w = 0; w <= 3; ++w) {
            TwoTermData d = data(F2, v, w, Matrix(F2, w, v));
            SymAlgebra t = build_T(d);
            SymAlgebra r = build_R(d);
            SymAlgebra s = build_S(d);
            for (long i = 0; i <= 4; ++i) {
                for (long j = 0; j <= 4; ++j) {
                    CHECK(t.module().dim({-i, 2 * i + 2 * j}) == choose(static_cast<long>(v), i) * multichoose(static_cast<long>(w), j));
                    CHECK(r.module().dim({-i, -2 * i - 2 * j}) == choose(static_cast<long>(w), i) * multichoose(static_cast<long>(v), j));
                    CHECK(s.module().dim({i + 2 * j, -2 * i - 2 * j}) == choose(static_cast<long>(w), i) * multichoose(static_cast<long>(v), j));
                }
            }
            // nothing off the lattice of placements
            CHECK(t.module().dim({0, 1}) == 0);
            CHECK(s.module().dim({1, 0}) == 0);
        }
    }
}

TEST_CASE("axioms for T, R, S on random data") {
    std::mt19937_64 rng(31);
    Window w{-5, 7, -10, 10};
    for (const FieldSpec& f : {Q, F2, F3}) {
        for (int t = 0; t < 4; ++t) {
            TwoTermData d = random_two_term(f, rng);
            for (const SymAlgebra& a : {build_T(d), build_R(d), build_S(d)}) {
                CheckReport r = check_dg_axioms(a.module(), w);
                CHECK_MESSAGE(r.ok, a.spec().name << " " << r.summary());
            }
        }
    }
}

TEST_CASE("corrupted T fails next to the flip") {
    SymAlgebra t = build_T(data(Q, 2, 1, Matrix::from_rows(Q, {{1, 1}})));
    BiDegree at{-2, 4};
    REQUIRE(t.module().d(at).rows() == 2);
    DgModule bad(Q, t.signature(), t.module().region(), "T'", std::make_shared<Corrupted>(t.module(), at));
    CheckReport r = check_dg_axioms(bad, Window{-3, 1, 0, 8});
    CHECK_FALSE(r.ok);
    CHECK(r.cell.j == at.j);
    CHECK(std::abs(r.cell.i - at.i) <= 1);
    CHECK(r.identity == "d^2=0");
}

TEST_CASE("classical Koszul complexes") {
    for (const FieldSpec& f : {Q, F2, F3}) {
        for (int variant = 1; variant <= 4; ++variant) {
            CHECK(koszul_classical(f, 0, variant).module.dim({0, 0}) == 1);
            for (std::size_t r = 1; r <= 3; ++r) {
                KoszulComplex k = koszul_classical(f, r, variant);
                long jm = 2 * static_cast<long>(r) + 8;
                Window w{-jm - 4, jm + 4, -jm, jm};
                CheckReport ax = check_dg_axioms(k.module, w);
                CHECK_MESSAGE(ax.ok, ax.summary());
                for (BiDegree x : w.cells()) {
                    CHECK_MESSAGE(h_dim(k.module, x) == (x == BiDegree{0, 0} ? 1U : 0U),
                                  "variant " << variant << " rank " << r << " at " << x.str());
                }
                CHECK(check_chain_map(k.augmentation, w).ok);
            }
        }
    }
}

TEST_CASE("Koszul rank one components") {
    KoszulComplex k = koszul_classical(Q, 1, 1);
    for (long j = -6; j <= 6; ++j) {
        CHECK(k.module.dim({0, 2 * j}) == (j >= 0 ? 1U : 0U));
        CHECK(k.module.dim({-1, 2 * j + 2}) == (j >= 0 ? 1U : 0U));
    }
    KoszulComplex k3 = koszul_classical(Q, 2, 3);
    KoszulComplex k1 = koszul_classical(Q, 2, 1);
    for (BiDegree x : Window{-8, 8, -8, 8}.cells()) CHECK(k3.module.dim(x) == k1.module.dim({x.i - x.j, x.j}));
}
