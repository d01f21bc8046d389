#pragma once

#include <random>

#include "lkd/constructions.hpp"

namespace lkd::testing {

inline Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng, long spread = 2) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long>(rng() % (2 * spread + 1)) - spread);
    return m;
}

inline Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

/// A complex over the base field in one internal degree: a direct sum of isomorphism pieces
/// k -> k and lone copies of k, conjugated by random changes of basis. Returns the module and
/// its cohomology dimensions by construction.
struct RandomComplex {
    DgModule module;
    std::map<BiDegree, std::size_t> h;
};

inline RandomComplex random_complex(const FieldSpec& f, long imin, long imax, long j, std::mt19937_64& rng) {
    std::map<long, std::size_t> lone;
    std::map<long, std::size_t> pieces;  // k -> k from degree i to i+1
    for (long i = imin; i <= imax; ++i) {
        lone[i] = rng() % 2;
        if (i < imax) pieces[i] = rng() % 2;
    }
    std::map<long, std::size_t> dims;
    for (long i = imin; i <= imax; ++i) dims[i] = lone[i] + pieces[i] + (i > imin ? pieces[i - 1] : 0);
    // basis order per degree: lone, pieces starting here, pieces ending here
    std::map<long, Matrix> change;
    for (long i = imin; i <= imax; ++i) change.emplace(i, random_invertible(f, dims[i], rng));
    FiniteModuleBuilder b(f, trivial_algebra(f), "C");
    RandomComplex out;
    for (long i = imin; i <= imax; ++i) {
        b.set_dim({i, j}, dims[i]);
        if (lone[i] != 0) out.h[{i, j}] = lone[i];
    }
    for (long i = imin; i < imax; ++i) {
        Matrix d(f, dims[i + 1], dims[i]);
        if (pieces[i] != 0) d.set(lone[i + 1] + pieces[i + 1], lone[i], 1L);
        Matrix inv = *solve(change.at(i), Matrix::identity(f, dims[i]));
        b.set_d({i, j}, change.at(i + 1) * d * inv);
    }
    out.module = b.build();
    return out;
}

}  // namespace lkd::testing
