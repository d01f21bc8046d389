#pragma once

#include <cstdint>
#include <random>

#include "lkd/symalg.hpp"

namespace lkd {

/// Seeded generators used by the randomized commands. All draws are rng() % n on a
/// std::mt19937_64, so transcripts do not depend on the standard library's distributions.
using Rng = std::mt19937_64;

std::size_t draw(Rng& rng, std::size_t n);
/// Entries uniform in [-spread, spread], reduced into the field.
Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng, long spread = 2);
TwoTermData random_two_term(const FieldSpec& f, std::size_t V_dim, std::size_t W_dim, Rng& rng);

/// (A (x) L) / (monomials of weight >= k) for a complex L over the base field: a finite module over A.
DgModule weight_quotient(const SymAlgebra& a, const DgModule& l, unsigned k, const std::string& name);

struct RandomModuleOptions {
    std::size_t max_generators = 3;
    std::size_t max_component_dim = 2;
    unsigned max_weight = 3;
};

/// A random complex L of total dimension <= max_generators over the base field, placed near (0,0)
/// with even internal degrees, and the quotient of A (x) L by a random weight. Redrawn until every
/// component has dimension <= max_component_dim.
DgModule random_quotient_module(const SymAlgebra& a, Rng& rng, const RandomModuleOptions& opts = {});

}  // namespace lkd
