#pragma once

#include "lkd/cohomology.hpp"
#include "lkd/symalg.hpp"

namespace lkd {

enum class Side { Primal, Dual };

/// Subspaces F1, F2 of E = k^E_dim, each given by independent basis rows in E coordinates.
struct SubspaceProblem {
    FieldSpec field;
    std::size_t E_dim = 0;
    Matrix F1;
    Matrix F2;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Canonical echelon basis (rows) of the annihilator of the row space of F in the dual space.
Matrix orthogonal(const FieldSpec& field, std::size_t E_dim, const Matrix& F);

/// V = F1^perp at (-1,2), W = F2^dual at (0,2), f = restriction to F2 of the inclusion F1^perp -> E^dual.
TwoTermData build_X(const SubspaceProblem& p);
/// V = F2 at (-1,-2), W = E/F1 at (0,-2), f = -(projection after inclusion). E/F1 has the basis of
/// standard vectors on the non-pivot columns of F1's reduced echelon form.
TwoTermData build_Y(const SubspaceProblem& p);
/// (E^dual, F2^perp, F1^perp): build_X of it describes the same two-term complex as build_Y(p).
SubspaceProblem dual_problem(const SubspaceProblem& p);

/// Cohomology of Sym(build_X) for the problem or its dual.
CohomologyTable derived_intersection_table(const SubspaceProblem& p, Side side, const Window& w);

/// Closed form from subspace ranks: with k = dim ker f and c = dim coker f,
/// H^{-a}_{2a+2m} = C(k,a) C(c+m-1,m).
CohomologyTable tor_oracle(const SubspaceProblem& p, Side side, const Window& w);

}  // namespace lkd
