#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lkd/constructions.hpp"
#include "lkd/module.hpp"

namespace lkd {

/// A two-term complex V --f--> W. f is W_dim x V_dim; column k is the image of the k-th basis vector of V.
struct TwoTermData {
    FieldSpec field;
    std::size_t V_dim = 0;
    std::size_t W_dim = 0;
    Matrix f;

    /// Throws std::invalid_argument on a shape mismatch.
    void validate() const;
};

/// Basis element of a graded-symmetric algebra: an exterior subset of the odd generators
/// and an exponent vector over the even generators.
struct Monomial {
    std::vector<std::size_t> exterior;
    std::vector<unsigned> symmetric;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct SignedMonomial {
    /// -1, 0 or 1; 0 means the product vanishes.
    int sign = 0;
    Monomial monomial;
};

/// Free graded-commutative algebra on odd generators (exterior) placed at one bidegree and
/// even generators (symmetric) at another, with the derivation d(x_e) = sum_l d(l,e) y_l.
struct SymAlgebraSpec {
    FieldSpec field;
    std::string name;
    std::vector<std::string> odd_labels;
    BiDegree odd_degree;
    std::vector<std::string> even_labels;
    BiDegree even_degree;
    /// even x odd
    Matrix d;
};

class SymAlgebra {
public:
    explicit SymAlgebra(SymAlgebraSpec spec);

    const SymAlgebraSpec& spec() const;
    std::size_t n_odd() const { return spec().odd_labels.size(); }
    std::size_t n_even() const { return spec().even_labels.size(); }
    /// The algebra as a module over itself; generators are ordered odd first, then even.
    const DgModule& module() const;
    const AlgebraPtr& signature() const;

    /// Monomials of bidegree d: exterior subsets in lexicographic order, then exponent vectors
    /// in lexicographic order.
    const std::vector<Monomial>& basis(BiDegree d) const;
    std::optional<std::size_t> index_of(BiDegree d, const Monomial& m) const;
    BiDegree degree(const Monomial& m) const;
    Monomial unit() const;
    SignedMonomial multiply(const Monomial& a, const Monomial& b) const;
    std::string label(const Monomial& m) const;

    /// Projection onto bidegree (0,0).
    ChainMap augmentation() const;
    /// Matrix of p |-> c.p from P(d) to P(d + deg c) for a module P over this algebra.
    Matrix act(const Monomial& c, const DgModule& p, BiDegree d) const;

private:
    struct State;
    std::shared_ptr<const State> s_;
};

/// T = Sym(X): V odd at (-1,2), W even at (0,2), d(v_k) = sum_l f(l,k) w_l.
SymAlgebra build_T(const TwoTermData& data);
/// R = Sym(Y): W^ odd at (-1,-2), V^ even at (0,-2), d(w*_l) = -sum_k f(l,k) v*_k.
SymAlgebra build_R(const TwoTermData& data);
/// S = Sym(Y[-2]): W^ odd at (1,-2), V^ even at (2,-2), same differential as R.
SymAlgebra build_S(const TwoTermData& data);

struct KoszulComplex {
    DgModule module;
    /// Projection onto the (0,0) component.
    ChainMap augmentation;
};

/// Variant 1: S(V^<2>) (x) (Lambda(V[-1]<-2>))^ with the contraction differential; 2 is its dual;
/// 3 and 4 regrade 1 and 2 by (i,j) -> (i+j, j).
KoszulComplex koszul_classical(const FieldSpec& field, std::size_t r, int variant);

/// xi(M)^i_j = M^{i-j}_j: pure reindexing; a generator of degree (a,b) acts in degree (a+b,b).
DgModule regrade(const DgModule& m);

}  // namespace lkd
