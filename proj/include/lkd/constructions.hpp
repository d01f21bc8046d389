#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lkd/module.hpp"

namespace lkd {

/// Builder for modules with finitely many nonzero components. Unset blocks are zero.
class FiniteModuleBuilder {
public:
    FiniteModuleBuilder(FieldSpec field, AlgebraPtr algebra, std::string name);

    void set_dim(BiDegree d, std::size_t n);
    void set_d(BiDegree d, Matrix m);
    void set_action(std::size_t g, BiDegree d, Matrix m);
    DgModule build() const;

private:
    FieldSpec field_;
    AlgebraPtr algebra_;
    std::string name_;
    std::map<BiDegree, std::size_t> dims_;
    std::map<BiDegree, Matrix> diffs_;
    std::map<std::pair<std::size_t, BiDegree>, Matrix> actions_;
};

/// The field in bidegree (0,0), every generator acting by zero.
DgModule unit_module(const FieldSpec& field, AlgebraPtr algebra);

/// The same module with the algebra forgotten.
DgModule restrict_to_base(const DgModule& m);

DgModule dual(const DgModule& m);
/// (M[n]<k>)^i_j = M^{i+n}_{j-k}; differential times (-1)^n, generator g of degree (a,b) times (-1)^{n a}.
DgModule shift(const DgModule& m, long n, long k);
/// Left-slow basis; the algebra of the left factor acts when it has generators, else the right one.
DgModule tensor(const DgModule& l, const DgModule& r);
DgModule truncate_geq(const DgModule& m, long n);
/// The kernel of M -> truncate_geq(M, n+1): M^i for i <= n and d(M^n) in degree n+1.
DgModule truncate_leq(const DgModule& m, long n);

struct Summand {
    BiDegree left;
    BiDegree right;
    std::size_t offset = 0;
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;
};

struct TensorLayout {
    std::vector<Summand> summands;
    std::size_t total = 0;

    /// Index of the summand with the given left bidegree.
    std::optional<std::size_t> find(BiDegree left) const;
};

/// Summands of (l (x) r)(x) ordered by the left bidegree, i then j.
/// Throws std::domain_error when the regions do not bound the enumeration.
TensorLayout tensor_layout(const DgModule& l, const DgModule& r, BiDegree x);

/// A pair (x, y) contributes (-1)^{|c|} R_x(c) (x) y.n to the twisted differential,
/// where R_x is right multiplication by x. Degrees of x and y must add to (1,0).
struct TwistPair {
    std::size_t left_gen;
    std::size_t right_gen;
    /// 2 for d3, 3 for d4.
    std::size_t part;
};

/// C (x) N with d = d1 + d2 + d3 + d4: d1 = d_C (x) 1, d2 = (-1)^{|c|} 1 (x) d_N, and d3, d4 from
/// the pairs. C must be graded-commutative; it acts on the left factor.
DgModule twisted_tensor(const DgModule& c, const DgModule& n, std::vector<TwistPair> pairs, std::string name);

/// M -> dual(dual(M)), m |-> (f |-> (-1)^{|f||m|} f(m)), and its inverse.
ChainMap biduality(const DgModule& m);
ChainMap biduality_inverse(const DgModule& m);

/// dual(M) (x) dual(N) -> dual(M (x) N), f (x) g |-> (m (x) n |-> (-1)^{|m||g|} f(m) g(n)).
ChainMap dual_pairing(const DgModule& m, const DgModule& n);

}  // namespace lkd
