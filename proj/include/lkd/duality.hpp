#pragma once

#include "lkd/symalg.hpp"

namespace lkd {

enum class Functor { A, B };

/// The duality functors between modules over S and modules over T for one two-term complex.
class KoszulDuality {
public:
    explicit KoszulDuality(TwoTermData data);

    const TwoTermData& data() const { return data_; }
    const SymAlgebra& T() const { return t_; }
    const SymAlgebra& R() const { return r_; }
    const SymAlgebra& S() const { return s_; }

    /// A(M) = T (x) dual(M) for M over S with a searrow-bounded region; parts d1..d4 recorded.
    DgModule functor_A(const DgModule& m) const;
    /// B(N) = S (x) dual(N) for N over T with an nwarrow-bounded region.
    DgModule functor_B(const DgModule& n) const;
    /// For h: M -> M' of degree (0,0), the map F(M') -> F(M) with blocks 1 (x) h^T.
    ChainMap functor_on_map(const ChainMap& h, Functor which) const;

    /// K1 = B(T) and K2 = A(S).
    DgModule K1() const;
    DgModule K2() const;
    /// Projection onto the (0,0) component.
    ChainMap augmentation(const DgModule& k) const;

    /// B(A(P)) -> P, s (x) f (x) p |-> f(1_T) s.p
    ChainMap phi(const DgModule& p) const;
    /// P -> B(A(P)), p |-> 1_S (x) e_T (x) p
    ChainMap psi(const DgModule& p) const;
    /// A(B(Q)) -> Q and Q -> A(B(Q)) for Q over T, by the mirrored formulas.
    ChainMap phi_mirror(const DgModule& q) const;
    ChainMap psi_mirror(const DgModule& q) const;

    /// kappa(N) = xi(B(N)), a module over R.
    DgModule kappa(const DgModule& n) const;
    ChainMap kappa_on_map(const ChainMap& h) const;

private:
    TwoTermData data_;
    SymAlgebra t_;
    SymAlgebra r_;
    SymAlgebra s_;
};

/// xi(M)^i_j = M^{i-j}_j
DgModule regrade_xi(const DgModule& m);

/// The degree law of kappa: kappa(M[n]<m>) = kappa(M)[-n+m]<-m> with this library's shift convention.
BiDegree kappa_shift(long n, long m);

}  // namespace lkd
