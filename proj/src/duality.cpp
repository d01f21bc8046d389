#include "lkd/duality.hpp"

#include <stdexcept>

namespace lkd {

namespace {

void require_algebra(const DgModule& m, const SymAlgebra& a, const char* functor) {
    if (!m.algebra()->same_as(*a.signature())) {
        throw std::invalid_argument(std::string(functor) + " expects a module over " + a.spec().name + ", got one over " +
                                    m.algebra()->name);
    }
}

// Pairs for C (x) dual(M) where C is T (sv = true) or S. T has v odd then w even; S has w* odd then v* even.
std::vector<TwistPair> pairs_for(const TwoTermData& d, bool left_is_T) {
    std::vector<TwistPair> out;
    for (std::size_t a = 0; a < d.V_dim; ++a) {
        if (left_is_T) {
            out.push_back({a, d.W_dim + a, 2});
        } else {
            out.push_back({d.W_dim + a, a, 2});
        }
    }
    for (std::size_t b = 0; b < d.W_dim; ++b) {
        if (left_is_T) {
            out.push_back({d.V_dim + b, b, 3});
        } else {
            out.push_back({b, d.V_dim + b, 3});
        }
    }
    return out;
}

ChainMap projection_00(const DgModule& k) {
    const FieldSpec f = k.field();
    if (k.dim({0, 0}) != 1) throw std::logic_error(k.name() + " is not one-dimensional at (0,0)");
    return ChainMap(k, unit_module(f, k.algebra()), {0, 0}, "augmentation",
                    [f](BiDegree) { return Matrix::from_rows(f, {{1}}); });
}

// Evaluation map outer(inner(P)) -> P where inner(P) = innerC (x) dual(P) and
// outer(X) = outerC (x) dual(X): a basis vector c (x) F with F dual to 1 (x) e_m* maps to
// (-1)^{|n|} c.e_m, where n is the bidegree of P carrying e_m.
ChainMap evaluation(const SymAlgebra& outer, const SymAlgebra& inner, const DgModule& p, const DgModule& inner_img,
                    const DgModule& outer_img, const std::string& name) {
    DgModule dual_inner = dual(inner_img);
    DgModule dp = dual(p);
    return ChainMap(outer_img, p, {0, 0}, name, [=](BiDegree x) {
        TensorLayout lay = tensor_layout(outer.module(), dual_inner, x);
        Matrix out(p.field(), p.dim(x), lay.total);
        for (const Summand& s : lay.summands) {
            BiDegree nd = s.right;
            TensorLayout in = tensor_layout(inner.module(), dp, -nd);
            auto k = in.find({0, 0});
            if (!k) continue;
            std::size_t off_in = in.summands[*k].offset;
            const auto& monomials = outer.basis(s.left);
            for (std::size_t c = 0; c < monomials.size(); ++c) {
                Matrix act = outer.act(monomials[c], p, nd);
                out.add_block(0, s.offset + c * s.right_dim + off_in, act, sign_of(nd.i));
            }
        }
        return out;
    });
}

// P -> outer(inner(P)), e_m |-> (-1)^{|e_m|} 1 (x) F_{1 (x) e_m*}
ChainMap coevaluation(const SymAlgebra& outer, const SymAlgebra& inner, const DgModule& p, const DgModule& inner_img,
                      const DgModule& outer_img, const std::string& name) {
    DgModule dual_inner = dual(inner_img);
    DgModule dp = dual(p);
    return ChainMap(p, outer_img, {0, 0}, name, [=](BiDegree x) {
        TensorLayout lay = tensor_layout(outer.module(), dual_inner, x);
        Matrix out(p.field(), lay.total, p.dim(x));
        auto k = lay.find({0, 0});
        if (!k) return out;
        const Summand& s = lay.summands[*k];
        TensorLayout in = tensor_layout(inner.module(), dp, -x);
        auto q = in.find({0, 0});
        if (!q) return out;
        std::size_t off_in = in.summands[*q].offset;
        for (std::size_t m = 0; m < p.dim(x); ++m) out.set(s.offset + off_in + m, m, sign_of(x.i));
        return out;
    });
}

}  // namespace

KoszulDuality::KoszulDuality(TwoTermData data)
    : data_(std::move(data)), t_(build_T(data_)), r_(build_R(data_)), s_(build_S(data_)) {}

DgModule KoszulDuality::functor_A(const DgModule& m) const {
    require_algebra(m, s_, "A");
    if (!m.region().searrow_bounded()) throw std::invalid_argument("A needs a searrow-bounded module, got region " + m.region().str());
    return twisted_tensor(t_.module(), dual(m), pairs_for(data_, true), "A(" + m.name() + ")");
}

DgModule KoszulDuality::functor_B(const DgModule& n) const {
    require_algebra(n, t_, "B");
    if (!n.region().nwarrow_bounded()) throw std::invalid_argument("B needs an nwarrow-bounded module, got region " + n.region().str());
    return twisted_tensor(s_.module(), dual(n), pairs_for(data_, false), "B(" + n.name() + ")");
}

ChainMap KoszulDuality::functor_on_map(const ChainMap& h, Functor which) const {
    if (h.shift() != BiDegree{0, 0}) throw std::invalid_argument("functor_on_map needs a degree (0,0) map");
    bool is_a = which == Functor::A;
    const SymAlgebra& c = is_a ? t_ : s_;
    DgModule src = is_a ? functor_A(h.target()) : functor_B(h.target());
    DgModule dst = is_a ? functor_A(h.source()) : functor_B(h.source());
    DgModule d_src = dual(h.target());
    DgModule d_dst = dual(h.source());
    std::string name = std::string(is_a ? "A(" : "B(") + h.name() + ")";
    return ChainMap(src, dst, {0, 0}, name, [=](BiDegree x) {
        TensorLayout from = tensor_layout(c.module(), d_src, x);
        TensorLayout to = tensor_layout(c.module(), d_dst, x);
        Matrix out(h.source().field(), to.total, from.total);
        for (const Summand& s : from.summands) {
            auto k = to.find(s.left);
            if (!k) continue;
            const Summand& t = to.summands[*k];
            Matrix blk = Matrix::identity(out.field(), s.left_dim).kron(h.block(-s.right).transpose());
            out.add_block(t.offset, s.offset, blk);
        }
        return out;
    });
}

DgModule KoszulDuality::K1() const { return functor_B(t_.module()).renamed("K1"); }
DgModule KoszulDuality::K2() const { return functor_A(s_.module()).renamed("K2"); }
ChainMap KoszulDuality::augmentation(const DgModule& k) const { return projection_00(k); }

ChainMap KoszulDuality::phi(const DgModule& p) const {
    DgModule a = functor_A(p);
    return evaluation(s_, t_, p, a, functor_B(a), "phi");
}

ChainMap KoszulDuality::psi(const DgModule& p) const {
    DgModule a = functor_A(p);
    return coevaluation(s_, t_, p, a, functor_B(a), "psi");
}

ChainMap KoszulDuality::phi_mirror(const DgModule& q) const {
    DgModule b = functor_B(q);
    return evaluation(t_, s_, q, b, functor_A(b), "phi'");
}

ChainMap KoszulDuality::psi_mirror(const DgModule& q) const {
    DgModule b = functor_B(q);
    return coevaluation(t_, s_, q, b, functor_A(b), "psi'");
}

DgModule KoszulDuality::kappa(const DgModule& n) const { return regrade_xi(functor_B(n)).renamed("kappa(" + n.name() + ")"); }

ChainMap KoszulDuality::kappa_on_map(const ChainMap& h) const {
    ChainMap b = functor_on_map(h, Functor::B);
    return ChainMap(kappa(h.target()), kappa(h.source()), {0, 0}, "kappa(" + h.name() + ")",
                    [b](BiDegree x) { return b.block({x.i - x.j, x.j}); });
}

DgModule regrade_xi(const DgModule& m) { return regrade(m); }

BiDegree kappa_shift(long n, long m) { return {-n + m, -m}; }

}  // namespace lkd
