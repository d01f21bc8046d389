#include "lkd/constructions.hpp"

#include <stdexcept>
#include <utility>

#include "lkd/memo.hpp"

namespace lkd {

namespace {

Matrix signed_by(long n, Matrix m) { return sign_of(n) == 1 ? m : -m; }

class FiniteImpl : public ModuleImpl {
public:
    FiniteImpl(FieldSpec field, std::map<BiDegree, std::size_t> dims, std::map<BiDegree, Matrix> diffs,
               std::map<std::pair<std::size_t, BiDegree>, Matrix> actions)
        : field_(field), dims_(std::move(dims)), diffs_(std::move(diffs)), actions_(std::move(actions)) {}

    std::size_t dim(BiDegree d) const override {
        auto it = dims_.find(d);
        return it == dims_.end() ? 0 : it->second;
    }
    Matrix differential(BiDegree d) const override {
        auto it = diffs_.find(d);
        return it == diffs_.end() ? Matrix(field_, dim(d + kDiffDegree), dim(d)) : it->second;
    }
    Matrix action(std::size_t, BiDegree) const override { throw std::logic_error("unreachable"); }

    Matrix action_to(std::size_t g, BiDegree d, BiDegree target) const {
        auto it = actions_.find({g, d});
        return it == actions_.end() ? Matrix(field_, dim(target), dim(d)) : it->second;
    }

private:
    FieldSpec field_;
    std::map<BiDegree, std::size_t> dims_;
    std::map<BiDegree, Matrix> diffs_;
    std::map<std::pair<std::size_t, BiDegree>, Matrix> actions_;
};

class FiniteWithAlgebra : public FiniteImpl {
public:
    FiniteWithAlgebra(FiniteImpl base, AlgebraPtr algebra) : FiniteImpl(std::move(base)), algebra_(std::move(algebra)) {}
    Matrix action(std::size_t g, BiDegree d) const override {
        return action_to(g, d, d + algebra_->gens[g].degree);
    }

private:
    AlgebraPtr algebra_;
};

class RestrictImpl : public ModuleImpl {
public:
    explicit RestrictImpl(DgModule m) : m_(std::move(m)) {}
    std::size_t dim(BiDegree d) const override { return m_.dim(d); }
    Matrix differential(BiDegree d) const override { return m_.d(d); }
    Matrix action(std::size_t, BiDegree) const override { throw std::logic_error("no generators"); }

private:
    DgModule m_;
};

class DualImpl : public ModuleImpl {
public:
    explicit DualImpl(DgModule m) : m_(std::move(m)) {}
    std::size_t dim(BiDegree d) const override { return m_.dim(-d); }
    Matrix differential(BiDegree d) const override {
        return signed_by(d.i + 1, m_.d(-d - kDiffDegree).transpose());
    }
    Matrix action(std::size_t g, BiDegree d) const override {
        BiDegree a = m_.algebra()->gens[g].degree;
        return signed_by(a.i * d.i, m_.action(g, -d - a).transpose());
    }

private:
    DgModule m_;
};

class ShiftImpl : public ModuleImpl {
public:
    ShiftImpl(DgModule m, long n, long k) : m_(std::move(m)), n_(n), k_(k) {}
    std::size_t dim(BiDegree d) const override { return m_.dim(src(d)); }
    Matrix differential(BiDegree d) const override { return signed_by(n_, m_.d(src(d))); }
    Matrix action(std::size_t g, BiDegree d) const override {
        return signed_by(n_ * m_.algebra()->gens[g].degree.i, m_.action(g, src(d)));
    }

private:
    BiDegree src(BiDegree d) const { return {d.i + n_, d.j - k_}; }
    DgModule m_;
    long n_;
    long k_;
};

class TensorImpl : public ModuleImpl {
public:
    TensorImpl(DgModule l, DgModule r, bool act_left) : l_(std::move(l)), r_(std::move(r)), act_left_(act_left) {}

    std::size_t dim(BiDegree x) const override { return layout(x).total; }

    Matrix differential(BiDegree x) const override {
        const TensorLayout& s = layout(x);
        const TensorLayout& t = layout(x + kDiffDegree);
        const FieldSpec& f = l_.field();
        Matrix out(f, t.total, s.total);
        for (const Summand& a : s.summands) {
            if (auto k = t.find(a.left + kDiffDegree)) {
                const Summand& b = t.summands[*k];
                out.add_block(b.offset, a.offset, l_.d(a.left).kron(Matrix::identity(f, a.right_dim)));
            }
            if (auto k = t.find(a.left)) {
                const Summand& b = t.summands[*k];
                out.add_block(b.offset, a.offset, Matrix::identity(f, a.left_dim).kron(r_.d(a.right)), sign_of(a.left.i));
            }
        }
        return out;
    }

    Matrix action(std::size_t g, BiDegree x) const override {
        const FieldSpec& f = l_.field();
        BiDegree dg = (act_left_ ? l_ : r_).algebra()->gens[g].degree;
        const TensorLayout& s = layout(x);
        const TensorLayout& t = layout(x + dg);
        Matrix out(f, t.total, s.total);
        for (const Summand& a : s.summands) {
            if (act_left_) {
                if (auto k = t.find(a.left + dg)) {
                    const Summand& b = t.summands[*k];
                    out.add_block(b.offset, a.offset, l_.action(g, a.left).kron(Matrix::identity(f, a.right_dim)));
                }
            } else if (auto k = t.find(a.left)) {
                const Summand& b = t.summands[*k];
                out.add_block(b.offset, a.offset, Matrix::identity(f, a.left_dim).kron(r_.action(g, a.right)),
                              sign_of(dg.i * a.left.i));
            }
        }
        return out;
    }

private:
    const TensorLayout& layout(BiDegree x) const {
        return layouts_.get(x, [&] { return tensor_layout(l_, r_, x); });
    }

    DgModule l_;
    DgModule r_;
    bool act_left_;
    Memo<BiDegree, TensorLayout> layouts_;
};

class TwistedImpl : public ModuleImpl {
public:
    TwistedImpl(DgModule c, DgModule n, std::vector<TwistPair> pairs)
        : c_(std::move(c)), n_(std::move(n)), pairs_(std::move(pairs)) {}

    std::size_t dim(BiDegree x) const override { return layout(x).total; }

    Matrix differential(BiDegree x) const override {
        Matrix out = part(0, x);
        for (std::size_t k = 1; k < 4; ++k) out = out + part(k, x);
        return out;
    }

    Matrix action(std::size_t g, BiDegree x) const override {
        const FieldSpec& f = c_.field();
        BiDegree dg = c_.algebra()->gens[g].degree;
        const TensorLayout& s = layout(x);
        const TensorLayout& t = layout(x + dg);
        Matrix out(f, t.total, s.total);
        for (const Summand& a : s.summands) {
            if (auto k = t.find(a.left + dg)) {
                const Summand& b = t.summands[*k];
                out.add_block(b.offset, a.offset, c_.action(g, a.left).kron(Matrix::identity(f, a.right_dim)));
            }
        }
        return out;
    }

    std::vector<std::string> part_names() const override { return {"d1", "d2", "d3", "d4"}; }

    Matrix part(std::size_t k, BiDegree x) const override {
        return parts_.get({k, x}, [&] { return compute_part(k, x); });
    }

private:
    Matrix compute_part(std::size_t k, BiDegree x) const {
        const FieldSpec& f = c_.field();
        const TensorLayout& s = layout(x);
        const TensorLayout& t = layout(x + kDiffDegree);
        Matrix out(f, t.total, s.total);
        for (const Summand& a : s.summands) {
            if (k == 0) {
                if (auto q = t.find(a.left + kDiffDegree)) {
                    const Summand& b = t.summands[*q];
                    out.add_block(b.offset, a.offset, c_.d(a.left).kron(Matrix::identity(f, a.right_dim)));
                }
            } else if (k == 1) {
                if (auto q = t.find(a.left)) {
                    const Summand& b = t.summands[*q];
                    out.add_block(b.offset, a.offset, Matrix::identity(f, a.left_dim).kron(n_.d(a.right)),
                                  sign_of(a.left.i));
                }
            } else {
                for (const TwistPair& p : pairs_) {
                    if (p.part != k) continue;
                    BiDegree dx = c_.algebra()->gens[p.left_gen].degree;
                    auto q = t.find(a.left + dx);
                    if (!q) continue;
                    const Summand& b = t.summands[*q];
                    // right multiplication by x equals (-1)^{|c||x|} times left multiplication
                    long sign = a.left.i + a.left.i * dx.i;
                    out.add_block(b.offset, a.offset, c_.action(p.left_gen, a.left).kron(n_.action(p.right_gen, a.right)),
                                  sign_of(sign));
                }
            }
        }
        return out;
    }

    const TensorLayout& layout(BiDegree x) const {
        return layouts_.get(x, [&] { return tensor_layout(c_, n_, x); });
    }

    DgModule c_;
    DgModule n_;
    std::vector<TwistPair> pairs_;
    Memo<BiDegree, TensorLayout> layouts_;
    Memo<std::pair<std::size_t, BiDegree>, Matrix> parts_;
};

// Quotient of M^n_j by d(M^{n-1}_j): `proj` maps onto the complement of the pivot rows of the
// image's column echelon basis, `lift` includes that complement back.
struct Quotient {
    Matrix proj;
    Matrix lift;
};

// Image of d: M^n_j -> M^{n+1}_j with its column echelon basis and pivot rows.
struct Image {
    Matrix basis;
    std::vector<std::size_t> pivots;
};

Image image_of(const Matrix& d) {
    RowEchelon e = row_echelon(d.transpose());
    std::size_t r = e.pivot_cols.size();
    return {e.reduced.block(0, 0, r, d.rows()).transpose(), e.pivot_cols};
}

class TruncGeqImpl : public ModuleImpl {
public:
    TruncGeqImpl(DgModule m, long n) : m_(std::move(m)), n_(n) {}

    std::size_t dim(BiDegree x) const override {
        if (x.i < n_) return 0;
        if (x.i == n_) return quotient(x.j).proj.rows();
        return m_.dim(x);
    }
    Matrix differential(BiDegree x) const override {
        if (x.i == n_) return m_.d(x) * quotient(x.j).lift;
        return m_.d(x);
    }
    Matrix action(std::size_t g, BiDegree x) const override {
        BiDegree t = x + m_.algebra()->gens[g].degree;
        Matrix a = m_.action(g, x);
        if (x.i == n_) a = a * quotient(x.j).lift;
        if (t.i == n_) a = quotient(t.j).proj * a;
        return a;
    }

private:
    const Quotient& quotient(long j) const {
        return quotients_.get(j, [&] {
            BiDegree x{n_, j};
            std::size_t dm = m_.dim(x);
            Image im = image_of(m_.d({n_ - 1, j}));
            std::vector<bool> is_pivot(dm, false);
            for (std::size_t p : im.pivots) is_pivot[p] = true;
            std::vector<std::size_t> rest;
            for (std::size_t r = 0; r < dm; ++r)
                if (!is_pivot[r]) rest.push_back(r);
            Matrix id = Matrix::identity(m_.field(), dm);
            Matrix reduce = id - im.basis * id.select_rows(im.pivots);
            return Quotient{reduce.select_rows(rest), id.select_cols(rest)};
        });
    }

    DgModule m_;
    long n_;
    Memo<long, Quotient> quotients_;
};

class TruncLeqImpl : public ModuleImpl {
public:
    TruncLeqImpl(DgModule m, long n) : m_(std::move(m)), n_(n) {}

    std::size_t dim(BiDegree x) const override {
        if (x.i <= n_) return m_.dim(x);
        if (x.i == n_ + 1) return image(x.j).pivots.size();
        return 0;
    }
    Matrix differential(BiDegree x) const override {
        if (x.i == n_) return m_.d(x).select_rows(image(x.j).pivots);
        return m_.d(x);
    }
    Matrix action(std::size_t g, BiDegree x) const override {
        BiDegree t = x + m_.algebra()->gens[g].degree;
        Matrix a = m_.action(g, x);
        if (x.i == n_ + 1) a = a * image(x.j).basis;
        if (t.i == n_ + 1) a = a.select_rows(image(t.j).pivots);
        return a;
    }

private:
    const Image& image(long j) const {
        return images_.get(j, [&] { return image_of(m_.d({n_, j})); });
    }

    DgModule m_;
    long n_;
    Memo<long, Image> images_;
};

}  // namespace

FiniteModuleBuilder::FiniteModuleBuilder(FieldSpec field, AlgebraPtr algebra, std::string name)
    : field_(field), algebra_(std::move(algebra)), name_(std::move(name)) {}

void FiniteModuleBuilder::set_dim(BiDegree d, std::size_t n) {
    if (n == 0) {
        dims_.erase(d);
    } else {
        dims_[d] = n;
    }
}

void FiniteModuleBuilder::set_d(BiDegree d, Matrix m) { diffs_.insert_or_assign(d, std::move(m)); }

void FiniteModuleBuilder::set_action(std::size_t g, BiDegree d, Matrix m) {
    actions_.insert_or_assign({g, d}, std::move(m));
}

DgModule FiniteModuleBuilder::build() const {
    auto dimension = [&](BiDegree d) {
        auto it = dims_.find(d);
        return it == dims_.end() ? std::size_t{0} : it->second;
    };
    for (const auto& [d, m] : diffs_) {
        if (m.rows() != dimension(d + kDiffDegree) || m.cols() != dimension(d))
            throw std::invalid_argument(name_ + ": differential at " + d.str() + " has the wrong shape");
    }
    for (const auto& [key, m] : actions_) {
        BiDegree t = key.second + algebra_->gens.at(key.first).degree;
        if (m.rows() != dimension(t) || m.cols() != dimension(key.second))
            throw std::invalid_argument(name_ + ": action at " + key.second.str() + " has the wrong shape");
    }
    Region region = Region::nothing();
    if (!dims_.empty()) {
        long imin = dims_.begin()->first.i;
        long imax = imin;
        long jmin = dims_.begin()->first.j;
        long jmax = jmin;
        for (const auto& [d, n] : dims_) {
            imin = std::min(imin, d.i);
            imax = std::max(imax, d.i);
            jmin = std::min(jmin, d.j);
            jmax = std::max(jmax, d.j);
        }
        region = Region::box(imin, imax, jmin, jmax);
    }
    FiniteImpl base(field_, dims_, diffs_, actions_);
    return DgModule(field_, algebra_, region, name_, std::make_shared<FiniteWithAlgebra>(std::move(base), algebra_));
}

DgModule unit_module(const FieldSpec& field, AlgebraPtr algebra) {
    FiniteModuleBuilder b(field, std::move(algebra), "O");
    b.set_dim({0, 0}, 1);
    return b.build();
}

DgModule restrict_to_base(const DgModule& m) {
    return DgModule(m.field(), trivial_algebra(m.field()), m.region(), m.name(), std::make_shared<RestrictImpl>(m));
}

DgModule dual(const DgModule& m) {
    return DgModule(m.field(), m.algebra(), m.region().reflect(), "dual(" + m.name() + ")", std::make_shared<DualImpl>(m));
}

DgModule shift(const DgModule& m, long n, long k) {
    if (n == 0 && k == 0) return m;
    std::string name = m.name() + "[" + std::to_string(n) + "]<" + std::to_string(k) + ">";
    return DgModule(m.field(), m.algebra(), m.region().translated({-n, k}), name, std::make_shared<ShiftImpl>(m, n, k));
}

DgModule tensor(const DgModule& l, const DgModule& r) {
    if (!(l.field() == r.field())) throw std::invalid_argument("tensor of modules over different fields");
    bool act_left = !l.algebra()->gens.empty() || r.algebra()->gens.empty();
    const AlgebraPtr& alg = act_left ? l.algebra() : r.algebra();
    return DgModule(l.field(), alg, l.region().minkowski(r.region()), l.name() + "(x)" + r.name(),
                    std::make_shared<TensorImpl>(l, r, act_left));
}

DgModule truncate_geq(const DgModule& m, long n) {
    Region r = m.region().intersect(Region::from_half_planes({{-1, 0, -n}}));
    return DgModule(m.field(), m.algebra(), r, "tau>=" + std::to_string(n) + "(" + m.name() + ")",
                    std::make_shared<TruncGeqImpl>(m, n));
}

DgModule truncate_leq(const DgModule& m, long n) {
    Region r = m.region().intersect(Region::from_half_planes({{1, 0, n + 1}}));
    return DgModule(m.field(), m.algebra(), r, "tau<=" + std::to_string(n) + "(" + m.name() + ")",
                    std::make_shared<TruncLeqImpl>(m, n));
}

std::optional<std::size_t> TensorLayout::find(BiDegree left) const {
    std::size_t lo = 0;
    std::size_t hi = summands.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (summands[mid].left < left) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < summands.size() && summands[lo].left == left) return lo;
    return std::nullopt;
}

TensorLayout tensor_layout(const DgModule& l, const DgModule& r, BiDegree x) {
    TensorLayout out;
    Region candidates = l.region().intersect(r.region().reflect().translated(x));
    auto w = candidates.bounding_window();
    if (!w) {
        throw std::domain_error("tensor " + l.name() + " (x) " + r.name() + " has infinitely many summands at " + x.str());
    }
    for (long i = w->imin; i <= w->imax; ++i) {
        for (long j = w->jmin; j <= w->jmax; ++j) {
            BiDegree p{i, j};
            std::size_t dl = l.dim(p);
            if (dl == 0) continue;
            std::size_t dr = r.dim(x - p);
            if (dr == 0) continue;
            out.summands.push_back({p, x - p, out.total, dl, dr});
            out.total += dl * dr;
        }
    }
    return out;
}

DgModule twisted_tensor(const DgModule& c, const DgModule& n, std::vector<TwistPair> pairs, std::string name) {
    if (!(c.field() == n.field())) throw std::invalid_argument("twisted tensor over different fields");
    for (const TwistPair& p : pairs) {
        BiDegree s = c.algebra()->gens.at(p.left_gen).degree + n.algebra()->gens.at(p.right_gen).degree;
        if (s != kDiffDegree) throw std::invalid_argument("twist pair degrees do not add to (1,0)");
        if (p.part != 2 && p.part != 3) throw std::invalid_argument("twist pair part must be d3 or d4");
    }
    return DgModule(c.field(), c.algebra(), c.region().minkowski(n.region()), std::move(name),
                    std::make_shared<TwistedImpl>(c, n, std::move(pairs)));
}

ChainMap biduality(const DgModule& m) {
    DgModule dd = dual(dual(m));
    return ChainMap(m, dd, {0, 0}, "ev", [m](BiDegree x) {
        return signed_by(x.i, Matrix::identity(m.field(), m.dim(x)));
    });
}

ChainMap biduality_inverse(const DgModule& m) {
    DgModule dd = dual(dual(m));
    return ChainMap(dd, m, {0, 0}, "ev^-1", [m](BiDegree x) {
        return signed_by(x.i, Matrix::identity(m.field(), m.dim(x)));
    });
}

ChainMap dual_pairing(const DgModule& m, const DgModule& n) {
    DgModule dm = dual(m);
    DgModule dn = dual(n);
    DgModule source = tensor(dm, dn);
    DgModule target = dual(tensor(m, n));
    return ChainMap(source, target, {0, 0}, "pairing", [m, n, dm, dn](BiDegree x) {
        TensorLayout s = tensor_layout(dm, dn, x);
        TensorLayout t = tensor_layout(m, n, -x);
        Matrix out(m.field(), t.total, s.total);
        for (const Summand& a : s.summands) {
            auto k = t.find(-a.left);
            if (!k) continue;
            const Summand& b = t.summands[*k];
            out.add_block(b.offset, a.offset, Matrix::identity(m.field(), a.left_dim * a.right_dim),
                          sign_of(a.left.i * a.right.i));
        }
        return out;
    });
}

}  // namespace lkd
