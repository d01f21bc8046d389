#include "lkd/symalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lkd/memo.hpp"

namespace lkd {

void TwoTermData::validate() const {
    if (f.rows() != W_dim || f.cols() != V_dim) {
        throw std::invalid_argument("f must be W_dim x V_dim (" + std::to_string(W_dim) + "x" + std::to_string(V_dim) +
                                    "), got " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
    }
    if (!(f.field() == field)) throw std::invalid_argument("f is over a different field");
}

namespace {

struct Basis {
    std::vector<Monomial> list;
    std::map<Monomial, std::size_t> index;
};

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t x = start; x < n; ++x) {
        cur.push_back(x);
        combinations(n, k, x + 1, cur, out);
        cur.pop_back();
    }
}

void compositions(std::size_t n, unsigned total, std::size_t pos, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
    if (pos + 1 == n) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= total; ++e) {
        cur[pos] = e;
        compositions(n, total - e, pos + 1, cur, out);
    }
}

long cross(BiDegree a, BiDegree b) { return a.i * b.j - a.j * b.i; }

struct Core {
    SymAlgebraSpec spec;
    Memo<BiDegree, Basis> bases;

    std::size_t n_odd() const { return spec.odd_labels.size(); }
    std::size_t n_even() const { return spec.even_labels.size(); }

    // Number of even factors s with rest = s * even_degree, if any.
    std::optional<unsigned> even_count(BiDegree rest) const {
        if (n_even() == 0) return rest == BiDegree{0, 0} ? std::optional<unsigned>(0) : std::nullopt;
        BiDegree q = spec.even_degree;
        if (cross(rest, q) != 0) return std::nullopt;
        long num = q.i != 0 ? rest.i : rest.j;
        long den = q.i != 0 ? q.i : q.j;
        if (num % den != 0 || num / den < 0) return std::nullopt;
        return static_cast<unsigned>(num / den);
    }

    const Basis& basis(BiDegree d) const {
        return bases.get(d, [&] {
            Basis b;
            for (std::size_t k = 0; k <= n_odd(); ++k) {
                BiDegree rest{d.i - static_cast<long>(k) * spec.odd_degree.i, d.j - static_cast<long>(k) * spec.odd_degree.j};
                auto s = even_count(rest);
                if (!s) continue;
                std::vector<std::vector<std::size_t>> subsets;
                std::vector<std::size_t> cur;
                combinations(n_odd(), k, 0, cur, subsets);
                std::vector<std::vector<unsigned>> exps;
                if (n_even() == 0) {
                    exps.emplace_back();
                } else {
                    std::vector<unsigned> e(n_even(), 0);
                    compositions(n_even(), *s, 0, e, exps);
                }
                for (const auto& sub : subsets)
                    for (const auto& e : exps) {
                        b.index.emplace(Monomial{sub, e}, b.list.size());
                        b.list.push_back(Monomial{sub, e});
                    }
            }
            return b;
        });
    }

    std::size_t index(BiDegree d, const Monomial& m) const {
        const Basis& b = basis(d);
        auto it = b.index.find(m);
        if (it == b.index.end()) throw std::logic_error("monomial not in basis at " + d.str());
        return it->second;
    }
};

class SymImpl : public ModuleImpl {
public:
    explicit SymImpl(std::shared_ptr<const Core> core) : core_(std::move(core)) {}

    std::size_t dim(BiDegree x) const override { return core_->basis(x).list.size(); }

    Matrix differential(BiDegree x) const override {
        const Basis& src = core_->basis(x);
        BiDegree y = x + kDiffDegree;
        Matrix out(core_->spec.field, core_->basis(y).list.size(), src.list.size());
        const Matrix& d = core_->spec.d;
        for (std::size_t c = 0; c < src.list.size(); ++c) {
            const Monomial& m = src.list[c];
            for (std::size_t k = 0; k < m.exterior.size(); ++k) {
                std::size_t e = m.exterior[k];
                for (std::size_t l = 0; l < core_->n_even(); ++l) {
                    if (d.entry_is_zero(l, e)) continue;
                    Monomial t = m;
                    t.exterior.erase(t.exterior.begin() + static_cast<long>(k));
                    t.symmetric[l] += 1;
                    Scalar coef = d.at(l, e);
                    if (k % 2 == 1) coef = Scalar(-coef.value());
                    out.add(core_->index(y, t), c, coef);
                }
            }
        }
        return out;
    }

    Matrix action(std::size_t g, BiDegree x) const override {
        const Basis& src = core_->basis(x);
        std::size_t no = core_->n_odd();
        BiDegree y = x + (g < no ? core_->spec.odd_degree : core_->spec.even_degree);
        Matrix out(core_->spec.field, core_->basis(y).list.size(), src.list.size());
        for (std::size_t c = 0; c < src.list.size(); ++c) {
            Monomial t = src.list[c];
            long sign = 1;
            if (g < no) {
                auto pos = std::lower_bound(t.exterior.begin(), t.exterior.end(), g);
                if (pos != t.exterior.end() && *pos == g) continue;
                if ((pos - t.exterior.begin()) % 2 == 1) sign = -1;
                t.exterior.insert(pos, g);
            } else {
                t.symmetric[g - no] += 1;
            }
            out.add(core_->index(y, t), c, sign);
        }
        return out;
    }

private:
    std::shared_ptr<const Core> core_;
};

Region sym_region(const SymAlgebraSpec& s) {
    std::size_t no = s.odd_labels.size();
    std::size_t ne = s.even_labels.size();
    BiDegree p = s.odd_degree;
    BiDegree q = s.even_degree;
    if (no == 0 && ne == 0) return Region::point({0, 0});
    if (no == 0) {
        return Region::from_half_planes({{q.j, -q.i, 0}, {-q.j, q.i, 0}, {-q.i, -q.j, 0}});
    }
    long n = static_cast<long>(no);
    if (ne == 0) {
        return Region::from_half_planes(
            {{p.j, -p.i, 0}, {-p.j, p.i, 0}, {-p.i, -p.j, 0}, {p.i, p.j, n * (p.i * p.i + p.j * p.j)}});
    }
    long det = cross(p, q);
    if (det == 0) throw std::invalid_argument("odd and even generator placements must be independent");
    // det * k = ku . x and det * s = su . x for x = k p + s q
    BiDegree ku{q.j, -q.i};
    BiDegree su{-p.j, p.i};
    if (det < 0) {
        ku = -ku;
        su = -su;
        det = -det;
    }
    return Region::from_half_planes({{-ku.i, -ku.j, 0}, {ku.i, ku.j, n * det}, {-su.i, -su.j, 0}});
}

}  // namespace

struct SymAlgebra::State {
    std::shared_ptr<const Core> core;
    AlgebraPtr signature;
    DgModule module;
};

SymAlgebra::SymAlgebra(SymAlgebraSpec spec) {
    if (spec.d.rows() != spec.even_labels.size() || spec.d.cols() != spec.odd_labels.size())
        throw std::invalid_argument("differential matrix must be even x odd");
    if (spec.odd_degree.i % 2 == 0 && !spec.odd_labels.empty())
        throw std::invalid_argument("odd generators need odd cohomological degree");
    if (spec.even_degree.i % 2 != 0 && !spec.even_labels.empty())
        throw std::invalid_argument("even generators need even cohomological degree");
    auto core = std::make_shared<Core>();
    core->spec = std::move(spec);
    const SymAlgebraSpec& s = core->spec;
    std::size_t no = s.odd_labels.size();
    std::size_t n = no + s.even_labels.size();
    auto sig = std::make_shared<AlgebraSignature>();
    sig->name = s.name;
    for (const auto& l : s.odd_labels) sig->gens.push_back({l, s.odd_degree});
    for (const auto& l : s.even_labels) sig->gens.push_back({l, s.even_degree});
    sig->gen_differential = Matrix(s.field, n, n);
    sig->gen_differential.add_block(no, 0, s.d);
    auto state = std::make_shared<State>();
    state->core = core;
    state->signature = sig;
    state->module = DgModule(s.field, sig, sym_region(s), s.name, std::make_shared<SymImpl>(core));
    s_ = std::move(state);
}

const SymAlgebraSpec& SymAlgebra::spec() const { return s_->core->spec; }
const DgModule& SymAlgebra::module() const { return s_->module; }
const AlgebraPtr& SymAlgebra::signature() const { return s_->signature; }

const std::vector<Monomial>& SymAlgebra::basis(BiDegree d) const {
    static const std::vector<Monomial> empty;
    if (!s_->module.region().contains(d)) return empty;
    return s_->core->basis(d).list;
}

std::optional<std::size_t> SymAlgebra::index_of(BiDegree d, const Monomial& m) const {
    if (!s_->module.region().contains(d)) return std::nullopt;
    const Basis& b = s_->core->basis(d);
    auto it = b.index.find(m);
    if (it == b.index.end()) return std::nullopt;
    return it->second;
}

BiDegree SymAlgebra::degree(const Monomial& m) const {
    long k = static_cast<long>(m.exterior.size());
    long s = 0;
    for (unsigned e : m.symmetric) s += e;
    BiDegree p = spec().odd_degree;
    BiDegree q = spec().even_degree;
    return {k * p.i + s * q.i, k * p.j + s * q.j};
}

Monomial SymAlgebra::unit() const { return Monomial{{}, std::vector<unsigned>(n_even(), 0)}; }

SignedMonomial SymAlgebra::multiply(const Monomial& a, const Monomial& b) const {
    SignedMonomial out;
    std::size_t inversions = 0;
    for (std::size_t x : a.exterior) {
        for (std::size_t y : b.exterior) {
            if (x == y) return out;
            if (x > y) ++inversions;
        }
    }
    out.sign = inversions % 2 == 0 ? 1 : -1;
    out.monomial.exterior = a.exterior;
    out.monomial.exterior.insert(out.monomial.exterior.end(), b.exterior.begin(), b.exterior.end());
    std::sort(out.monomial.exterior.begin(), out.monomial.exterior.end());
    out.monomial.symmetric = a.symmetric;
    for (std::size_t l = 0; l < b.symmetric.size(); ++l) out.monomial.symmetric[l] += b.symmetric[l];
    return out;
}

std::string SymAlgebra::label(const Monomial& m) const {
    std::string out;
    for (std::size_t e : m.exterior) out += (out.empty() ? "" : "*") + spec().odd_labels[e];
    for (std::size_t l = 0; l < m.symmetric.size(); ++l) {
        if (m.symmetric[l] == 0) continue;
        out += (out.empty() ? "" : "*") + spec().even_labels[l];
        if (m.symmetric[l] > 1) out += "^" + std::to_string(m.symmetric[l]);
    }
    return out.empty() ? "1" : out;
}

ChainMap SymAlgebra::augmentation() const {
    const FieldSpec& f = spec().field;
    return ChainMap(module(), unit_module(f, signature()), {0, 0}, "augmentation",
                    [f](BiDegree) { return Matrix::from_rows(f, {{1}}); });
}

Matrix SymAlgebra::act(const Monomial& c, const DgModule& p, BiDegree d) const {
    Matrix m = Matrix::identity(p.field(), p.dim(d));
    BiDegree cur = d;
    std::size_t no = n_odd();
    for (std::size_t l = 0; l < c.symmetric.size(); ++l) {
        for (unsigned r = 0; r < c.symmetric[l]; ++r) {
            m = p.action(no + l, cur) * m;
            cur = cur + spec().even_degree;
        }
    }
    for (auto it = c.exterior.rbegin(); it != c.exterior.rend(); ++it) {
        m = p.action(*it, cur) * m;
        cur = cur + spec().odd_degree;
    }
    return m;
}

namespace {

std::vector<std::string> labels(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back(stem + std::to_string(k));
    return out;
}

Matrix negated_transpose(const Matrix& f) { return -f.transpose(); }

}  // namespace

SymAlgebra build_T(const TwoTermData& data) {
    data.validate();
    return SymAlgebra({data.field, "T", labels("v", data.V_dim), {-1, 2}, labels("w", data.W_dim), {0, 2}, data.f});
}

SymAlgebra build_R(const TwoTermData& data) {
    data.validate();
    return SymAlgebra({data.field, "R", labels("w*", data.W_dim), {-1, -2}, labels("v*", data.V_dim), {0, -2},
                       negated_transpose(data.f)});
}

SymAlgebra build_S(const TwoTermData& data) {
    data.validate();
    return SymAlgebra({data.field, "S", labels("w*", data.W_dim), {1, -2}, labels("v*", data.V_dim), {2, -2},
                       negated_transpose(data.f)});
}

namespace {

class RegradeImpl : public ModuleImpl {
public:
    explicit RegradeImpl(DgModule m) : m_(std::move(m)) {}
    std::size_t dim(BiDegree x) const override { return m_.dim(src(x)); }
    Matrix differential(BiDegree x) const override { return m_.d(src(x)); }
    Matrix action(std::size_t g, BiDegree x) const override { return m_.action(g, src(x)); }
    std::vector<std::string> part_names() const override { return m_.part_names(); }
    Matrix part(std::size_t k, BiDegree x) const override { return m_.part(k, src(x)); }

private:
    static BiDegree src(BiDegree x) { return {x.i - x.j, x.j}; }
    DgModule m_;
};

}  // namespace

DgModule regrade(const DgModule& m) {
    auto sig = std::make_shared<AlgebraSignature>(*m.algebra());
    sig->name = "xi(" + sig->name + ")";
    for (Generator& g : sig->gens) {
        if (g.degree.j % 2 != 0) throw std::invalid_argument("regrading needs generators of even internal degree");
        g.degree = {g.degree.i + g.degree.j, g.degree.j};
    }
    return DgModule(m.field(), sig, m.region().pullback(1, -1, 0, 1), "xi(" + m.name() + ")",
                    std::make_shared<RegradeImpl>(m));
}

KoszulComplex koszul_classical(const FieldSpec& field, std::size_t r, int variant) {
    if (variant < 1 || variant > 4) throw std::invalid_argument("Koszul variant must be 1..4");
    SymAlgebra sym({field, "S(V^<2>)", {}, {1, -2}, labels("v*", r), {0, 2}, Matrix(field, r, 0)});
    SymAlgebra ext({field, "Lambda(V[-1]<-2>)", labels("v", r), {1, -2}, {}, {0, 2}, Matrix(field, 0, r)});
    std::vector<TwistPair> pairs;
    for (std::size_t a = 0; a < r; ++a) pairs.push_back({a, a, 2});
    std::string tag = "(" + std::to_string(r) + ")";
    DgModule k1 = twisted_tensor(sym.module(), dual(ext.module()), pairs, "Koszul1" + tag);
    DgModule m;
    switch (variant) {
        case 1: m = k1; break;
        case 2: m = dual(k1).renamed("Koszul2" + tag); break;
        case 3: m = regrade(k1).renamed("Koszul3" + tag); break;
        default: m = regrade(dual(k1)).renamed("Koszul4" + tag); break;
    }
    ChainMap aug(m, unit_module(field, m.algebra()), {0, 0}, "augmentation",
                 [field](BiDegree) { return Matrix::from_rows(field, {{1}}); });
    return {m, aug};
}

}  // namespace lkd
