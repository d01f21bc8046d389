#include "lkd/module.hpp"

#include <stdexcept>
#include <utility>

#include "lkd/memo.hpp"

namespace lkd {

bool AlgebraSignature::same_as(const AlgebraSignature& o) const {
    if (gens.size() != o.gens.size()) return false;
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g].degree != o.gens[g].degree) return false;
    return gen_differential == o.gen_differential;
}

AlgebraPtr trivial_algebra(const FieldSpec& field) {
    auto a = std::make_shared<AlgebraSignature>();
    a->name = "O";
    a->gen_differential = Matrix(field, 0, 0);
    return a;
}

Matrix ModuleImpl::part(std::size_t, BiDegree) const { throw std::logic_error("module has no differential parts"); }

struct DgModule::State {
    FieldSpec field;
    AlgebraPtr algebra;
    Region region;
    std::string name;
    std::shared_ptr<const ModuleImpl> impl;
    std::vector<std::string> parts;
    Memo<BiDegree, std::size_t> dims;
    Memo<BiDegree, Matrix> diffs;
    Memo<std::pair<std::size_t, BiDegree>, Matrix> actions;
    Memo<std::pair<std::size_t, BiDegree>, Matrix> part_blocks;
};

DgModule::DgModule(FieldSpec field, AlgebraPtr algebra, Region region, std::string name,
                   std::shared_ptr<const ModuleImpl> impl) {
    auto s = std::make_shared<State>();
    s->field = field;
    s->algebra = std::move(algebra);
    s->region = std::move(region);
    s->name = std::move(name);
    s->parts = impl->part_names();
    s->impl = std::move(impl);
    s_ = std::move(s);
}

const FieldSpec& DgModule::field() const { return s_->field; }
const AlgebraPtr& DgModule::algebra() const { return s_->algebra; }
const Region& DgModule::region() const { return s_->region; }
const std::string& DgModule::name() const { return s_->name; }
const ModuleImpl& DgModule::impl() const { return *s_->impl; }
const std::vector<std::string>& DgModule::part_names() const { return s_->parts; }

DgModule DgModule::renamed(std::string name) const { return DgModule(field(), algebra(), region(), std::move(name), s_->impl); }

std::size_t DgModule::dim(BiDegree d) const {
    if (!s_->region.contains(d)) return 0;
    return s_->dims.get(d, [&] { return s_->impl->dim(d); });
}

namespace {

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw std::logic_error(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                               std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

const Matrix& DgModule::d(BiDegree x) const {
    return s_->diffs.get(x, [&] {
        std::size_t src = dim(x);
        std::size_t dst = dim(x + kDiffDegree);
        if (src == 0 || dst == 0) return Matrix(field(), dst, src);
        Matrix m = s_->impl->differential(x);
        check_shape(m, dst, src, name() + " differential at " + x.str());
        return m;
    });
}

const Matrix& DgModule::action(std::size_t g, BiDegree x) const {
    if (g >= s_->algebra->gens.size()) throw std::out_of_range("generator index out of range");
    return s_->actions.get({g, x}, [&] {
        std::size_t src = dim(x);
        std::size_t dst = dim(x + s_->algebra->gens[g].degree);
        if (src == 0 || dst == 0) return Matrix(field(), dst, src);
        Matrix m = s_->impl->action(g, x);
        check_shape(m, dst, src, name() + " action of " + s_->algebra->gens[g].label + " at " + x.str());
        return m;
    });
}

const Matrix& DgModule::part(std::size_t k, BiDegree x) const {
    if (k >= s_->parts.size()) throw std::out_of_range("differential part index out of range");
    return s_->part_blocks.get({k, x}, [&] {
        std::size_t src = dim(x);
        std::size_t dst = dim(x + kDiffDegree);
        if (src == 0 || dst == 0) return Matrix(field(), dst, src);
        Matrix m = s_->impl->part(k, x);
        check_shape(m, dst, src, name() + " part " + s_->parts[k] + " at " + x.str());
        return m;
    });
}

struct ChainMap::State {
    DgModule source;
    DgModule target;
    BiDegree shift;
    std::string name;
    BlockFn fn;
    Memo<BiDegree, Matrix> blocks;
};

ChainMap::ChainMap(DgModule source, DgModule target, BiDegree shift, std::string name, BlockFn blocks) {
    if (!(source.field() == target.field())) throw std::invalid_argument("chain map between different fields");
    auto s = std::make_shared<State>();
    s->source = std::move(source);
    s->target = std::move(target);
    s->shift = shift;
    s->name = std::move(name);
    s->fn = std::move(blocks);
    s_ = std::move(s);
}

ChainMap ChainMap::identity(const DgModule& m) {
    return ChainMap(m, m, {0, 0}, "id", [m](BiDegree x) { return Matrix::identity(m.field(), m.dim(x)); });
}

ChainMap ChainMap::compose(const ChainMap& second, const ChainMap& first) {
    BiDegree s1 = first.shift();
    return ChainMap(first.source(), second.target(), s1 + second.shift(), second.name() + " o " + first.name(),
                    [second, first, s1](BiDegree x) { return second.block(x + s1) * first.block(x); });
}

const DgModule& ChainMap::source() const { return s_->source; }
const DgModule& ChainMap::target() const { return s_->target; }
BiDegree ChainMap::shift() const { return s_->shift; }
const std::string& ChainMap::name() const { return s_->name; }

const Matrix& ChainMap::block(BiDegree x) const {
    return s_->blocks.get(x, [&] {
        std::size_t src = s_->source.dim(x);
        std::size_t dst = s_->target.dim(x + s_->shift);
        if (src == 0 || dst == 0) return Matrix(s_->source.field(), dst, src);
        Matrix m = s_->fn(x);
        check_shape(m, dst, src, s_->name + " block at " + x.str());
        return m;
    });
}

void CheckReport::fail(const std::string& what, BiDegree at, const std::string& why) {
    if (!ok) return;
    ok = false;
    identity = what;
    cell = at;
    detail = why;
}

void CheckReport::merge(const CheckReport& other) {
    checks += other.checks;
    if (!other.ok) fail(other.identity, other.cell, other.detail);
}

std::string CheckReport::summary() const {
    if (ok) return "ok (" + std::to_string(checks) + " checks)";
    std::string s = "identity " + identity + " fails at cell " + cell.str();
    if (!detail.empty()) s += ": " + detail;
    return s;
}

namespace {

// (-1)^n * m
Matrix signed_by(long n, const Matrix& m) { return sign_of(n) == 1 ? m : -m; }

}  // namespace

CheckReport check_dg_axioms(const DgModule& m, const Window& w) {
    CheckReport r;
    const auto& gens = m.algebra()->gens;
    const Matrix& gd = m.algebra()->gen_differential;
    for (BiDegree x : w.cells()) {
        if (m.dim(x) == 0) continue;
        ++r.checks;
        if (!(m.d(x + kDiffDegree) * m.d(x)).is_zero()) r.fail("d^2=0", x);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            BiDegree dg = gens[g].degree;
            Matrix lhs = m.d(x + dg) * m.action(g, x);
            Matrix rhs = signed_by(dg.i, m.action(g, x + kDiffDegree) * m.d(x));
            for (std::size_t h = 0; h < gens.size(); ++h) {
                if (gd.entry_is_zero(h, g)) continue;
                if (gens[h].degree != dg + kDiffDegree) {
                    throw std::logic_error("generator differential of " + gens[g].label + " has wrong degree");
                }
                rhs = rhs + m.action(h, x).scaled(gd.at(h, g));
            }
            ++r.checks;
            if (!(lhs == rhs)) r.fail("leibniz[" + gens[g].label + "]", x);
            for (std::size_t h = g; h < gens.size(); ++h) {
                BiDegree dh = gens[h].degree;
                Matrix gh = m.action(g, x + dh) * m.action(h, x);
                ++r.checks;
                if (h == g) {
                    if (gens[g].odd() && !gh.is_zero()) r.fail("odd-square[" + gens[g].label + "]", x);
                    continue;
                }
                Matrix hg = m.action(h, x + dg) * m.action(g, x);
                if (!(gh == signed_by(dg.i * dh.i, hg))) {
                    r.fail("commutativity[" + gens[g].label + "," + gens[h].label + "]", x);
                }
            }
        }
    }
    return r;
}

CheckReport check_chain_map(const ChainMap& h, const Window& w, bool actions) {
    CheckReport r;
    const DgModule& s = h.source();
    const DgModule& t = h.target();
    BiDegree sh = h.shift();
    for (BiDegree x : w.cells()) {
        if (s.dim(x) == 0) continue;
        ++r.checks;
        Matrix lhs = t.d(x + sh) * h.block(x);
        Matrix rhs = signed_by(sh.i, h.block(x + kDiffDegree) * s.d(x));
        if (!(lhs == rhs)) r.fail("chain-map[" + h.name() + "]", x);
        if (!actions) continue;
        const auto& gens = s.algebra()->gens;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            BiDegree dg = gens[g].degree;
            ++r.checks;
            Matrix a = h.block(x + dg) * s.action(g, x);
            Matrix b = signed_by(dg.i * sh.i, t.action(g, x + sh) * h.block(x));
            if (!(a == b)) r.fail("linearity[" + h.name() + "," + gens[g].label + "]", x);
        }
    }
    return r;
}

CheckReport check_differential_parts(const DgModule& m, const Window& w) {
    CheckReport r;
    if (m.part_names().size() != 4) {
        r.fail("parts-present", {0, 0}, m.name() + " has no d1..d4 decomposition");
        return r;
    }
    for (BiDegree x : w.cells()) {
        if (m.dim(x) == 0) continue;
        BiDegree y = x + kDiffDegree;
        Matrix a0 = m.part(0, x) + m.part(1, x);
        Matrix b0 = m.part(2, x) + m.part(3, x);
        Matrix a1 = m.part(0, y) + m.part(1, y);
        Matrix b1 = m.part(2, y) + m.part(3, y);
        r.checks += 4;
        if (!(a0 + b0 == m.d(x))) r.fail("d=d1+d2+d3+d4", x);
        if (!(a1 * a0).is_zero()) r.fail("(d1+d2)^2=0", x);
        if (!(b1 * b0).is_zero()) r.fail("(d3+d4)^2=0", x);
        if (!(a1 * b0 + b1 * a0).is_zero()) r.fail("(d1+d2)(d3+d4)+(d3+d4)(d1+d2)=0", x);
    }
    return r;
}

CheckReport check_maps_equal(const ChainMap& a, const ChainMap& b, const Window& w) {
    CheckReport r;
    for (BiDegree x : w.cells()) {
        if (a.source().dim(x) == 0) continue;
        ++r.checks;
        if (!(a.block(x) == b.block(x))) r.fail(a.name() + "=" + b.name(), x);
    }
    return r;
}

}  // namespace lkd
