#include "lkd/cohomology.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lkd {

std::size_t CohomologyTable::at(BiDegree d) const {
    auto it = cells.find(d);
    return it == cells.end() ? 0 : it->second;
}

std::string CohomologyTable::tsv() const {
    std::ostringstream os;
    for (const auto& [d, n] : cells) os << d.i << '\t' << d.j << '\t' << n << '\n';
    return os.str();
}

std::string CohomologyTable::json() const {
    nlohmann::ordered_json j;
    j["window"] = {{"i", {window.imin, window.imax}}, {"j", {window.jmin, window.jmax}}};
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& [d, n] : cells) j["cells"].push_back({{"i", d.i}, {"j", d.j}, {"dim", n}});
    return j.dump();
}

std::size_t cohomology_dim(const DgModule& m, BiDegree d) {
    std::size_t n = m.dim(d);
    if (n == 0) return 0;
    return n - rank(m.d(d)) - rank(m.d(d - kDiffDegree));
}

CohomologyTable cohomology_table(const DgModule& m, const Window& w) {
    CohomologyTable t{w, {}};
    for (BiDegree x : w.cells()) {
        std::size_t h = cohomology_dim(m, x);
        if (h != 0) t.cells[x] = h;
    }
    return t;
}

CohomologyTable dimension_table(const DgModule& m, const Window& w) {
    CohomologyTable t{w, {}};
    for (BiDegree x : w.cells()) {
        std::size_t n = m.dim(x);
        if (n != 0) t.cells[x] = n;
    }
    return t;
}

CohomologyTable shift_table(const CohomologyTable& t, long n, long k, const Window& w) {
    CohomologyTable out{w, {}};
    for (BiDegree x : w.cells()) {
        BiDegree src{x.i + n, x.j - k};
        if (!t.window.contains(src)) throw std::out_of_range("shift_table: " + src.str() + " outside the source window");
        std::size_t h = t.at(src);
        if (h != 0) out.cells[x] = h;
    }
    return out;
}

CheckReport is_quasi_iso(const ChainMap& h, const Window& w) {
    if (h.shift() != BiDegree{0, 0}) throw std::invalid_argument("is_quasi_iso needs a degree (0,0) map");
    CheckReport r;
    const DgModule& s = h.source();
    const DgModule& t = h.target();
    for (BiDegree x : w.cells()) {
        ++r.checks;
        std::size_t hs = cohomology_dim(s, x);
        std::size_t ht = cohomology_dim(t, x);
        if (hs != ht) {
            r.fail("quasi-iso[" + h.name() + "]", x, "dim H source " + std::to_string(hs) + " vs target " + std::to_string(ht));
            continue;
        }
        if (hs == 0) continue;
        Matrix cycles = kernel_basis(s.d(x));
        Matrix bounds = image_basis(t.d(x - kDiffDegree));
        std::size_t induced = rank(Matrix::hstack(bounds, h.block(x) * cycles)) - bounds.cols();
        if (induced != hs) {
            r.fail("quasi-iso[" + h.name() + "]", x, "induced map has rank " + std::to_string(induced) + " on H of dim " + std::to_string(hs));
        }
    }
    return r;
}

namespace {

class ConeImpl : public ModuleImpl {
public:
    explicit ConeImpl(ChainMap h) : h_(std::move(h)) {}
    std::size_t dim(BiDegree x) const override { return h_.source().dim(x + kDiffDegree) + h_.target().dim(x); }
    Matrix differential(BiDegree x) const override {
        const DgModule& s = h_.source();
        const DgModule& t = h_.target();
        BiDegree y = x + kDiffDegree;
        std::size_t s1 = s.dim(y);
        std::size_t s2 = s.dim(y + kDiffDegree);
        Matrix out(s.field(), dim(y), dim(x));
        out.add_block(0, 0, s.d(y), -1);
        out.add_block(s2, 0, h_.block(y));
        out.add_block(s2, s1, t.d(x));
        return out;
    }
    Matrix action(std::size_t, BiDegree) const override { throw std::logic_error("cone has no generators"); }

private:
    ChainMap h_;
};

std::string power(const char* var, long e) {
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

DgModule mapping_cone(const ChainMap& h) {
    if (h.shift() != BiDegree{0, 0}) throw std::invalid_argument("mapping_cone needs a degree (0,0) map");
    const FieldSpec& f = h.source().field();
    return DgModule(f, trivial_algebra(f), Region::everywhere(), "cone(" + h.name() + ")", std::make_shared<ConeImpl>(h));
}

std::string hilbert_series(const CohomologyTable& t) {
    if (t.cells.empty()) return "0";
    std::string out;
    for (const auto& [d, n] : t.cells) {
        std::string term;
        if (d.i != 0) term += power("q", d.i);
        if (d.j != 0) term += (term.empty() ? "" : " ") + power("t", d.j);
        if (term.empty()) {
            term = std::to_string(n);
        } else if (n != 1) {
            term = std::to_string(n) + " " + term;
        }
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

}  // namespace lkd
