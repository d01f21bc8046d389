#include "lkd/random.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>


namespace lkd {

std::size_t draw(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng, long spread) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<long>(draw(rng, static_cast<std::size_t>(2 * spread + 1))) - spread);
    return m;
}

TwoTermData random_two_term(const FieldSpec& f, std::size_t V_dim, std::size_t W_dim, Rng& rng) {
    return {f, V_dim, W_dim, random_matrix(f, W_dim, V_dim, rng)};
}

namespace {

unsigned weight(const Monomial& m) {
    unsigned w = static_cast<unsigned>(m.exterior.size());
    for (unsigned e : m.symmetric) w += e;
    return w;
}

// Window containing every cell of A (x) L with A-weight below k.
Window quotient_window(const SymAlgebra& a, const Window& l, unsigned k) {
    Window w = l;
    long top = static_cast<long>(k) - 1;
    for (BiDegree g : {a.spec().odd_degree, a.spec().even_degree}) {
        w.imin = std::min(w.imin, l.imin + top * std::min(0L, g.i));
        w.imax = std::max(w.imax, l.imax + top * std::max(0L, g.i));
        w.jmin = std::min(w.jmin, l.jmin + top * std::min(0L, g.j));
        w.jmax = std::max(w.jmax, l.jmax + top * std::max(0L, g.j));
    }
    return w;
}

}  // namespace

DgModule weight_quotient(const SymAlgebra& a, const DgModule& l, unsigned k, const std::string& name) {
    auto lw = l.region().bounding_window();
    if (!lw) throw std::invalid_argument("weight_quotient needs a finite complex");
    DgModule full = tensor(a.module(), l);
    Window w = quotient_window(a, *lw, k);
    std::map<BiDegree, std::vector<std::size_t>> kept;
    for (BiDegree x : w.cells()) {
        if (full.dim(x) == 0) continue;
        TensorLayout lay = tensor_layout(a.module(), l, x);
        std::vector<std::size_t> idx;
        for (const Summand& s : lay.summands) {
            const auto& mons = a.basis(s.left);
            for (std::size_t c = 0; c < mons.size(); ++c) {
                if (weight(mons[c]) >= k) continue;
                for (std::size_t m = 0; m < s.right_dim; ++m) idx.push_back(s.offset + c * s.right_dim + m);
            }
        }
        if (!idx.empty()) kept[x] = std::move(idx);
    }
    FiniteModuleBuilder b(l.field(), a.signature(), name);
    const auto& gens = a.signature()->gens;
    for (const auto& [x, idx] : kept) {
        b.set_dim(x, idx.size());
        auto up = kept.find(x + kDiffDegree);
        if (up != kept.end()) b.set_d(x, full.d(x).select_rows(up->second).select_cols(idx));
        for (std::size_t g = 0; g < gens.size(); ++g) {
            auto t = kept.find(x + gens[g].degree);
            if (t != kept.end()) b.set_action(g, x, full.action(g, x).select_rows(t->second).select_cols(idx));
        }
    }
    return b.build();
}

DgModule random_quotient_module(const SymAlgebra& a, Rng& rng, const RandomModuleOptions& opts) {
    const FieldSpec& f = a.spec().field;
    auto trivial = trivial_algebra(f);
    for (;;) {
        std::size_t n = 1 + draw(rng, opts.max_generators);
        std::map<BiDegree, std::size_t> dims;
        for (std::size_t g = 0; g < n; ++g) {
            BiDegree x{static_cast<long>(draw(rng, 3)) - 1, 2 * (static_cast<long>(draw(rng, 3)) - 1)};
            ++dims[x];
        }
        FiniteModuleBuilder lb(f, trivial, "L");
        for (const auto& [x, m] : dims) lb.set_dim(x, m);
        for (const auto& [x, m] : dims) {
            auto up = dims.find(x + kDiffDegree);
            if (up != dims.end()) lb.set_d(x, random_matrix(f, up->second, m, rng));
        }
        DgModule l = lb.build();
        Window lw = *l.region().bounding_window();
        if (!check_dg_axioms(l, lw).ok) continue;
        unsigned k = 1 + static_cast<unsigned>(draw(rng, opts.max_weight));
        DgModule p = weight_quotient(a, l, k, a.spec().name + "(x)L/w" + std::to_string(k));
        Window pw = *p.region().bounding_window();
        bool small = true;
        for (BiDegree x : pw.cells()) small = small && p.dim(x) <= opts.max_component_dim;
        if (small) return p;
    }
}

}  // namespace lkd
