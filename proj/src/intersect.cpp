#include "lkd/intersect.hpp"

#include <stdexcept>

namespace lkd {

namespace {

Matrix echelon_rows(const Matrix& m) {
    RowEchelon e = row_echelon(m);
    std::vector<std::size_t> rows(e.pivot_cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
    return e.reduced.select_rows(rows);
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

}  // namespace

void SubspaceProblem::validate() const {
    for (const auto& [name, m] : {std::pair<const char*, const Matrix*>{"F1", &F1}, {"F2", &F2}}) {
        if (!(m->field() == field)) throw std::invalid_argument(std::string(name) + ": field differs from the problem's");
        if (m->cols() != E_dim) {
            throw std::invalid_argument(std::string(name) + ": rows have length " + std::to_string(m->cols()) + ", expected E_dim = " +
                                        std::to_string(E_dim));
        }
        if (rank(*m) != m->rows()) throw std::invalid_argument(std::string(name) + ": rows are linearly dependent");
    }
}

Matrix orthogonal(const FieldSpec& field, std::size_t E_dim, const Matrix& F) {
    if (F.cols() != E_dim) throw std::invalid_argument("orthogonal: F has the wrong number of columns");
    if (rank(F) != F.rows()) throw std::invalid_argument("orthogonal: rows of F are linearly dependent");
    Matrix k = F.rows() == 0 ? Matrix::identity(field, E_dim) : kernel_basis(F);
    if (k.cols() == 0) return Matrix(field, 0, E_dim);
    return echelon_rows(k.transpose());
}

TwoTermData build_X(const SubspaceProblem& p) {
    p.validate();
    Matrix perp = orthogonal(p.field, p.E_dim, p.F1);
    return {p.field, perp.rows(), p.F2.rows(), p.F2 * perp.transpose()};
}

TwoTermData build_Y(const SubspaceProblem& p) {
    p.validate();
    RowEchelon e = row_echelon(p.F1);
    std::vector<bool> pivot(p.E_dim, false);
    for (std::size_t c : e.pivot_cols) pivot[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < p.E_dim; ++c)
        if (!pivot[c]) complement.push_back(c);
    Matrix f(p.field, complement.size(), p.F2.rows());
    for (std::size_t k = 0; k < p.F2.rows(); ++k) {
        Matrix x = p.F2.select_rows({k});
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
            Scalar c = x.at(0, e.pivot_cols[r]);
            x = x - e.reduced.select_rows({r}).scaled(c);
        }
        for (std::size_t l = 0; l < complement.size(); ++l) f.set(l, k, Scalar(-x.at(0, complement[l]).value()));
    }
    return {p.field, p.F2.rows(), complement.size(), f};
}

SubspaceProblem dual_problem(const SubspaceProblem& p) {
    p.validate();
    return {p.field, p.E_dim, orthogonal(p.field, p.E_dim, p.F2), orthogonal(p.field, p.E_dim, p.F1)};
}

CohomologyTable derived_intersection_table(const SubspaceProblem& p, Side side, const Window& w) {
    TwoTermData x = build_X(side == Side::Primal ? p : dual_problem(p));
    return cohomology_table(build_T(x).module(), w);
}

CohomologyTable tor_oracle(const SubspaceProblem& p, Side side, const Window& w) {
    p.validate();
    std::size_t r1 = p.F1.rows();
    std::size_t r2 = p.F2.rows();
    std::size_t sum = rank(Matrix::vstack(p.F1, p.F2));
    // primal: ker f = F1^perp cap F2^perp, coker f = (F1 cap F2)^dual; the dual side swaps them
    std::size_t k = p.E_dim - sum;
    std::size_t c = r1 + r2 - sum;
    if (side == Side::Dual) std::swap(k, c);
    CohomologyTable t{w, {}};
    for (BiDegree x : w.cells()) {
        if (x.i > 0 || static_cast<std::size_t>(-x.i) > k) continue;
        std::size_t a = static_cast<std::size_t>(-x.i);
        long rest = x.j - 2 * static_cast<long>(a);
        if (rest < 0 || rest % 2 != 0) continue;
        std::size_t m = static_cast<std::size_t>(rest / 2);
        std::size_t sym = m == 0 ? 1 : (c == 0 ? 0 : binomial(c + m - 1, m));
        std::size_t v = binomial(k, a) * sym;
        if (v != 0) t.cells[x] = v;
    }
    return t;
}

}  // namespace lkd
