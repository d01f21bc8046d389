#include "lkd/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lkd {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct QOps {
    using T = mpq_class;
    T from_long(long v) const { return T(v); }
    T from_scalar(const Scalar& s) const { return s.value(); }
    Scalar to_scalar(const T& v) const { return Scalar(v); }
    static bool is_zero(const T& x) { return sgn(x) == 0; }
    static void add_mul(T& y, const T& f, const T& x) { y += f * x; }
    static void sub_mul(T& y, const T& f, const T& x) { y -= f * x; }
    static void add(T& y, const T& x) { y += x; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T inv(const T& a) { return 1 / a; }
};

struct POps {
    u64 p;
    using T = u64;
    T from_long(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<T>(r);
    }
    T from_scalar(const Scalar& s) const { return s.value().get_num().get_ui(); }
    Scalar to_scalar(const T& v) const { return Scalar(mpq_class(mpz_class(static_cast<unsigned long>(v)))); }
    static bool is_zero(T x) { return x == 0; }
    T mul(T a, T b) const { return static_cast<T>(static_cast<u128>(a) * b % p); }
    void add_mul(T& y, T f, T x) const { y = (y + mul(f, x)) % p; }
    void sub_mul(T& y, T f, T x) const {
        T t = mul(f, x);
        y = y >= t ? y - t : y + (p - t);
    }
    void add(T& y, T x) const { y = (y + x) % p; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const {
        T result = 1;
        T base = a;
        u64 e = p - 2;
        while (e != 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }
};

}  // namespace

struct MatrixAccess {
    static std::vector<mpq_class>& data(Matrix& m, const QOps&) { return m.q_; }
    static const std::vector<mpq_class>& data(const Matrix& m, const QOps&) { return m.q_; }
    static std::vector<u64>& data(Matrix& m, const POps&) { return m.p_; }
    static const std::vector<u64>& data(const Matrix& m, const POps&) { return m.p_; }
};

namespace {

template <class Fn>
decltype(auto) dispatch(const FieldSpec& field, Fn&& fn) {
    if (field.is_prime()) return fn(POps{field.p});
    return fn(QOps{});
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
    if (!(a.field() == b.field())) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

/// In-place row reduction of a rows x cols block stored row-major.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::vector<typename Ops::T>& a, std::size_t rows,
                                   std::size_t cols, bool reduce_above) {
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t found = rows;
        for (std::size_t r = row; r < rows; ++r) {
            if (!Ops::is_zero(a[r * cols + c])) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        if (found != row) {
            for (std::size_t k = c; k < cols; ++k) std::swap(a[found * cols + k], a[row * cols + k]);
        }
        T inv = ops.inv(a[row * cols + c]);
        support.clear();
        for (std::size_t k = c; k < cols; ++k) {
            T& x = a[row * cols + k];
            if (!Ops::is_zero(x)) {
                x = ops.mul(x, inv);
                support.push_back(k);
            }
        }
        for (std::size_t r = reduce_above ? 0 : row + 1; r < rows; ++r) {
            if (r == row) continue;
            T f = a[r * cols + c];
            if (Ops::is_zero(f)) continue;
            for (std::size_t k : support) ops.sub_mul(a[r * cols + k], f, a[row * cols + k]);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
    if (field_.is_prime()) {
        p_.assign(rows * cols, 0);
    } else {
        q_.assign(rows * cols, mpq_class(0));
    }
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1L);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    Matrix m(field, nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw std::invalid_argument("ragged matrix rows");
        std::size_t c = 0;
        for (long v : row) m.set(r, c++, v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    return dispatch(field_, [&](const auto& ops) { return ops.to_scalar(MatrixAccess::data(*this, ops)[r * cols_ + c]); });
}

bool Matrix::entry_is_zero(std::size_t r, std::size_t c) const {
    return field_.is_prime() ? p_[r * cols_ + c] == 0 : sgn(q_[r * cols_ + c]) == 0;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    Scalar reduced = Scalar::in_field(field_, v.value());
    dispatch(field_, [&](const auto& ops) { MatrixAccess::data(*this, ops)[r * cols_ + c] = ops.from_scalar(reduced); });
}

void Matrix::set(std::size_t r, std::size_t c, long v) {
    dispatch(field_, [&](const auto& ops) { MatrixAccess::data(*this, ops)[r * cols_ + c] = ops.from_long(v); });
}

void Matrix::add(std::size_t r, std::size_t c, long v) {
    dispatch(field_, [&](const auto& ops) { ops.add(MatrixAccess::data(*this, ops)[r * cols_ + c], ops.from_long(v)); });
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) {
    Scalar reduced = Scalar::in_field(field_, v.value());
    dispatch(field_, [&](const auto& ops) { ops.add(MatrixAccess::data(*this, ops)[r * cols_ + c], ops.from_scalar(reduced)); });
}

bool Matrix::is_zero() const {
    if (field_.is_prime()) {
        for (u64 x : p_)
            if (x != 0) return false;
        return true;
    }
    for (const auto& x : q_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
    require_same_field(*this, other, "multiply");
    if (cols_ != other.rows_) throw std::invalid_argument("multiply: shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    dispatch(field_, [&](const auto& ops) {
        const auto& a = MatrixAccess::data(*this, ops);
        const auto& b = MatrixAccess::data(other, ops);
        auto& c = MatrixAccess::data(out, ops);
        const std::size_t n = other.cols_;
        // Nonzero pattern of b's rows, reused for every row of a.
        std::vector<std::vector<std::size_t>> brow(other.rows_);
        for (std::size_t k = 0; k < other.rows_; ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (!ops.is_zero(b[k * n + j])) brow[k].push_back(j);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto& x = a[i * cols_ + k];
                if (ops.is_zero(x)) continue;
                for (std::size_t j : brow[k]) ops.add_mul(c[i * n + j], x, b[k * n + j]);
            }
        }
    });
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    require_same_field(*this, other, "add");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("add: shape mismatch");
    Matrix out = *this;
    out.add_block(0, 0, other, 1);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    require_same_field(*this, other, "subtract");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("subtract: shape mismatch");
    Matrix out = *this;
    out.add_block(0, 0, other, -1);
    return out;
}

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(long factor) const {
    Matrix out = *this;
    dispatch(field_, [&](const auto& ops) {
        auto f = ops.from_long(factor);
        for (auto& x : MatrixAccess::data(out, ops))
            if (!ops.is_zero(x)) x = ops.mul(x, f);
    });
    return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
    Matrix out = *this;
    Scalar reduced = Scalar::in_field(field_, factor.value());
    dispatch(field_, [&](const auto& ops) {
        auto f = ops.from_scalar(reduced);
        for (auto& x : MatrixAccess::data(out, ops))
            if (!ops.is_zero(x)) x = ops.mul(x, f);
    });
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    dispatch(field_, [&](const auto& ops) {
        const auto& a = MatrixAccess::data(*this, ops);
        auto& b = MatrixAccess::data(out, ops);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) b[c * rows_ + r] = a[r * cols_ + c];
    });
    return out;
}

Matrix Matrix::kron(const Matrix& other) const {
    require_same_field(*this, other, "kron");
    Matrix out(field_, rows_ * other.rows_, cols_ * other.cols_);
    dispatch(field_, [&](const auto& ops) {
        const auto& a = MatrixAccess::data(*this, ops);
        const auto& b = MatrixAccess::data(other, ops);
        auto& c = MatrixAccess::data(out, ops);
        const std::size_t oc = out.cols_;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const auto& x = a[i * cols_ + j];
                if (ops.is_zero(x)) continue;
                for (std::size_t k = 0; k < other.rows_; ++k)
                    for (std::size_t l = 0; l < other.cols_; ++l) {
                        const auto& y = b[k * other.cols_ + l];
                        if (!ops.is_zero(y)) c[(i * other.rows_ + k) * oc + j * other.cols_ + l] = ops.mul(x, y);
                    }
            }
    });
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
    Matrix out(field_, nr, nc);
    dispatch(field_, [&](const auto& ops) {
        const auto& a = MatrixAccess::data(*this, ops);
        auto& b = MatrixAccess::data(out, ops);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b[r * nc + c] = a[(r0 + r) * cols_ + c0 + c];
    });
    return out;
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b, long factor) {
    require_same_field(*this, b, "add_block");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("add_block outside matrix");
    if (factor == 0) return;
    dispatch(field_, [&](const auto& ops) {
        auto& a = MatrixAccess::data(*this, ops);
        const auto& src = MatrixAccess::data(b, ops);
        auto f = ops.from_long(factor);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const auto& x = src[r * b.cols_ + c];
                if (!ops.is_zero(x)) ops.add_mul(a[(r0 + r) * cols_ + c0 + c], f, x);
            }
    });
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, idx.size(), cols_);
    dispatch(field_, [&](const auto& ops) {
        const auto& a = MatrixAccess::data(*this, ops);
        auto& b = MatrixAccess::data(out, ops);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < cols_; ++c) b[r * cols_ + c] = a[idx[r] * cols_ + c];
    });
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    dispatch(field_, [&](const auto& ops) {
        const auto& a = MatrixAccess::data(*this, ops);
        auto& b = MatrixAccess::data(out, ops);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) b[r * idx.size() + c] = a[r * cols_ + idx[c]];
    });
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "hstack");
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
    out.add_block(0, 0, a);
    out.add_block(0, a.cols_, b);
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "vstack");
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
    out.add_block(0, 0, a);
    out.add_block(a.rows_, 0, b);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : ",[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ",") << at(r, c).str();
        os << ']';
    }
    os << ']';
    return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.p_ == b.p_;
}

RowEchelon row_echelon(const Matrix& m) {
    RowEchelon out{m, {}};
    dispatch(m.field(), [&](const auto& ops) {
        out.pivot_cols = eliminate(ops, MatrixAccess::data(out.reduced, ops), m.rows(), m.cols(), true);
    });
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Matrix work = m;
    return dispatch(m.field(), [&](const auto& ops) {
        return eliminate(ops, MatrixAccess::data(work, ops), m.rows(), m.cols(), false).size();
    });
}

Matrix kernel_basis(const Matrix& m) {
    RowEchelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.field(), m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        k.set(free_cols[t], t, 1L);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
            if (e.reduced.entry_is_zero(r, free_cols[t])) continue;
            Scalar v = e.reduced.at(r, free_cols[t]);
            k.set(e.pivot_cols[r], t, Scalar(-v.value()));
        }
    }
    return k;
}

Matrix image_basis(const Matrix& m) {
    RowEchelon e = row_echelon(m.transpose());
    return e.reduced.block(0, 0, e.pivot_cols.size(), m.rows()).transpose();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    RowEchelon e = row_echelon(Matrix::hstack(a, b));
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        std::size_t pc = e.pivot_cols[r];
        if (pc >= a.cols()) return std::nullopt;
        x.add_block(pc, 0, e.reduced.block(r, a.cols(), 1, b.cols()));
    }
    return x;
}

}  // namespace lkd
