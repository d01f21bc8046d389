#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lkd/field.hpp"

namespace lkd {

/// Dense row-major matrix over a FieldSpec. Entries are always stored reduced:
/// lowest terms over Q, residues in [0, p) over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldSpec field, std::size_t n);
    static Matrix from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar at(std::size_t r, std::size_t c) const;
    bool entry_is_zero(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);
    void set(std::size_t r, std::size_t c, long v);
    /// this(r, c) += v
    void add(std::size_t r, std::size_t c, long v);
    void add(std::size_t r, std::size_t c, const Scalar& v);
    bool is_zero() const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(long factor) const;
    Matrix scaled(const Scalar& factor) const;
    Matrix transpose() const;
    /// Kronecker product with this as the slow (outer) index.
    Matrix kron(const Matrix& other) const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// this[r0.., c0..] += factor * b
    void add_block(std::size_t r0, std::size_t c0, const Matrix& b, long factor = 1);
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    std::string to_string() const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    friend struct MatrixAccess;

    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> q_;
    std::vector<std::uint64_t> p_;
};

/// Reduced row echelon form with leftmost pivots.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

RowEchelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form the canonical kernel basis: identity on the free columns of the RREF.
Matrix kernel_basis(const Matrix& m);
/// Columns form the image basis in reduced column echelon form.
Matrix image_basis(const Matrix& m);
/// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace lkd
