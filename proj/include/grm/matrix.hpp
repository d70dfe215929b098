#pragma once

#include "grm/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace grm {

using Vector = std::vector<Scalar>;

/// Dense exact matrix over a Field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals())
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols)
    {
    }
    Matrix(const std::vector<std::vector<long>>& entries, Field field = Field::rationals());

    static Matrix identity(std::size_t n, Field field = Field::rationals());
    static Matrix from_triplets(std::size_t rows, std::size_t cols,
                                const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& triplets,
                                Field field = Field::rationals());
    static Matrix column(const Vector& v, Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Assign with normalization into the field.
    void set(std::size_t r, std::size_t c, Scalar v);

    Vector col(std::size_t c) const;
    void set_col(std::size_t c, const Vector& v);

    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& rhs) const;

    Matrix transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    Matrix select_cols(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

/// Dispatches to the parallel elimination kernel above a size threshold, to the serial one below.
/// Pivoting is deterministic (first nonzero in column order), so both produce identical output.
Echelon row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space; cols() - rank(m) columns.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Throws std::invalid_argument on dimension mismatch.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Subspace of F^n held as a basis in reduced column echelon form: basis(pivot_rows[i], j) = delta_ij,
/// so coordinates of a member are read off at the pivot rows.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::size_t ambient, Field field) : basis_(ambient, 0, field) {}
    /// Span of the columns of m.
    static Subspace span(const Matrix& m);

    std::size_t ambient() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

    bool contains(const Vector& v) const;
    /// Coordinates of v in the basis; assumes contains(v).
    Vector coordinates(const Vector& v) const;
    /// Coordinates of every column of m; assumes each lies in the subspace.
    Matrix coordinates(const Matrix& m) const;

private:
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

namespace kernels {

/// Reference implementation.
Echelon row_echelon_serial(Matrix m);
/// Row updates of each pivot step distributed over OpenMP threads.
Echelon row_echelon_parallel(Matrix m);

/// Work (rows x cols) above which row_echelon switches to the parallel kernel.
inline constexpr std::size_t parallel_threshold = 4096;

} // namespace kernels

} // namespace grm
