#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace grm {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<std::int64_t>>& entries);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;

    IntMatrix transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
mpz_class determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, non-negative, d_1 | d_2 | ...
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    /// Inverses of U and V, maintained alongside so callers need not invert.
    IntMatrix U_inv;
    IntMatrix V_inv;

    std::size_t rank() const;
    std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

} // namespace grm
