#include "grm/matrix.hpp"

#include <omp.h>

#include <utility>

namespace grm::kernels {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    auto ra = m.row(a);
    auto rb = m.row(b);
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(ra[c], rb[c]);
}

// Scale the pivot row so the pivot entry becomes 1.
void normalize_pivot_row(Matrix& m, std::size_t r, std::size_t c)
{
    const Field& f = m.field();
    const Scalar inv = f.inv(m(r, c));
    auto row = m.row(r);
    for (std::size_t j = c; j < m.cols(); ++j)
        if (!Field::is_zero(row[j]))
            row[j] = f.mul(row[j], inv);
}

// row[i] -= row[i][c] * row[pivot]; columns left of c are already zero in both rows.
void eliminate_row(Matrix& m, std::size_t i, std::size_t pivot, std::size_t c)
{
    const Field& f = m.field();
    const Scalar factor = m(i, c);
    auto target = m.row(i);
    auto source = m.row(pivot);
    for (std::size_t j = c; j < m.cols(); ++j)
        if (!Field::is_zero(source[j]))
            target[j] = f.sub(target[j], f.mul(factor, source[j]));
}

std::size_t find_pivot(const Matrix& m, std::size_t from, std::size_t c)
{
    for (std::size_t r = from; r < m.rows(); ++r)
        if (!Field::is_zero(m(r, c)))
            return r;
    return m.rows();
}

} // namespace

Echelon row_echelon_serial(Matrix m)
{
    Echelon e;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        const std::size_t p = find_pivot(m, rank, c);
        if (p == m.rows())
            continue;
        swap_rows(m, rank, p);
        normalize_pivot_row(m, rank, c);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != rank && !Field::is_zero(m(i, c)))
                eliminate_row(m, i, rank, c);
        e.pivots.push_back(c);
        ++rank;
    }
    e.reduced = std::move(m);
    return e;
}

Echelon row_echelon_parallel(Matrix m)
{
    Echelon e;
    std::size_t rank = 0;
    const auto rows = static_cast<std::ptrdiff_t>(m.rows());
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        const std::size_t p = find_pivot(m, rank, c);
        if (p == m.rows())
            continue;
        swap_rows(m, rank, p);
        normalize_pivot_row(m, rank, c);
        const auto pivot = static_cast<std::ptrdiff_t>(rank);
        // each row update reads only the pivot row and writes only its own row
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < rows; ++i)
            if (i != pivot && !Field::is_zero(m(static_cast<std::size_t>(i), c)))
                eliminate_row(m, static_cast<std::size_t>(i), rank, c);
        e.pivots.push_back(c);
        ++rank;
    }
    e.reduced = std::move(m);
    return e;
}

} // namespace grm::kernels
