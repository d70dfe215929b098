#include "grm/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace grm {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<std::int64_t>>& entries)
    : IntMatrix(rows, cols)
{
    if (entries.size() != rows)
        throw std::invalid_argument("IntMatrix: row count mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols)
            throw std::invalid_argument("IntMatrix: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            (*this)(r, c) = static_cast<long>(entries[r][c]);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor)
{
    if (factor == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor)
{
    if (factor == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

mpz_class determinant(const IntMatrix& input)
{
    if (input.rows() != input.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix a = input;
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    while (r < n && D(r, r) != 0)
        ++r;
    return r;
}

std::vector<mpz_class> SmithForm::diagonal() const
{
    std::vector<mpz_class> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(D(i, i));
    return d;
}

namespace {

// Row and column operations on D, mirrored into the transforms and their inverses.
struct SmithState {
    SmithForm f;

    void row_add(std::size_t dst, std::size_t src, const mpz_class& q)
    {
        f.D.add_row_multiple(dst, src, q);
        f.U.add_row_multiple(dst, src, q);
        f.U_inv.add_col_multiple(src, dst, -q);
    }
    void col_add(std::size_t dst, std::size_t src, const mpz_class& q)
    {
        f.D.add_col_multiple(dst, src, q);
        f.V.add_col_multiple(dst, src, q);
        f.V_inv.add_row_multiple(src, dst, -q);
    }
    void row_swap(std::size_t a, std::size_t b)
    {
        f.D.swap_rows(a, b);
        f.U.swap_rows(a, b);
        f.U_inv.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        f.D.swap_cols(a, b);
        f.V.swap_cols(a, b);
        f.V_inv.swap_rows(a, b);
    }
    void row_negate(std::size_t r)
    {
        f.D.negate_row(r);
        f.U.negate_row(r);
        f.U_inv.negate_col(r);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithState s{SmithForm{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
                           IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())}};
    IntMatrix& d = s.f.D;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t pr = t, pc = t;
            mpz_class best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) == 0)
                        continue;
                    mpz_class a = abs(d(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found)
                return std::move(s.f);
            s.row_swap(t, pr);
            s.col_swap(t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0)
                    continue;
                mpz_class q = d(i, t) / d(t, t);
                s.row_add(i, t, -q);
                if (d(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0)
                    continue;
                mpz_class q = d(t, j) / d(t, t);
                s.col_add(j, t, -q);
                if (d(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;

            // divisibility chain: fold an offending row into the pivot row and retry
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        s.row_add(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (d(t, t) < 0)
            s.row_negate(t);
    }
    return std::move(s.f);
}

} // namespace grm
