#include "grm/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace grm {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

Matrix::Matrix(const std::vector<std::vector<long>>& entries, Field field)
    : Matrix(entries.size(), entries.empty() ? 0 : entries.front().size(), field)
{
    for (std::size_t r = 0; r < rows_; ++r) {
        require(entries[r].size() == cols_, "Matrix: ragged rows");
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(r, c) = field_.from_int(entries[r][c]);
    }
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_triplets(std::size_t rows, std::size_t cols,
                             const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& triplets, Field field)
{
    Matrix m(rows, cols, field);
    for (const auto& [r, c, v] : triplets) {
        require(r < rows && c < cols, "Matrix::from_triplets: index out of range");
        m(r, c) = field.add(m(r, c), v);
    }
    return m;
}

Matrix Matrix::column(const Vector& v, Field field)
{
    Matrix m(v.size(), 1, field);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v)
{
    field_.normalize(v);
    (*this)(r, c) = std::move(v);
}

Vector Matrix::col(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_col(std::size_t c, const Vector& v)
{
    require(v.size() == rows_, "Matrix::set_col: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    require(cols_ == rhs.rows_, "Matrix: dimension mismatch in product");
    Matrix out(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (Field::is_zero(a))
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs(k, j);
                if (!Field::is_zero(b))
                    out(i, j) += a * b;
            }
        }
    if (!field_.is_rational())
        for (auto& x : out.data_)
            field_.normalize(x);
    return out;
}

Vector Matrix::operator*(const Vector& v) const
{
    require(cols_ == v.size(), "Matrix: dimension mismatch in matrix-vector product");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = 0;
        for (std::size_t k = 0; k < cols_; ++k)
            if (!Field::is_zero(v[k]) && !Field::is_zero((*this)(i, k)))
                acc += (*this)(i, k) * v[k];
        field_.normalize(acc);
        out[i] = std::move(acc);
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "Matrix: shape mismatch in sum");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "Matrix: shape mismatch in difference");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x = field_.mul(x, s);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!Field::is_zero(x))
            return false;
    return true;
}

std::size_t Matrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& x : data_)
        n += Field::is_zero(x) ? 0 : 1;
    return n;
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    Matrix out(rows.size(), cols.size(), field_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const
{
    Matrix out(rows_, cols.size(), field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(i, cols[j]);
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const
{
    Matrix out(rows.size(), cols_, field_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = (*this)(rows[i], j);
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    require(a.rows_ == b.rows_, "Matrix::hstack: row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_, a.field_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols_; ++c)
            out(r, a.cols_ + c) = b(r, c);
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    require(a.cols_ == b.cols_, "Matrix::vstack: column mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_, a.field_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            out(a.rows_ + r, c) = b(r, c);
    return out;
}

std::string Matrix::to_string() const
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

Echelon row_echelon(Matrix m)
{
    if (m.rows() * m.cols() >= kernels::parallel_threshold)
        return kernels::row_echelon_parallel(std::move(m));
    return kernels::row_echelon_serial(std::move(m));
}

std::size_t rank(const Matrix& m)
{
    // eliminate along the shorter side
    if (m.rows() > m.cols())
        return row_echelon(m.transpose()).rank();
    return row_echelon(m).rank();
}

Matrix kernel_basis(const Matrix& m)
{
    const Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    const Field& f = m.field();
    Matrix k(m.cols(), m.cols() - e.rank(), f);
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        k(c, out) = 1;
        for (std::size_t i = 0; i < e.rank(); ++i)
            k(e.pivots[i], out) = f.neg(e.reduced(i, c));
        ++out;
    }
    return k;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                                    std::to_string(m.rows()));
    const Echelon e = row_echelon(Matrix::hstack(m, Matrix::column(b, m.field())));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
        x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

Subspace Subspace::span(const Matrix& m)
{
    const Echelon e = row_echelon(m.transpose());
    Subspace s;
    s.basis_ = Matrix(m.rows(), e.rank(), m.field());
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t r = 0; r < m.rows(); ++r)
            s.basis_(r, i) = e.reduced(i, r);
    s.pivots_ = e.pivots;
    return s;
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient())
        return false;
    const Field& f = basis_.field();
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (Field::is_zero(c))
            continue;
        for (std::size_t r = 0; r < ambient(); ++r)
            if (!Field::is_zero(basis_(r, i)))
                rest[r] = f.sub(rest[r], f.mul(c, basis_(r, i)));
    }
    for (const auto& x : rest)
        if (!Field::is_zero(x))
            return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        c[i] = v[pivots_[i]];
    return c;
}

Matrix Subspace::coordinates(const Matrix& m) const { return m.select_rows(pivots_); }

} // namespace grm
