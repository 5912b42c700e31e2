#ifndef ACS_MATRIX_HPP
#define ACS_MATRIX_HPP

#include <acs/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace acs {

template <class T> using Vec = std::vector<T>;

template <class T> bool vec_is_zero(const Vec<T>& v)
{
    for (const T& x : v)
        if (!scalar::is_zero(x)) return false;
    return true;
}

template <class T> Vec<T> vec_add(const Vec<T>& a, const Vec<T>& b)
{
    if (a.size() != b.size()) throw error("vector length mismatch");
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class T> Vec<T> vec_sub(const Vec<T>& a, const Vec<T>& b)
{
    if (a.size() != b.size()) throw error("vector length mismatch");
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class T> Vec<T> vec_scale(const T& c, const Vec<T>& a)
{
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

template <class T> Vec<T> vec_neg(const Vec<T>& a) { return vec_scale(T(-1), a); }

/// Dense row-major matrix over an exact field. Dimensions in this project
/// stay small (<= ~30 for algebras, <= ~400 for vectorized endomorphisms),
/// so no sparsity machinery.
template <class T> class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw error("ragged matrix initializer");
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Mat identity(std::size_t n)
    {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const
    {
        for (const T& x : e_)
            if (!scalar::is_zero(x)) return false;
        return true;
    }

    Vec<T> row(std::size_t i) const
    {
        return Vec<T>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }
    Vec<T> col(std::size_t j) const
    {
        Vec<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(std::size_t i, const Vec<T>& v)
    {
        if (v.size() != cols_) throw error("row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_col(std::size_t j, const Vec<T>& v)
    {
        if (v.size() != rows_) throw error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Row-major flattening; endomorphisms of R^n live in R^(n^2) this way.
    Vec<T> vec() const { return e_; }
    static Mat from_vec(std::size_t rows, std::size_t cols, const Vec<T>& v)
    {
        if (v.size() != rows * cols) throw error("vec length mismatch");
        Mat m(rows, cols);
        m.e_ = v;
        return m;
    }

    Vec<T> apply(const Vec<T>& x) const
    {
        if (x.size() != cols_) throw error("matrix-vector dimension mismatch");
        Vec<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!scalar::is_zero(x[j])) acc += (*this)(i, j) * x[j];
            }
            y[i] = acc;
        }
        return y;
    }

    friend Mat operator+(const Mat& a, const Mat& b)
    {
        check_same_shape(a, b);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b)
    {
        check_same_shape(a, b);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Mat operator-(const Mat& a)
    {
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = -a.e_[k];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b)
    {
        if (a.cols_ != b.rows_) throw error("matrix product dimension mismatch");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (scalar::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Mat operator*(const T& c, const Mat& a)
    {
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    static void check_same_shape(const Mat& a, const Mat& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> e_;
};

template <class T> struct RrefResult {
    Mat<T> m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // column index per pivot row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Idempotent.
template <class T> RrefResult<T> rref(const Mat<T>& in)
{
    RrefResult<T> res{in, 0, {}};
    Mat<T>& m = res.m;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!scalar::is_zero(m(i, c))) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || scalar::is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

template <class T> std::size_t rank(const Mat<T>& m) { return rref(m).rank; }

/// Basis of the null space {x : m x = 0}, one vector per row of the result.
/// dim kernel + rank = cols.
template <class T> Mat<T> kernel_basis(const Mat<T>& m)
{
    const RrefResult<T> r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat<T> basis(free_cols.size(), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(k, fc) = T(1);
        for (std::size_t pr = 0; pr < r.rank; ++pr) basis(k, r.pivots[pr]) = -r.m(pr, fc);
    }
    return basis;
}

/// Exact inverse via [m | I] elimination; nullopt when singular.
template <class T> std::optional<Mat<T>> inverse(const Mat<T>& m)
{
    if (!m.is_square()) throw error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    const RrefResult<T> r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (r.m(i, i) != T(1)) return std::nullopt;
    Mat<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
    return inv;
}

/// Exact determinant by Gaussian elimination with row-swap sign tracking.
template <class T> T determinant(const Mat<T>& in)
{
    if (!in.is_square()) throw error("determinant of non-square matrix");
    Mat<T> m = in;
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (!scalar::is_zero(m(i, c))) {
                pivot = i;
                break;
            }
        if (pivot == n) return T(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            det = -det;
        }
        det = det * m(c, c);
        const T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (scalar::is_zero(m(i, c))) continue;
            const T f = inv * m(i, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

/// One solution of a x = b (free variables set to 0), or nullopt if
/// inconsistent. The particular solution depends linearly on b.
template <class T> std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b)
{
    if (b.size() != a.rows()) throw error("solve dimension mismatch");
    Mat<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const RrefResult<T> r = rref(aug);
    for (std::size_t pr = 0; pr < r.rank; ++pr)
        if (r.pivots[pr] == a.cols()) return std::nullopt;
    Vec<T> x(a.cols(), T(0));
    for (std::size_t pr = 0; pr < r.rank; ++pr) x[r.pivots[pr]] = r.m(pr, a.cols());
    return x;
}

using Matrix = Mat<Rational>;
using Vector = Vec<Rational>;
using CMatrix = Mat<GaussianRational>;
using CVector = Vec<GaussianRational>;

/// A linear map is its matrix in the fixed basis; column j is the image of e_j.
using LinearMap = Matrix;

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
}

inline CVector complexify(const Vector& v)
{
    CVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = GaussianRational(v[i]);
    return w;
}

inline CMatrix complexify(const Matrix& m)
{
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = GaussianRational(m(i, j));
    return c;
}

} // namespace acs

#endif
