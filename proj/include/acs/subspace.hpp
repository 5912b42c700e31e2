#ifndef ACS_SUBSPACE_HPP
#define ACS_SUBSPACE_HPP

#include <acs/matrix.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace acs {

/// Linear subspace of an ambient coordinate space, stored as the reduced row
/// echelon basis of its row span. The echelon form is a canonical
/// representative: two subspaces are equal iff their stored bases are equal
/// entry-wise, which makes certificate comparison bit-exact.
template <class T> class SubspaceT {
public:
    SubspaceT() = default;

    static SubspaceT from_rows(const Mat<T>& rows)
    {
        const RrefResult<T> r = rref(rows);
        SubspaceT s;
        s.ambient_ = rows.cols();
        s.pivots_ = r.pivots;
        s.basis_ = Mat<T>(r.rank, rows.cols());
        for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.m.row(i));
        return s;
    }

    static SubspaceT from_vectors(std::size_t ambient, const std::vector<Vec<T>>& vs)
    {
        Mat<T> rows(vs.size(), ambient);
        for (std::size_t i = 0; i < vs.size(); ++i) rows.set_row(i, vs[i]);
        return from_rows(rows);
    }

    static SubspaceT zero(std::size_t ambient)
    {
        SubspaceT s;
        s.ambient_ = ambient;
        s.basis_ = Mat<T>(0, ambient);
        return s;
    }

    static SubspaceT full(std::size_t ambient) { return from_rows(Mat<T>::identity(ambient)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat<T>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates that are not pivot columns of the echelon basis; they index
    /// a canonical complement.
    std::vector<std::size_t> complement_coords() const
    {
        std::vector<bool> is_pivot(ambient_, false);
        for (std::size_t p : pivots_) is_pivot[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!is_pivot[c]) out.push_back(c);
        return out;
    }

    /// Remainder of v after eliminating against the echelon basis; zero iff
    /// v lies in the subspace.
    Vec<T> reduce(const Vec<T>& v) const
    {
        if (v.size() != ambient_) throw error("ambient dimension mismatch");
        Vec<T> r = v;
        for (std::size_t row = 0; row < basis_.rows(); ++row) {
            const T& c = r[pivots_[row]];
            if (scalar::is_zero(c)) continue;
            const T f = c;
            for (std::size_t j = 0; j < ambient_; ++j) r[j] = r[j] - f * basis_(row, j);
        }
        return r;
    }

    bool contains(const Vec<T>& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const SubspaceT& other) const
    {
        if (other.ambient_ != ambient_) throw error("ambient dimension mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Coefficients of v in the echelon basis, or nullopt if v is outside.
    /// For an RREF basis these are just v's entries at the pivot columns.
    std::optional<Vec<T>> coords(const Vec<T>& v) const
    {
        if (!contains(v)) return std::nullopt;
        Vec<T> c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    Vec<T> from_coords(const Vec<T>& c) const
    {
        if (c.size() != dim()) throw error("coordinate length mismatch");
        Vec<T> v(ambient_, T(0));
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) v[j] += c[i] * basis_(i, j);
        return v;
    }

    /// Basis of {phi : phi . v = 0 for all v here} (dual vectors as rows).
    Mat<T> annihilator() const { return kernel_basis(basis_); }

    friend SubspaceT span_sum(const SubspaceT& a, const SubspaceT& b)
    {
        if (a.ambient_ != b.ambient_) throw error("ambient dimension mismatch");
        Mat<T> rows(a.dim() + b.dim(), a.ambient_);
        for (std::size_t i = 0; i < a.dim(); ++i) rows.set_row(i, a.basis_.row(i));
        for (std::size_t i = 0; i < b.dim(); ++i) rows.set_row(a.dim() + i, b.basis_.row(i));
        return from_rows(rows);
    }

    /// Intersection as the joint kernel of both annihilators.
    friend SubspaceT span_intersect(const SubspaceT& a, const SubspaceT& b)
    {
        if (a.ambient_ != b.ambient_) throw error("ambient dimension mismatch");
        const Mat<T> na = a.annihilator();
        const Mat<T> nb = b.annihilator();
        Mat<T> stacked(na.rows() + nb.rows(), a.ambient_);
        for (std::size_t i = 0; i < na.rows(); ++i) stacked.set_row(i, na.row(i));
        for (std::size_t i = 0; i < nb.rows(); ++i) stacked.set_row(na.rows() + i, nb.row(i));
        return from_rows(kernel_basis(stacked));
    }

    friend bool operator==(const SubspaceT& a, const SubspaceT& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const SubspaceT& a, const SubspaceT& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    Mat<T> basis_;
    std::vector<std::size_t> pivots_;
};

using Subspace = SubspaceT<Rational>;
using CSubspace = SubspaceT<GaussianRational>;

template <class T> SubspaceT<T> kernel(const Mat<T>& m)
{
    return SubspaceT<T>::from_rows(kernel_basis(m));
}

template <class T> SubspaceT<T> image(const Mat<T>& m)
{
    return SubspaceT<T>::from_rows(m.transpose());
}

/// Preimage {x : p x in v} of a subspace under a linear map.
template <class T> SubspaceT<T> preimage(const Mat<T>& p, const SubspaceT<T>& v)
{
    if (v.ambient_dim() != p.rows()) throw error("preimage dimension mismatch");
    const Mat<T> ann = v.annihilator(); // v = kernel of ann
    return kernel(Mat<T>(ann * p));
}

template <class T> SubspaceT<T> apply_to_subspace(const Mat<T>& p, const SubspaceT<T>& v)
{
    Mat<T> rows(v.dim(), p.rows());
    for (std::size_t i = 0; i < v.dim(); ++i) rows.set_row(i, p.apply(v.basis().row(i)));
    return SubspaceT<T>::from_rows(rows);
}

/// {X : X M = M X for all M in mats}, as a subspace of n x n matrices
/// flattened row-major to n^2-vectors. Computed as the kernel of the stacked
/// linear system (X M - M X)_{ij} = 0.
inline Subspace commutant(const std::vector<Matrix>& mats, std::size_t n)
{
    for (const Matrix& m : mats)
        if (m.rows() != n || m.cols() != n) throw error("commutant: matrix size mismatch");
    Matrix system(mats.size() * n * n, n * n);
    std::size_t row = 0;
    for (const Matrix& m : mats) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // coefficient of X_ab in (X M - M X)_{ij}
                for (std::size_t b = 0; b < n; ++b) system(row, i * n + b) += m(b, j);
                for (std::size_t a = 0; a < n; ++a) system(row, a * n + j) -= m(i, a);
                ++row;
            }
    }
    return kernel(system);
}

} // namespace acs

#endif
