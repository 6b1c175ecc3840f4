#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "crmap/scalar.hpp"

namespace Eigen {
// Storage-and-arithmetic use only: Eigen's own conjugation paths are never taken
// (IsComplex = 0); Hermitian operations are spelled out below.
template <>
struct NumTraits<crmap::Scalar> : GenericNumTraits<crmap::Scalar> {
    typedef crmap::Scalar Real;
    typedef crmap::Scalar NonInteger;
    typedef crmap::Scalar Nested;
    typedef crmap::Scalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
    static inline Real epsilon() { return crmap::Scalar(0); }
    static inline Real dummy_precision() { return crmap::Scalar(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace crmap {

using MatS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VecS = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;

inline Scalar conj(const Scalar& s) { return s.conj(); }

/// bilinear pairing <a,b> = sum a_i b_i (the paper's convention; not Hermitian)
inline Scalar bilinear(const VecS& a, const VecS& b) {
    Scalar out(0);
    for (Eigen::Index i = 0; i < a.size(); i++) out += a(i) * b(i);
    return out;
}

/// Hermitian pairing sum a_i conj(b_i)
inline Scalar hdot(const VecS& a, const VecS& b) {
    Scalar out(0);
    for (Eigen::Index i = 0; i < a.size(); i++) out += a(i) * b(i).conj();
    return out;
}

inline Scalar norm2(const VecS& a) { return hdot(a, a); }

/// exact rank by fraction-free (Bareiss) Gaussian elimination
inline int bareiss_rank(MatS M) {
    const Eigen::Index rows = M.rows(), cols = M.cols();
    Scalar prev(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; c++) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; i++)
            if (!M(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (Eigen::Index j = 0; j < cols; j++) std::swap(M(piv, j), M(r, j));
        Scalar prev_inv = prev.inverse();
        for (Eigen::Index i = r + 1; i < rows; i++) {
            for (Eigen::Index j = c + 1; j < cols; j++)
                M(i, j) = (M(r, c) * M(i, j) - M(i, c) * M(r, j)) * prev_inv;
            M(i, c) = Scalar(0);
        }
        prev = M(r, c);
        r++;
    }
    return static_cast<int>(r);
}

inline MatS conj_transpose(const MatS& M) {
    MatS out(M.cols(), M.rows());
    for (Eigen::Index i = 0; i < M.rows(); i++)
        for (Eigen::Index j = 0; j < M.cols(); j++) out(j, i) = M(i, j).conj();
    return out;
}

inline bool is_unitary(const MatS& U) {
    if (U.rows() != U.cols()) return false;
    MatS P = U * conj_transpose(U);
    for (Eigen::Index i = 0; i < P.rows(); i++)
        for (Eigen::Index j = 0; j < P.cols(); j++) {
            Scalar want = (i == j) ? Scalar(1) : Scalar(0);
            if (!(P(i, j) == want)) return false;
        }
    return true;
}

struct FloatRank {
    int rank = 0;
    double min_kept_rel = 0.0;     // smallest kept singular value / largest
    double max_dropped_rel = 0.0;  // largest dropped singular value / largest
};

/// numeric rank: singular values below tol * sigma_max are treated as zero
inline FloatRank svd_rank(const MatC& M, double tol = 1e-8) {
    FloatRank out;
    if (M.rows() == 0 || M.cols() == 0) return out;
    Eigen::JacobiSVD<MatC> svd(M);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    if (smax == 0.0) return out;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        double rel = sv(i) / smax;
        if (rel > tol) {
            out.rank++;
            out.min_kept_rel = rel;
        } else {
            out.max_dropped_rel = std::max(out.max_dropped_rel, rel);
        }
    }
    return out;
}

}  // namespace crmap
