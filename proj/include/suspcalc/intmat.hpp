#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace suspcalc {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. All arithmetic is exact.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }

    // row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(dst, k) += c * (*this)(src, k);
    }

    // col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, dst) += c * (*this)(k, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) = -(*this)(i, k);
    }

    IntMat operator*(const IntMat& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMat multiply: shape mismatch " + shape_str() + " * " + o.shape_str());
        IntMat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += v * o(k, j);
            }
        return r;
    }

    std::vector<Int> mul_vec(const std::vector<Int>& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("IntMat mul_vec: shape mismatch");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0)
                    r[i] += (*this)(i, j) * x[j];
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const std::vector<Int>& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = c[i];
    }

    // [A | B] with matching row counts
    static IntMat hconcat(const IntMat& a, const IntMat& b) {
        if (a.rows() != b.rows())
            throw std::invalid_argument("IntMat hconcat: row mismatch " + a.shape_str() + " | " + b.shape_str());
        IntMat r(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, a.cols() + j) = b(i, j);
        }
        return r;
    }

    std::string shape_str() const {
        std::ostringstream os;
        os << rows_ << "x" << cols_;
        return os.str();
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? "," : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// U * M * V = diag(d), U and V unimodular, d[0] | d[1] | ... , entries >= 0.
struct SmithResult {
    std::vector<Int> diag;  // length min(rows, cols)
    IntMat U, V;

    std::size_t rank() const {
        std::size_t r = 0;
        while (r < diag.size() && diag[r] != 0) ++r;
        return r;
    }
};

inline SmithResult smith_normal_form(const IntMat& M) {
    const std::size_t m = M.rows(), n = M.cols();
    SmithResult res;
    res.U = IntMat::identity(m);
    res.V = IntMat::identity(n);
    IntMat S = M;
    const std::size_t d = std::min(m, n);

    for (std::size_t t = 0; t < d; ++t) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (S(i, j) == 0) continue;
                Int v = abs(S(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        S.swap_rows(t, pi);
        res.U.swap_rows(t, pi);
        S.swap_cols(t, pj);
        res.V.swap_cols(t, pj);

        for (;;) {
            // clear column t; a nonzero remainder becomes a smaller pivot
            bool again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Int q = S(i, t) / S(t, t);
                if (q != 0) {
                    S.add_row_multiple(i, t, -q);
                    res.U.add_row_multiple(i, t, -q);
                }
                if (S(i, t) != 0) {
                    S.swap_rows(t, i);
                    res.U.swap_rows(t, i);
                    again = true;
                    break;
                }
            }
            if (again) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Int q = S(t, j) / S(t, t);
                if (q != 0) {
                    S.add_col_multiple(j, t, -q);
                    res.V.add_col_multiple(j, t, -q);
                }
                if (S(t, j) != 0) {
                    S.swap_cols(t, j);
                    res.V.swap_cols(t, j);
                    again = true;
                    break;
                }
            }
            if (again) continue;

            // divisibility of the trailing block by the pivot
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.add_row_multiple(t, i, 1);
                        res.U.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (S(t, t) < 0) {
            S.negate_row(t);
            res.U.negate_row(t);
        }
    }

    res.diag.resize(d);
    for (std::size_t t = 0; t < d; ++t)
        res.diag[t] = S(t, t);
    return res;
}

// Columns form a basis of the lattice { x : M x = 0 }.
inline IntMat kernel_basis(const IntMat& M) {
    SmithResult s = smith_normal_form(M);
    const std::size_t n = M.cols();
    const std::size_t r = s.rank();
    IntMat K(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            K(i, j - r) = s.V(i, j);
    return K;
}

// One integral solution of M x = b, if any.
inline std::optional<std::vector<Int>> solve(const IntMat& M, const std::vector<Int>& b) {
    if (b.size() != M.rows())
        throw std::invalid_argument("solve: rhs size mismatch");
    SmithResult s = smith_normal_form(M);
    std::vector<Int> ub = s.U.mul_vec(b);
    std::vector<Int> y(M.cols());
    const std::size_t d = s.diag.size();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i < d && s.diag[i] != 0) {
            if (ub[i] % s.diag[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V.mul_vec(y);
}

// Solve M X = B columnwise.
inline std::optional<IntMat> solve_mat(const IntMat& M, const IntMat& B) {
    IntMat X(M.cols(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        auto x = solve(M, B.col(j));
        if (!x) return std::nullopt;
        X.set_col(j, *x);
    }
    return X;
}

}  // namespace suspcalc
