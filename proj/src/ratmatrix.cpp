#include "jsk/ratmatrix.hpp"

#include "jsk/errors.hpp"
#include "jsk/polygcd.hpp"

namespace jsk {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape");
    RatMatrix r(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

int rank_exact(const RatMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    // Clear denominators row by row so Bareiss can divide exactly in Z.
    std::vector<std::vector<Integer>> a(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        Integer scale = 1;
        for (int j = 0; j < cols; ++j)
            scale = lcm(scale, m.at(i, j).get_den());
        a[static_cast<size_t>(i)].resize(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            Rational v = m.at(i, j) * Rational(scale);
            v.canonicalize();
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_num();
        }
    }

    int rank = 0;
    Integer prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        const std::vector<Integer>& pr = a[static_cast<size_t>(rank)];
        for (int i = rank + 1; i < rows; ++i) {
            std::vector<Integer>& ri = a[static_cast<size_t>(i)];
            for (int j = col + 1; j < cols; ++j) {
                Integer t = pr[static_cast<size_t>(col)] * ri[static_cast<size_t>(j)] -
                            ri[static_cast<size_t>(col)] * pr[static_cast<size_t>(j)];
                ri[static_cast<size_t>(j)] = t / prev;  // exact by Sylvester's identity
            }
            ri[static_cast<size_t>(col)] = 0;
        }
        prev = pr[static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

std::vector<int> rref_in_place(RatMatrix& m) {
    std::vector<int> pivots;
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Rational inv = 1 / m.at(r, col);
        for (int j = col; j < cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<int> pivots = rref_in_place(r);
    int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -r.at(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> left_kernel_basis(const RatMatrix& m) {
    return kernel_basis(m.transpose());
}

std::vector<Rational> primitive_scale(const std::vector<Rational>& v) {
    Rational g = 0;
    for (const Rational& c : v) g = rational_content_gcd(g, c);
    if (g == 0) return v;
    for (const Rational& c : v) {
        if (c != 0) {
            if (sign_of(c) < 0) g = -g;
            break;
        }
    }
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Rational& c : v) out.push_back(c / g);
    return out;
}

int poly_matrix_rank(const std::vector<std::vector<Polynomial>>& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<Polynomial>> a = m;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    VarFamily family = a[0][0].family();
    int n = a[0][0].vars();

    int rank = 0;
    Polynomial prev = Polynomial::constant(family, n, 1);
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (!a[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
        const std::vector<Polynomial>& pr = a[static_cast<size_t>(rank)];
        for (int i = rank + 1; i < rows; ++i) {
            std::vector<Polynomial>& ri = a[static_cast<size_t>(i)];
            for (int j = col + 1; j < cols; ++j) {
                Polynomial t = pr[static_cast<size_t>(col)] * ri[static_cast<size_t>(j)] -
                               ri[static_cast<size_t>(col)] * pr[static_cast<size_t>(j)];
                ri[static_cast<size_t>(j)] =
                    t.is_zero() ? t : polynomial_divide_exact(t, prev);
            }
            ri[static_cast<size_t>(col)] = Polynomial::zero(family, n);
        }
        prev = pr[static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

}  // namespace jsk
