#include "g2calc/linalg.hpp"

#include <cmath>
#include <cstddef>

#include "g2calc/errors.hpp"

namespace g2calc {

namespace {

std::size_t rows(const RatMat& a) { return a.size(); }
std::size_t cols(const RatMat& a) { return a.empty() ? 0 : a[0].size(); }

void check_rect(const RatMat& a) {
    for (const auto& row : a)
        if (row.size() != cols(a)) throw Error("ragged matrix");
}

}  // namespace

RatMat rat_identity(int n) {
    RatMat a(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rational(0)));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) a[i][i] = Rational(1);
    return a;
}

RatMat rat_transpose(const RatMat& a) {
    check_rect(a);
    RatMat t(cols(a), RatVec(rows(a), Rational(0)));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t j = 0; j < cols(a); ++j) t[j][i] = a[i][j];
    return t;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    if (cols(a) != rows(b)) throw DimensionMismatch("matrix product shape mismatch");
    RatMat r(rows(a), RatVec(cols(b), Rational(0)));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t k = 0; k < cols(a); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RatVec rat_apply(const RatMat& a, const RatVec& v) {
    if (cols(a) != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    RatVec r(rows(a), Rational(0));
    for (std::size_t i = 0; i < rows(a); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

int rat_rank(RatMat a) {
    check_rect(a);
    const std::size_t m = rows(a), n = cols(a);
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) continue;
        std::swap(a[pivot], a[row]);
        const Rational inv = a[row][col].reciprocal();
        for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rational rat_determinant(RatMat a) {
    check_rect(a);
    const std::size_t n = rows(a);
    if (n != cols(a)) throw DimensionMismatch("determinant of non-square matrix");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = a[col][col].reciprocal();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            const Rational f = a[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

std::optional<RatMat> rat_inverse(const RatMat& a) {
    check_rect(a);
    const std::size_t n = rows(a);
    if (n != cols(a)) throw DimensionMismatch("inverse of non-square matrix");
    RatMat aug(a);
    RatMat inv = rat_identity(static_cast<int>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(aug[pivot], aug[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = aug[col][col].reciprocal();
        for (std::size_t j = 0; j < n; ++j) {
            aug[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            const Rational f = aug[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                aug[i][j] -= f * aug[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
    check_rect(a);
    const std::size_t m = rows(a), n = cols(a);
    if (b.size() != m) throw DimensionMismatch("solve shape mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        const Rational inv = a[row][col].reciprocal();
        for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) return std::nullopt;  // inconsistent
    RatVec x(n, Rational(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

bool rat_positive_definite(const RatMat& a) {
    const std::size_t n = rows(a);
    if (n != cols(a)) throw DimensionMismatch("positive-definite test on non-square matrix");
    for (std::size_t k = 1; k <= n; ++k) {
        RatMat lead(k, RatVec(k, Rational(0)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
        if (rat_determinant(lead).sign() <= 0) return false;
    }
    return true;
}

double d_determinant(DMat a) {
    const std::size_t n = a.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[pivot][col])) pivot = i;
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

std::optional<DMat> d_inverse(DMat a) {
    const std::size_t n = a.size();
    DMat inv(n, DVec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[pivot][col])) pivot = i;
        if (a[pivot][col] == 0.0) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const double scale = 1.0 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0.0) continue;
            const double f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<DVec> d_solve(DMat a, DVec b) {
    auto inv = d_inverse(std::move(a));
    if (!inv) return std::nullopt;
    const std::size_t n = inv->size();
    DVec x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += (*inv)[i][j] * b[j];
    return x;
}

}  // namespace g2calc
