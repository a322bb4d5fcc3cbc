#include "vcell/polymatrix.hpp"
#include "vcell/errors.hpp"

#include <optional>

namespace vcell {

PolyMatrix::PolyMatrix(std::size_t dim, std::vector<std::string> vars)
    : dim_(dim), vars_(std::move(vars)) {
    if (dim_ == 0) throw DimensionMismatch("PolyMatrix must have positive dimension");
    m_.assign(dim_ * dim_, MultiPoly(vars_));
}

MultiPoly PolyMatrix::det() const {
    std::vector<MultiPoly> a = m_;
    const std::size_t n = dim_;
    try {
        MultiPoly prev = MultiPoly::constant(vars_, Rational(1));
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t piv = k;
            while (piv < n && a[piv * n + k].is_zero()) ++piv;
            if (piv == n) return MultiPoly(vars_);  // zero column below: singular
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    MultiPoly t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                    // Bareiss: division by the previous pivot is exact
                    a[i * n + j] = MultiPoly::exact_div(t, prev);
                }
                a[i * n + k] = MultiPoly(vars_);
            }
            prev = a[k * n + k];
        }
        MultiPoly d = a[(n - 1) * n + (n - 1)];
        return sign < 0 ? -d : d;
    } catch (const NotDivisible&) {
        // fall back to cofactor expansion
        std::vector<MultiPoly> b = m_;
        return det_cofactor(b, n);
    }
}

MultiPoly PolyMatrix::det_cofactor(std::vector<MultiPoly>& a, std::size_t n) const {
    if (n == 1) return a[0];
    MultiPoly d(vars_);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        std::vector<MultiPoly> minor;
        minor.reserve((n - 1) * (n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) minor.push_back(a[i * n + k]);
        MultiPoly sub = det_cofactor(minor, n - 1);
        MultiPoly term = a[j] * sub;
        if (j % 2) d -= term; else d += term;
    }
    return d;
}

std::vector<std::vector<Rational>> PolyMatrix::eval(const std::vector<Rational>& point) const {
    std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i][j] = at(i, j).eval(point);
    return out;
}

namespace {

// reduced row echelon; unique solutions only (nullopt on inconsistency or
// free variables)
std::optional<std::vector<Rational>> gauss(std::vector<std::vector<Rational>>& A,
                                           std::vector<Rational>& b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    if (pivot_col.size() != cols) return std::nullopt;  // free variables
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
    return x;
}

} // namespace

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    auto x = gauss(A, b);
    if (!x) throw std::domain_error("singular linear system");
    return *x;
}

std::vector<Rational> solve_linear_overdetermined(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b) {
    auto x = gauss(A, b);
    if (!x) throw std::domain_error("inconsistent or underdetermined linear system");
    return *x;
}

Rational det_rational(std::vector<std::vector<Rational>> A) {
    const std::size_t n = A.size();
    Rational d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && A[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) { std::swap(A[p], A[k]); d = -d; }
        d *= A[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
        }
    }
    return d;
}

} // namespace vcell
