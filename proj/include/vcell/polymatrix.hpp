#ifndef VCELL_POLYMATRIX_HPP
#define VCELL_POLYMATRIX_HPP

#include "vcell/multipoly.hpp"

#include <vector>

namespace vcell {

// Square matrix of MultiPoly entries sharing one variable list.
class PolyMatrix {
public:
    PolyMatrix(std::size_t dim, std::vector<std::string> vars);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& vars() const { return vars_; }
    MultiPoly& at(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }

    // Exact determinant: fraction-free (Bareiss) elimination, falling back
    // to cofactor expansion when a column has no usable pivot.
    MultiPoly det() const;

    // evaluate entrywise into a Rational matrix
    std::vector<std::vector<Rational>> eval(const std::vector<Rational>& point) const;

private:
    MultiPoly det_cofactor(std::vector<MultiPoly>& a, std::size_t n) const;
    std::size_t dim_;
    std::vector<std::string> vars_;
    std::vector<MultiPoly> m_;
};

// Solve A x = b exactly by Gaussian elimination with partial pivoting over
// Rational. Throws std::domain_error when A is singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A,
                                   std::vector<Rational> b);

// Least-structure solver for (possibly overdetermined) consistent systems:
// returns a solution of A x = b or nullopt when inconsistent / rank-deficient
// in a way that leaves free variables.
std::vector<Rational> solve_linear_overdetermined(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b);

Rational det_rational(std::vector<std::vector<Rational>> A);

} // namespace vcell

#endif
