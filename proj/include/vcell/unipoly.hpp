#ifndef VCELL_UNIPOLY_HPP
#define VCELL_UNIPOLY_HPP

#include "vcell/rational.hpp"
#include "vcell/errors.hpp"
#include "vcell/multipoly.hpp"

#include <utility>
#include <vector>

namespace vcell {

// Dense univariate polynomial, coefficients ascending by degree, trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly t() { return UniPoly({Rational(0), Rational(1)}); }
    // c * t^k
    static UniPoly monomial(unsigned k, const Rational& c);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;

    // quotient/remainder; divisor must be nonzero
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);
    static UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd (0 for both zero)

    UniPoly monic() const;
    Rational content_signed() const;
    UniPoly primitive_part() const;

    // exact deflation by root r: returns quotient of *this by (t - r);
    // remainder must vanish
    UniPoly deflate(const Rational& root) const;

    MultiPoly to_multipoly(const std::string& var = "t") const;
    static UniPoly from_multipoly(const MultiPoly& p);
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Univariate rational function, normalized: gcd(num, den) = 1 and den monic.
class UniRat {
public:
    UniRat() : num_(UniPoly::constant(Rational(0))), den_(UniPoly::constant(Rational(1))) {}
    UniRat(UniPoly num, UniPoly den);
    static UniRat poly(UniPoly p) { return UniRat(std::move(p), UniPoly::constant(Rational(1))); }
    static UniRat constant(const Rational& c) { return poly(UniPoly::constant(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    UniRat operator-() const;
    friend UniRat operator+(const UniRat& a, const UniRat& b);
    friend UniRat operator-(const UniRat& a, const UniRat& b);
    friend UniRat operator*(const UniRat& a, const UniRat& b);
    friend UniRat operator/(const UniRat& a, const UniRat& b);
    bool operator==(const UniRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const UniRat& o) const { return !(*this == o); }

    Rational eval(const Rational& x) const;  // throws on pole
    UniRat derivative() const;
    UniRat pow(unsigned e) const;
    std::string str(const std::string& var = "t") const;

private:
    UniPoly num_, den_;
};

// normalization happens in the UniRat constructor; free-function spelling
inline UniRat unirat_normalize(const UniPoly& num, const UniPoly& den) { return UniRat(num, den); }

struct PoleReport {
    // rational poles with orders
    std::vector<std::pair<Rational, int>> poles;
    // leftover squarefree denominator factors without rational roots:
    // (degree, multiplicity)
    std::vector<std::pair<int, int>> residual_factors;
    bool all_simple() const;
    int max_order() const;
};

// Pole locations and orders of a univariate rational function. Rational
// roots are extracted from the primitive integer form of the denominator via
// the rational root theorem; irreducible non-linear content is reported by
// degree with its multiplicity.
PoleReport pole_orders(const UniRat& r);

// Rational roots with multiplicities of a nonzero polynomial.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

// Yun squarefree decomposition: p = lc * prod f_i^{m_i} with f_i squarefree,
// pairwise coprime, monic; returned as (f_i, m_i).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// All positive divisors of |n| (n != 0). Factors via trial division plus
// Pollard rho, so it copes with the large coefficients exact arithmetic
// produces.
std::vector<Integer> divisors(const Integer& n);

} // namespace vcell

#endif
