#ifndef VCELL_MULTIPOLY_HPP
#define VCELL_MULTIPOLY_HPP

#include "vcell/rational.hpp"
#include "vcell/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace vcell {

// Sparse multivariate polynomial over Rational, canonical form: no zero
// coefficients, exponent vectors of fixed length. Terms are kept in graded
// lexicographic order (total degree first, then lex with the *last* listed
// variable most significant, leading term first). With vars {"x","y"} this
// realizes the (y, x, 1) significance convention used for line and
// denominator-factor normalization.
class MultiPoly {
public:
    using Exp = std::vector<unsigned>;

    struct MonoCmp {
        // descending graded lex, later variables more significant
        bool operator()(const Exp& a, const Exp& b) const;
    };
    using TermMap = std::map<Exp, Rational, MonoCmp>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    MultiPoly(std::vector<std::string> vars, std::vector<std::pair<Exp, Rational>> terms);

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    // monomial c * v^e where v is vars[idx]
    static MultiPoly monomial(std::vector<std::string> vars, std::size_t idx, unsigned e,
                              const Rational& c = Rational(1));

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t nvars() const { return vars_.size(); }

    // zero polynomial has total degree -1 by convention
    int total_degree() const;
    int degree_in(std::size_t var) const;

    // leading term under the canonical order; polynomial must be nonzero
    const std::pair<const Exp, Rational>& leading() const;
    Rational coeff(const Exp& e) const;
    Rational constant_term() const;

    void set_coeff(const Exp& e, const Rational& c);
    void add_term(const Exp& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rational& c) const;

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    // total order for use as a map key / canonical factor sorting
    static int compare(const MultiPoly& a, const MultiPoly& b);

    Rational eval(const std::vector<Rational>& point) const;
    double eval_double(const std::vector<double>& point) const;
    MultiPoly derivative(std::size_t var) const;
    MultiPoly pow(unsigned e) const;

    // Exact quotient; throws NotDivisible when the remainder is nonzero.
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
    static bool divides(const MultiPoly& b, const MultiPoly& a);

    // content c such that (*this)/c has coprime integer coefficients;
    // content of zero is 0. Sign of the content matches the leading term,
    // so primitive_part() always has positive leading coefficient.
    Rational content_signed() const;
    MultiPoly primitive_part() const;

    // substitute vars[idx] := value (a polynomial in the same variable list)
    MultiPoly substitute(std::size_t idx, const MultiPoly& value) const;
    // reinterpret with a different variable list of the same length
    MultiPoly with_vars(std::vector<std::string> vars) const;

    std::string str() const;

private:
    void check_same_vars(const MultiPoly& o) const;
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Convenience: build polynomials from expression strings is intentionally
// not provided; construct via monomials/terms to keep parsing out of the core.

} // namespace vcell

#endif
