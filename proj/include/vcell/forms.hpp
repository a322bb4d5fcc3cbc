#ifndef VCELL_FORMS_HPP
#define VCELL_FORMS_HPP

#include "vcell/multipoly.hpp"
#include "vcell/unipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vcell {

// Factor normalization used for denominators and lines: primitive integer
// coefficients, positive leading coefficient under graded lex with the later
// variable more significant (for linear forms this is the (y, x, 1) rule).
// Returns the normalized polynomial and the rational multiplier r with
// input = r * normalized.
std::pair<MultiPoly, Rational> normalize_factor(const MultiPoly& p);

// Rational top-form f / prod(g_i^{m_i}) dx^dy with a global orientation sign.
class RationalTwoForm {
public:
    struct Factor {
        MultiPoly poly;
        int mult = 1;
    };

    RationalTwoForm() = default;
    RationalTwoForm(MultiPoly numerator, std::vector<Factor> denominator, int orientation = 1);

    const MultiPoly& numerator() const { return num_; }
    const std::vector<Factor>& denominator_factors() const { return den_; }
    int orientation() const { return orient_; }
    bool is_zero() const { return num_.is_zero(); }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    RationalTwoForm flipped() const;           // global sign flip
    RationalTwoForm scaled(const Rational& c) const;

    // value of the coefficient function at a point; throws on pole
    Rational value_at(const std::vector<Rational>& pt) const;

    MultiPoly denominator_product() const;

    bool operator==(const RationalTwoForm& o) const;
    bool equal_up_to_sign(const RationalTwoForm& o) const;

    std::string str() const;

private:
    void normalize();
    MultiPoly num_;
    std::vector<Factor> den_;
    int orient_ = 1;
};

// Rational curve: implicit equation plus parametrization (x(t), y(t)).
struct ParamCurve {
    MultiPoly implicit;            // F(x,y), F(x(t),y(t)) == 0
    UniRat x_of_t, y_of_t;
    std::optional<std::pair<Rational, Rational>> domain;  // parameter interval when relevant

    bool composes_to_zero() const;
};

// 1-form c(t) dt
struct OneFormT {
    UniRat coeff;
    bool operator==(const OneFormT& o) const { return coeff == o.coeff; }
    bool equal_up_to_sign(const OneFormT& o) const {
        return coeff == o.coeff || coeff == -o.coeff;
    }
    std::string str() const { return coeff.str() + " dt"; }
};

// substitute a rational parametrization into a polynomial in (x, y)
UniRat compose(const MultiPoly& p, const UniRat& X, const UniRat& Y);

// sum over the least common denominator; cancels denominator factors that
// exactly divide the resulting numerator
RationalTwoForm form_add(const RationalTwoForm& a, const RationalTwoForm& b);

// Poincare residue along a simple denominator factor, pulled back along the
// curve's parametrization. Uses the dF/dy branch, falling back to dF/dx when
// dF/dy vanishes identically on the curve. When check_other_factors is set,
// raises if another denominator factor vanishes identically on the curve.
OneFormT residue(const RationalTwoForm& form, const ParamCurve& along,
                 bool check_other_factors = true);

// canonical form of the interval [a, b]: (b-a)/((t-a)(t-b)) dt
OneFormT segment_form(const Rational& a, const Rational& b);

struct LogOffender {
    std::size_t factor_index;
    std::optional<Rational> root;  // nullopt: residual non-rational factor
    int order;
    int residual_degree = 0;       // set when root is nullopt
};

struct LogReport {
    bool logarithmic = false;
    std::vector<LogOffender> offenders;
    std::vector<OneFormT> residues;  // per denominator factor, matching order
};

// true iff every denominator factor is simple and every residue pullback has
// only simple poles; lines without a supplied curve get the obvious linear
// parametrization
LogReport is_logarithmic(const RationalTwoForm& form, const std::vector<ParamCurve>& curves);

// pullback along the projective-linear map with matrix M (acting on column
// vectors (x, y, 1)^T), computed in the affine chart with its Jacobian
RationalTwoForm pullback_linear(const RationalTwoForm& form,
                                const std::array<std::array<Rational, 3>, 3>& M);

ParamCurve line_param(const MultiPoly& line);

// exact embedded constants from the normal-form configurations
struct FixtureForms {
    RationalTwoForm a1;        // -2x /((x-1)(y^2-x^3))
    RationalTwoForm a2;        // (3/2)(y-x) /((y-(3/2)x+1/2)(y^2-x^3))
    RationalTwoForm a3;        // y /((x-y)(y^2-x^3))
    RationalTwoForm s1;        // (x^2+xy) /(y(x-1)(y^2-x^3))
    RationalTwoForm triangle;  // 1 /(y(x-1)(y-x))
    RationalTwoForm simplex2d; // 1 /(x y (1-x-y))
    ParamCurve cusp_cubic;     // y^2 = x^3 with (t^2, t^3)
};

FixtureForms fixture_forms();

std::vector<std::string> xy_vars();
// convenience builders over (x, y)
MultiPoly xy_poly(std::initializer_list<std::pair<std::pair<unsigned, unsigned>, Rational>> terms);
MultiPoly xy_linear(const Rational& cx, const Rational& cy, const Rational& c0);

} // namespace vcell

#endif
