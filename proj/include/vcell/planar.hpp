#ifndef VCELL_PLANAR_HPP
#define VCELL_PLANAR_HPP

#include "vcell/forms.hpp"
#include "vcell/polymatrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vcell::planar {

using Point = std::pair<Rational, Rational>;

// b_k of the planar boundary family; b_2 is the squared line, b_k (k > 2)
// the cuspidal cubics
MultiPoly boundary_poly(int k);

// reduced linear factor of b_2: 2y - 3x + 1
MultiPoly b2_line();

// the line through c_k and (1,1), normalized: k*y - (k+1)*x + 1
MultiPoly chord(int k);

// cusp c_k = (1/k, 1/k^2) of b_k, k >= 3; checks that b_k and both partials
// vanish there
Point cusp(int k);

// rational parametrization of b_k: Q = (k-1)^2,
// P_x = (1-t)^2 (k-1) + t^2 (k-1)^2, P_y = (1-t)^3 + t^3 (k-1)^2
ParamCurve boundary_param(int k);

// parametrization of the b_2 line by x: (t, (3t-1)/2)
ParamCurve b2_line_param();

// the 5x5 presenting matrix of the parametrization resultant, instantiated
// at integer n, with rows scaled by (n-1)^2 so entries are polynomial
PolyMatrix presenting_matrix(int n);

// determinant of the presenting matrix; a nonzero rational multiple of b_n
MultiPoly resultant_boundary(int n);

// line through two distinct points, (y, x, 1)-normalized
MultiPoly line_through(const Point& A, const Point& B);

// the unique line through c_k with triple contact with b_k at the cusp,
// computed from the vanishing of pullback derivatives at t* = 1/k
MultiPoly cuspidal_tangent(int k);

struct CanonicalForm {
    // base piece plus (upper, lower) per step: 2(n-3)+1 summands
    std::vector<RationalTwoForm> summands;
    RationalTwoForm combined;
    // true when the orientation was flipped to make the value positive at
    // the interior witness
    bool flipped_for_positivity = false;
    Point witness;
};

// canonical form of Pi_{n,3} via the shell recursion; summand numerators are
// normalized so residues are exactly +-segment forms, and the global sign
// makes the combined value positive at an interior witness
CanonicalForm canonical_form(int n);

enum class Membership { Inside, OnBoundary, Outside };

Membership membership(int n, const Point& p);

struct SignCondition {
    MultiPoly poly;
    int sign;  // +1: poly >= 0 on the region, -1: poly <= 0
};

struct Region {
    std::string label;  // "base", "shell_k_upper", "shell_k_lower"
    std::vector<SignCondition> conditions;
    Point witness;
    bool contains(const Point& p, bool strict) const;
};

// base piece plus the two chord-split pieces of each shell, with exact
// interior witness points: 2(n-3)+1 regions
std::vector<Region> subdivision(int n);

// shared guard conditions: every Pi_{n,3} lies in
// {x <= 1, y <= x, b2' >= 0, x^3 - y^2 >= 0}
std::vector<SignCondition> cell_guards();

} // namespace vcell::planar

#endif
