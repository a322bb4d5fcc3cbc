#include "vcell/planar.hpp"
#include "vcell/errors.hpp"

#include <algorithm>

namespace vcell::planar {

namespace {

Rational R(long v) { return Rational(v); }

UniRat seg_rat(const Rational& a, const Rational& b) { return segment_form(a, b).coeff; }

} // namespace

MultiPoly boundary_poly(int k) {
    if (k < 2) throw DimensionMismatch("boundary_poly requires k >= 2");
    long kk = k;
    MultiPoly b(xy_vars());
    b.add_term({3, 0}, R(kk * kk * kk - 4 * kk * kk + 4 * kk));
    b.add_term({0, 2}, R(-kk * kk * kk + kk * kk));
    b.add_term({1, 1}, R(6 * kk * kk - 6 * kk));
    b.add_term({2, 0}, R(-3 * kk * kk + 3 * kk - 3));
    b.add_term({1, 0}, R(3 * kk));
    b.add_term({0, 1}, R(-4 * kk + 4));
    b.add_term({0, 0}, R(-1));
    return b;
}

MultiPoly b2_line() { return xy_linear(R(-3), R(2), R(1)); }

MultiPoly chord(int k) { return xy_linear(R(-(k + 1)), R(k), R(1)); }

Point cusp(int k) {
    if (k < 3) throw DimensionMismatch("cusp requires k >= 3 (b_2 has no cusp)");
    Point c{Rational(1, k), Rational(1, static_cast<long>(k) * k)};
    MultiPoly b = boundary_poly(k);
    std::vector<Rational> pt{c.first, c.second};
    if (b.eval(pt) != 0 || b.derivative(0).eval(pt) != 0 || b.derivative(1).eval(pt) != 0)
        throw std::logic_error("cusp certificate failed");
    return c;
}

ParamCurve boundary_param(int k) {
    if (k < 2) throw DimensionMismatch("boundary_param requires k >= 2");
    long m = k - 1;
    Rational Q(m * m);
    // P_x = (1-t)^2 m + t^2 m^2, P_y = (1-t)^3 + t^3 m^2
    UniPoly one_minus_t({R(1), R(-1)});
    UniPoly t = UniPoly::t();
    UniPoly Px = one_minus_t.pow(2).scaled(R(m)) + t.pow(2).scaled(R(m * m));
    UniPoly Py = one_minus_t.pow(3) + t.pow(3).scaled(R(m * m));
    ParamCurve c;
    c.implicit = boundary_poly(k);
    c.x_of_t = UniRat(Px, UniPoly::constant(Q));
    c.y_of_t = UniRat(Py, UniPoly::constant(Q));
    c.domain = std::make_pair(R(0), R(1));
    if (!c.composes_to_zero()) throw std::logic_error("boundary parametrization check failed");
    return c;
}

ParamCurve b2_line_param() {
    ParamCurve c;
    c.implicit = b2_line();
    c.x_of_t = UniRat::poly(UniPoly::t());
    c.y_of_t = UniRat::poly(UniPoly({Rational(-1, 2), Rational(3, 2)}));
    c.domain = std::make_pair(Rational(1, 2), R(1));
    return c;
}

PolyMatrix presenting_matrix(int n) {
    if (n < 3) throw DimensionMismatch("presenting_matrix requires n >= 3");
    long m = n - 1;
    Rational e(m * m);
    auto vars = xy_vars();
    auto cnst = [&](const Rational& c) { return MultiPoly::constant(vars, c); };
    MultiPoly X = xy_linear(R(1), R(0), R(0));
    MultiPoly Y = xy_linear(R(0), R(1), R(0));
    // columns 1..2: coefficients of P_y - y Q (degree 3), columns 3..5 of
    // P_x - x Q (degree 2), every entry cleared of denominators by the
    // common factor (n-1)^2
    MultiPoly b3 = cnst(e - 1);                      // t^3
    MultiPoly b2c = cnst(R(3));                      // t^2
    MultiPoly b1 = cnst(R(-3));                      // t
    MultiPoly b0 = cnst(R(1)) - Y.scaled(e);         // 1
    MultiPoly a2 = cnst(R(m) * R(n));                // t^2  (n/(n-1) * e)
    MultiPoly a1 = cnst(R(-2 * m));                  // t
    MultiPoly a0 = cnst(R(m)) - X.scaled(e);         // 1
    PolyMatrix M(5, vars);
    // degree-descending rows as in the source display
    M.at(0, 0) = b3;  M.at(0, 2) = a2;
    M.at(1, 0) = b2c; M.at(1, 1) = b3;  M.at(1, 2) = a1; M.at(1, 3) = a2;
    M.at(2, 0) = b1;  M.at(2, 1) = b2c; M.at(2, 2) = a0; M.at(2, 3) = a1; M.at(2, 4) = a2;
    M.at(3, 0) = b0;  M.at(3, 1) = b1;  M.at(3, 3) = a0; M.at(3, 4) = a1;
    M.at(4, 1) = b0;  M.at(4, 4) = a0;
    return M;
}

MultiPoly resultant_boundary(int n) { return presenting_matrix(n).det(); }

MultiPoly line_through(const Point& A, const Point& B) {
    if (A == B) throw DimensionMismatch("line_through requires distinct points");
    // (y - Ay)(Bx - Ax) - (x - Ax)(By - Ay) = 0
    Rational dx = B.first - A.first, dy = B.second - A.second;
    MultiPoly L = xy_linear(-dy, dx, dy * A.first - dx * A.second);
    return normalize_factor(L).first;
}

MultiPoly cuspidal_tangent(int k) {
    Point c = cusp(k);
    ParamCurve pc = boundary_param(k);
    Rational tstar(1, k);
    // line alpha (x - cx) + beta (y - cy); the first pullback derivative
    // vanishes automatically at the cusp parameter, double contact from
    // passing through the cusp; triple contact needs the second derivative
    // of the pullback numerator to vanish as well
    UniPoly Nx = (pc.x_of_t - UniRat::constant(c.first)).num();
    UniPoly Ny = (pc.y_of_t - UniRat::constant(c.second)).num();
    Rational d2x = Nx.derivative().derivative().eval(tstar);
    Rational d2y = Ny.derivative().derivative().eval(tstar);
    Rational d1x = Nx.derivative().eval(tstar);
    Rational d1y = Ny.derivative().eval(tstar);
    // solve [d1x d1y; d2x d2y] (alpha, beta) = 0 -- d1 row is identically
    // zero at a cusp, leaving the one-dimensional kernel of the d2 row
    Rational alpha, beta;
    if (d1x != 0 || d1y != 0)
        throw std::logic_error("cuspidal_tangent: parameter is not a cusp");
    if (d2x == 0 && d2y == 0)
        throw std::logic_error("cuspidal_tangent: degenerate second derivatives");
    alpha = d2y;
    beta = -d2x;
    MultiPoly L = xy_linear(alpha, beta, -(alpha * c.first + beta * c.second));
    L = normalize_factor(L).first;
    // exactness of the triple contact: the pullback has a root of
    // multiplicity exactly 3 at t*
    UniPoly pull = compose(L, pc.x_of_t, pc.y_of_t).num();
    UniPoly lin({-tstar, R(1)});
    int mult = 0;
    while (!pull.is_zero()) {
        auto [q, rem] = UniPoly::divmod(pull, lin);
        if (!rem.is_zero()) break;
        pull = q;
        ++mult;
    }
    if (mult != 3) throw std::logic_error("cuspidal_tangent: contact multiplicity is not 3");
    return L;
}

namespace {

// residue of (num / (extra * b)) along b, pulled back by param(b)
UniRat residue_pullback(const MultiPoly& num, const MultiPoly& extra, const ParamCurve& curve) {
    RationalTwoForm form(num, {{extra, 1}, {curve.implicit, 1}});
    return residue(form, curve, true).coeff;
}

} // namespace

CanonicalForm canonical_form(int n) {
    if (n < 3) throw DimensionMismatch("canonical_form requires n >= 3");
    CanonicalForm cf;
    cf.witness = Point{Rational(7, 18), Rational(1, 6)};  // image of (1/2,1/3,1/6)

    // base: residues of chord(3)/(b2' b3) are (1/6)-scaled segment forms
    MultiPoly b2p = b2_line();
    std::vector<RationalTwoForm> sums;
    sums.emplace_back(chord(3).scaled(R(6)), std::vector<RationalTwoForm::Factor>{
                                                 {b2p, 1}, {boundary_poly(3), 1}});
    for (int k = 4; k <= n; ++k) {
        ParamCurve prev = boundary_param(k - 1);
        ParamCurve cur = boundary_param(k);
        MultiPoly lk = chord(k - 1);
        // lower piece: mu * ctilde_{k-1} / (chord(k-1) b_{k-1}) with
        // Res_{b_{k-1}} = -seg(1/(k-1), 1)
        MultiPoly ct = cuspidal_tangent(k - 1);
        UniRat r = residue_pullback(ct, lk, prev);
        UniRat target = -seg_rat(Rational(1, k - 1), R(1));
        UniRat mu = target / r;
        if (!mu.is_polynomial() || mu.num().degree() > 0)
            throw std::logic_error("canonical_form: lower residue is not segment-shaped");
        Rational muc = mu.num().coeff(0);
        sums.emplace_back(ct.scaled(muc),
                          std::vector<RationalTwoForm::Factor>{{lk, 1}, {boundary_poly(k - 1), 1}});

        // upper piece: numerator a x + b y + c solving
        // Res_{b_k}( N / (chord(k-1) b_k) ) == seg(0, 1)
        UniRat rx = residue_pullback(xy_linear(R(1), R(0), R(0)), lk, cur);
        UniRat ry = residue_pullback(xy_linear(R(0), R(1), R(0)), lk, cur);
        UniRat r1 = residue_pullback(MultiPoly::constant(xy_vars(), R(1)), lk, cur);
        UniRat tgt = seg_rat(R(0), R(1));
        // common denominator D: equation a rx + b ry + c r1 - tgt = 0
        UniPoly D = rx.den() * ry.den() * r1.den() * tgt.den();
        UniPoly Px = rx.num() * UniPoly::exact_div(D, rx.den());
        UniPoly Py = ry.num() * UniPoly::exact_div(D, ry.den());
        UniPoly P1 = r1.num() * UniPoly::exact_div(D, r1.den());
        UniPoly Pt = tgt.num() * UniPoly::exact_div(D, tgt.den());
        int deg = std::max({Px.degree(), Py.degree(), P1.degree(), Pt.degree()});
        std::vector<std::vector<Rational>> A;
        std::vector<Rational> rhs;
        for (int i = 0; i <= deg; ++i) {
            A.push_back({Px.coeff(static_cast<std::size_t>(i)), Py.coeff(static_cast<std::size_t>(i)),
                         P1.coeff(static_cast<std::size_t>(i))});
            rhs.push_back(Pt.coeff(static_cast<std::size_t>(i)));
        }
        std::vector<Rational> sol = solve_linear_overdetermined(A, rhs);
        MultiPoly nup = xy_linear(sol[0], sol[1], sol[2]);
        sums.emplace_back(nup, std::vector<RationalTwoForm::Factor>{{lk, 1}, {boundary_poly(k), 1}});
    }

    RationalTwoForm combined = sums[0];
    for (std::size_t i = 1; i < sums.size(); ++i) combined = form_add(combined, sums[i]);

    std::vector<Rational> w{cf.witness.first, cf.witness.second};
    if (combined.value_at(w) < 0) {
        cf.flipped_for_positivity = true;
        combined = combined.flipped();
        for (auto& s : sums) s = s.flipped();
    }
    cf.summands = std::move(sums);
    cf.combined = std::move(combined);
    return cf;
}

std::vector<SignCondition> cell_guards() {
    MultiPoly one_minus_x = xy_linear(R(-1), R(0), R(1));
    MultiPoly x_minus_y = xy_linear(R(1), R(-1), R(0));
    MultiPoly x3_minus_y2 = xy_poly({{{3, 0}, R(1)}, {{0, 2}, R(-1)}});
    return {{one_minus_x, 1}, {x_minus_y, 1}, {b2_line(), 1}, {x3_minus_y2, 1}};
}

namespace {

bool holds(const std::vector<SignCondition>& conds, const std::vector<Rational>& pt, bool strict) {
    for (const auto& c : conds) {
        Rational v = c.poly.eval(pt);
        if (c.sign > 0 ? (strict ? !(v > 0) : !(v >= 0)) : (strict ? !(v < 0) : !(v <= 0)))
            return false;
    }
    return true;
}

std::vector<std::vector<SignCondition>> membership_pieces(int n) {
    std::vector<std::vector<SignCondition>> pieces;
    auto guards = cell_guards();
    std::vector<SignCondition> base = guards;
    base.push_back({b2_line(), 1});
    base.push_back({boundary_poly(3), 1});
    pieces.push_back(std::move(base));
    for (int k = 3; k < n; ++k) {
        std::vector<SignCondition> shell = guards;
        shell.push_back({boundary_poly(k + 1), 1});
        shell.push_back({boundary_poly(k), -1});
        MultiPoly ct = cuspidal_tangent(k);
        shell.push_back({ct, 1});
        pieces.push_back(std::move(shell));
    }
    return pieces;
}

} // namespace

bool Region::contains(const Point& p, bool strict) const {
    return holds(conditions, {p.first, p.second}, strict);
}

Membership membership(int n, const Point& p) {
    if (n < 3) throw DimensionMismatch("membership requires n >= 3");
    auto pieces = membership_pieces(n);
    std::vector<Rational> pt{p.first, p.second};
    bool closed = false;
    for (const auto& piece : pieces) {
        if (holds(piece, pt, false)) {
            closed = true;
            if (holds(piece, pt, true)) return Membership::Inside;
        }
    }
    return closed ? Membership::OnBoundary : Membership::Outside;
}

namespace {

// deterministic interior witness: walk inward from a boundary-arc point
// along the gradient of the outer curve, halving the step until all strict
// conditions hold
Point find_witness(const std::vector<SignCondition>& conds, const ParamCurve& arc,
                   const std::vector<Rational>& tcands) {
    MultiPoly F = arc.implicit;
    MultiPoly Fx = F.derivative(0), Fy = F.derivative(1);
    for (const Rational& t0 : tcands) {
        Rational px = arc.x_of_t.eval(t0), py = arc.y_of_t.eval(t0);
        Rational gx = Fx.eval({px, py}), gy = Fy.eval({px, py});
        if (gx == 0 && gy == 0) continue;
        Rational eps(1, 64);
        for (int it = 0; it < 60; ++it, eps /= 2) {
            Point cand{px + eps * gx, py + eps * gy};
            if (holds(conds, {cand.first, cand.second}, true)) return cand;
        }
    }
    throw std::logic_error("subdivision: no interior witness found");
}

} // namespace

std::vector<Region> subdivision(int n) {
    if (n < 3) throw DimensionMismatch("subdivision requires n >= 3");
    std::vector<Region> out;
    auto pieces = membership_pieces(n);
    Region base;
    base.label = "base";
    base.conditions = pieces[0];
    base.witness = Point{Rational(7, 18), Rational(1, 6)};
    if (!base.contains(base.witness, true)) throw std::logic_error("base witness not interior");
    out.push_back(std::move(base));
    for (int k = 3; k < n; ++k) {
        const auto& shell = pieces[static_cast<std::size_t>(k - 2)];
        MultiPoly lk = chord(k);
        ParamCurve outer = boundary_param(k + 1);
        // chord pullback roots {0, tau, 1}: arc points on each side of tau
        // carry the two chord signs
        Rational tau(2 * (k + 1) - 3, static_cast<long>(k + 1) * (k - 1));
        for (int side : {1, -1}) {
            Region r;
            r.label = "shell_" + std::to_string(k) + (side > 0 ? "_upper" : "_lower");
            r.conditions = shell;
            r.conditions.push_back({lk, side});
            std::vector<Rational> tcands;
            if (side > 0) {
                tcands = {tau / 2, tau / 3, tau * Rational(3, 4), Rational(1, 4 * (k + 1))};
            } else {
                tcands = {(tau + 1) / 2, (tau + 3) / 4, (3 * tau + 1) / 4};
            }
            // orient candidates to the correct chord side
            std::vector<Rational> keep;
            for (const auto& t0 : tcands) {
                Rational lx = lk.eval({outer.x_of_t.eval(t0), outer.y_of_t.eval(t0)});
                if ((side > 0 && lx > 0) || (side < 0 && lx < 0) || lx == 0) keep.push_back(t0);
            }
            if (keep.empty()) keep = tcands;
            r.witness = find_witness(r.conditions, outer, keep);
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace vcell::planar
