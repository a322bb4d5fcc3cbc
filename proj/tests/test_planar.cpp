#include <doctest.h>

#include "vcell/planar.hpp"
#include "vcell/vandermonde.hpp"

using namespace vcell;
using namespace vcell::planar;

namespace {
Rational rq(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
}

TEST_CASE("boundary polynomials") {
    CHECK(boundary_poly(2) == -(b2_line() * b2_line()));
    CHECK(boundary_poly(3).eval({rq(1), rq(1)}) == 0);
    for (int k = 2; k <= 10; ++k) {
        CHECK(boundary_poly(k).constant_term() == rq(-1));
        CHECK(boundary_poly(k).eval({rq(1), rq(1)}) == 0);
    }
    CHECK_THROWS_AS(boundary_poly(1), DimensionMismatch);
}

TEST_CASE("composition identity: b_k vanishes on its parametrization") {
    for (int k = 2; k <= 10; ++k) {
        ParamCurve c = boundary_param(k);
        CHECK(c.composes_to_zero());
    }
}

TEST_CASE("cusp certificates") {
    CHECK(cusp(3) == Point{rq(1, 3), rq(1, 9)});
    CHECK(cusp(10) == Point{rq(1, 10), rq(1, 100)});
    for (int k = 3; k <= 10; ++k) {
        Point c = cusp(k);  // constructor verifies b_k and both partials vanish
        MultiPoly b = boundary_poly(k);
        std::vector<Rational> pt{c.first, c.second};
        CHECK(b.derivative(0).eval(pt) == 0);
        CHECK(b.derivative(1).eval(pt) == 0);
        // unique parametrization preimage: x(t) - cx and y(t) - cy share only
        // the root t = 1/k (doubled, since the velocity vanishes at a cusp)
        ParamCurve pc = boundary_param(k);
        UniPoly nx = (pc.x_of_t - UniRat::constant(c.first)).num();
        UniPoly ny = (pc.y_of_t - UniRat::constant(c.second)).num();
        UniPoly g = UniPoly::gcd(nx, ny);
        auto roots = rational_roots(g);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].first == rq(1, k));
        CHECK(roots[0].second == g.degree());  // single distinct root
    }
    CHECK_THROWS_AS(cusp(2), DimensionMismatch);
}

TEST_CASE("presenting-matrix determinant is a rational multiple of b_n") {
    for (int n = 3; n <= 8; ++n) {
        MultiPoly det = resultant_boundary(n);
        MultiPoly bn = boundary_poly(n);
        MultiPoly q = MultiPoly::exact_div(det, bn);
        REQUIRE(q.is_constant());
        Rational lambda = q.leading().second;
        CHECK(lambda != 0);
        // entries were cleared by (n-1)^2, so lambda = -n (n-1)^6
        Rational expect = rq(-n) * pow(rq(n - 1), 6);
        CHECK(lambda == expect);
    }
}

TEST_CASE("line through two points") {
    CHECK(line_through(cusp(3), {rq(1), rq(1)}) == xy_linear(rq(-4), rq(3), rq(1)));
    CHECK(line_through({rq(0), rq(0)}, {rq(1), rq(1)}) == xy_linear(rq(-1), rq(1), rq(0)));
    for (int n = 3; n <= 8; ++n) {
        MultiPoly l = line_through(cusp(n), {rq(1), rq(1)});
        CHECK(l == chord(n));
        CHECK(l.eval({rq(1, n), rq(1, static_cast<long>(n) * n)}) == 0);
    }
    CHECK_THROWS_AS(line_through({rq(1), rq(1)}, {rq(1), rq(1)}), DimensionMismatch);
}

TEST_CASE("cuspidal tangent") {
    for (int k = 3; k <= 8; ++k) {
        MultiPoly ct = cuspidal_tangent(k);
        // passes through the cusp
        CHECK(ct.eval({rq(1, k), rq(1, static_cast<long>(k) * k)}) == 0);
        // closed form k^2 y - 3k x + 2 up to primitive normalization
        MultiPoly expect = normalize_factor(
            xy_linear(rq(-3 * k), rq(static_cast<long>(k) * k), rq(2))).first;
        CHECK(ct == expect);
    }
    // the chord l(c_k,(1,1)) meets b_k with multiplicity exactly 2 at the cusp
    for (int k = 3; k <= 6; ++k) {
        ParamCurve pc = boundary_param(k);
        UniPoly pull = compose(chord(k), pc.x_of_t, pc.y_of_t).num();
        UniPoly lin({rq(-1, k), rq(1)});
        int mult = 0;
        while (true) {
            auto [q, r] = UniPoly::divmod(pull, lin);
            if (!r.is_zero()) break;
            pull = q;
            ++mult;
        }
        CHECK(mult == 2);
    }
    // normal form y^2 = x^3 with gamma = (t^2, t^3): tangent y = 0 pulls
    // back to t^3
    auto fx = fixture_forms();
    UniPoly pull = compose(xy_linear(rq(0), rq(1), rq(0)), fx.cusp_cubic.x_of_t,
                           fx.cusp_cubic.y_of_t).num();
    CHECK(pull == UniPoly::monomial(3, rq(1)));
}

TEST_CASE("canonical form base case") {
    auto cf = canonical_form(3);
    REQUIRE(cf.summands.size() == 1);
    // combined = +-6 l(c_3) / (b2' b3), positively oriented at the witness
    const auto& dens = cf.combined.denominator_factors();
    REQUIRE(dens.size() == 2);
    CHECK(dens[0].poly == b2_line());
    CHECK(dens[1].poly == boundary_poly(3));
    CHECK(dens[0].mult == 1);
    CHECK(dens[1].mult == 1);
    CHECK((cf.combined.numerator() == chord(3).scaled(rq(6)) ||
           cf.combined.numerator() == chord(3).scaled(rq(-6))));
    CHECK(cf.combined.value_at({rq(7, 18), rq(1, 6)}) == 3888);
}

TEST_CASE("canonical form recursion") {
    for (int n = 4; n <= 6; ++n) {
        auto cf = canonical_form(n);
        CHECK(static_cast<int>(cf.summands.size()) == 2 * (n - 3) + 1);
        // combined denominator contains exactly b2' and b_3..b_n
        const auto& dens = cf.combined.denominator_factors();
        REQUIRE(static_cast<int>(dens.size()) == n - 1);
        bool has_b2p = false;
        for (const auto& f : dens) {
            CHECK(f.mult == 1);
            if (f.poly == b2_line()) has_b2p = true;
        }
        CHECK(has_b2p);
        for (int k = 3; k <= n; ++k) {
            bool found = false;
            for (const auto& f : dens)
                if (f.poly == boundary_poly(k)) found = true;
            CHECK(found);
        }
        // no chord survives
        for (int k = 3; k < n; ++k)
            for (const auto& f : dens) CHECK(f.poly != chord(k));
        // positive at witness
        CHECK(cf.combined.value_at({cf.witness.first, cf.witness.second}) > 0);
    }
    // frozen values at (7/18, 1/6)
    CHECK(canonical_form(4).combined.value_at({rq(7, 18), rq(1, 6)}) == rq(62208, 25));
    CHECK(canonical_form(5).combined.value_at({rq(7, 18), rq(1, 6)}) == rq(443232, 185));
}

TEST_CASE("raw summand sum has the spurious chord pole cancelling") {
    auto cf = canonical_form(4);
    REQUIRE(cf.summands.size() == 3);
    // assemble the raw sum over the full common denominator b2' b3 b4 l(c_3)
    MultiPoly l3 = chord(3);
    MultiPoly common = b2_line() * boundary_poly(3) * boundary_poly(4) * l3;
    MultiPoly num(xy_vars());
    for (const auto& s : cf.summands)
        num += s.numerator() * MultiPoly::exact_div(common, s.denominator_product());
    CHECK(MultiPoly::divides(l3, num));
    // and after the cancellation the denominator is b2' b3 b4
    MultiPoly reduced = MultiPoly::exact_div(num, l3);
    MultiPoly combined_num = cf.combined.numerator();
    CHECK(MultiPoly::divides(combined_num, reduced));
}

TEST_CASE("residues of the combined form are segment forms at the arc vertices") {
    for (int n = 3; n <= 6; ++n) {
        auto cf = canonical_form(n);
        int sgn = cf.flipped_for_positivity ? -1 : 1;
        for (int k = 3; k <= n; ++k) {
            // boundary arc of Pi_{n,3} on b_k: t in [0, 1/k] for k < n (from
            // c_{k-1} to the cusp c_k), the whole arc [0, 1] for k = n
            OneFormT r = residue(cf.combined, boundary_param(k));
            Rational hi = (k == n) ? rq(1) : rq(1, k);
            OneFormT expect = segment_form(rq(0), hi);
            CHECK(r.coeff == (sgn > 0 ? expect.coeff : -expect.coeff));
        }
        OneFormT rl = residue(cf.combined, b2_line_param());
        OneFormT expect = segment_form(rq(1, 2), rq(1));
        CHECK(rl.coeff == (sgn > 0 ? -expect.coeff : expect.coeff));
    }
}

TEST_CASE("membership") {
    CHECK(membership(3, {rq(10), rq(10)}) == Membership::Outside);
    for (int n = 3; n <= 6; ++n)
        CHECK(membership(n, {rq(1), rq(1)}) == Membership::OnBoundary);
    CHECK(membership(3, {rq(7, 18), rq(1, 6)}) == Membership::Inside);
    // cusp of b_n is on the boundary; cusp of b_{n-1} is interior for Pi_n
    CHECK(membership(3, {rq(1, 3), rq(1, 9)}) == Membership::OnBoundary);
    CHECK(membership(4, {rq(1, 3), rq(1, 9)}) == Membership::OnBoundary);  // b_4 passes through c_3
    // points on the b2 chord beyond the cell are outside
    CHECK(membership(3, {rq(6, 5), rq(13, 10)}) == Membership::Outside);
    // a glue-seam point (on the b_4 curve inside Pi_5) reports OnBoundary by
    // convention rather than resolving to Inside
    ParamCurve p4 = boundary_param(4);
    Point seam{p4.x_of_t.eval(rq(1, 2)), p4.y_of_t.eval(rq(1, 2))};
    CHECK(membership(4, seam) == Membership::OnBoundary);
    CHECK(membership(5, seam) == Membership::OnBoundary);
    // nesting on samples
    for (int k = 3; k <= 8; ++k) {
        for (const auto& x : sample_simplex(k, 100, 31)) {
            auto p = power_sums(x, 3);
            Point pt{p[1], p[2]};
            if (membership(k, pt) != Membership::Outside)
                CHECK(membership(k + 1, pt) != Membership::Outside);
        }
    }
}

TEST_CASE("subdivision") {
    CHECK(subdivision(3).size() == 1);
    CHECK(subdivision(4).size() == 3);
    CHECK(subdivision(6).size() == 7);
    for (int n : {4, 6}) {
        auto regs = subdivision(n);
        // witnesses strictly interior to their own region and to no other
        for (std::size_t i = 0; i < regs.size(); ++i) {
            CHECK(regs[i].contains(regs[i].witness, true));
            for (std::size_t j = 0; j < regs.size(); ++j)
                if (j != i) CHECK(!regs[j].contains(regs[i].witness, true));
            CHECK(membership(n, regs[i].witness) == Membership::Inside);
        }
        // sampled cell points: in exactly one region strictly, or on a seam
        for (const auto& x : sample_simplex(n, 300, 77)) {
            auto p = power_sums(x, 3);
            Point pt{p[1], p[2]};
            int strict = 0, closed = 0;
            for (const auto& r : regs) {
                if (r.contains(pt, true)) ++strict;
                if (r.contains(pt, false)) ++closed;
            }
            CHECK(strict <= 1);
            CHECK(closed >= 1);
        }
    }
}
