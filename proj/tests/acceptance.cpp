// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include "vcell/dualvol.hpp"
#include "vcell/fixtures.hpp"
#include "vcell/forms.hpp"
#include "vcell/planar.hpp"
#include "vcell/vandermonde.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace vcell;

namespace {

Rational rq(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

int g_failures = 0;

void criterion(int idx, const std::string& name, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                secs, err.empty() ? "" : " error: ", err.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// brute-force partition count: partitions of a into exactly b positive parts
long long brute_partitions(int a, int b, int maxpart) {
    if (b == 0) return a == 0 ? 1 : 0;
    long long count = 0;
    for (int p = std::min(a, maxpart); p >= 1; --p) count += brute_partitions(a - p, b - 1, p);
    return count;
}

} // namespace

int main() {
    criterion(1, "resultant oracle: 5x5 det = lambda * b_n for n = 3..8", [] {
        for (int n = 3; n <= 8; ++n) {
            MultiPoly det = planar::resultant_boundary(n);
            MultiPoly q = MultiPoly::exact_div(det, planar::boundary_poly(n));
            if (!q.is_constant()) return false;
            Rational lambda = q.leading().second;
            if (lambda == 0) return false;
            if (det != planar::boundary_poly(n).scaled(lambda)) return false;
        }
        return true;
    });

    criterion(2, "b_2 = -(2y-3x+1)^2 exactly", [] {
        MultiPoly l = planar::b2_line();
        return planar::boundary_poly(2) == -(l * l);
    });

    criterion(3, "cusp certificates for k = 3..10", [] {
        for (int k = 3; k <= 10; ++k) {
            planar::Point c = planar::cusp(k);  // verifies b_k, b_x, b_y vanish
            if (c != planar::Point{rq(1, k), rq(1, static_cast<long>(k) * k)}) return false;
            ParamCurve pc = planar::boundary_param(k);
            UniPoly nx = (pc.x_of_t - UniRat::constant(c.first)).num();
            UniPoly ny = (pc.y_of_t - UniRat::constant(c.second)).num();
            auto roots = rational_roots(UniPoly::gcd(nx, ny));
            if (roots.size() != 1 || roots[0].first != rq(1, k)) return false;
        }
        return true;
    });

    criterion(4, "fixture vanishing: Q and P on >= 100 exact points + symbolic tier", [] {
        auto rep = fixtures::verify_quartic_boundaries(100, 2026, true);
        for (const auto& c : rep.checks)
            if (!c.pass) return false;
        return true;
    });

    criterion(5, "partition counts vs brute force (n <= 12, d <= 6); (5,4) -> 2", [] {
        for (int a = 0; a <= 12; ++a)
            for (int b = 1; b <= 6; ++b)
                if (partition_count(a, b) != brute_partitions(a, b, a)) return false;
        for (int d = 3; d <= 6; ++d)
            for (int n = d - 1; n <= 12; ++n) {
                int fl = (d - 1) / 2, ce = d / 2;
                if (new_hypersurface_count(n, d) != brute_partitions(n - fl, ce, n)) return false;
            }
        return new_hypersurface_count(5, 4) == 2;
    });

    criterion(6, "residue targets for A_I, the non-log form, and A_II", [] {
        auto fx = fixture_forms();
        OneFormT r1 = residue(fx.a1, fx.cusp_cubic);
        if (!(r1 == segment_form(rq(-1), rq(1)))) return false;

        RationalTwoForm w(MultiPoly::constant(xy_vars(), rq(1)), {{fx.cusp_cubic.implicit, 1}});
        OneFormT r2 = residue(w, fx.cusp_cubic);
        OneFormT invt2{UniRat(UniPoly::constant(rq(1)), UniPoly::monomial(2, rq(1)))};
        if (!r2.equal_up_to_sign(invt2)) return false;
        auto rep = is_logarithmic(w, {fx.cusp_cubic});
        if (rep.logarithmic) return false;
        bool order2 = false;
        for (const auto& o : rep.offenders)
            if (o.root && *o.root == 0 && o.order == 2) order2 = true;
        if (!order2) return false;

        ParamCurve line = line_param(xy_linear(rq(-3, 2), rq(1), rq(1, 2)));
        OneFormT r3 = residue(fx.a2, line);
        return r3.equal_up_to_sign(segment_form(rq(1, 4), rq(1)));
    });

    criterion(7, "triangle identity omega_S1 + omega_AIII = omega_triangle", [] {
        auto fx = fixture_forms();
        auto sum = form_add(fx.s1, fx.a3);
        if (!(sum == fx.triangle)) return false;
        // denominator y (x-1) (y-x)
        const auto& dens = sum.denominator_factors();
        if (dens.size() != 3) return false;
        bool y = false, xm1 = false, ymx = false;
        for (const auto& f : dens) {
            if (f.poly == xy_linear(rq(0), rq(1), rq(0))) y = true;
            if (f.poly == xy_linear(rq(1), rq(0), rq(-1))) xm1 = true;
            if (f.poly == xy_linear(rq(-1), rq(1), rq(0))) ymx = true;
        }
        return y && xm1 && ymx;
    });

    criterion(8, "recursion: spurious cancellation, clean denominators, logarithmic n = 3..6", [] {
        // n = 4 raw numerator divisible by l(c_3,(1,1))
        auto cf4 = planar::canonical_form(4);
        MultiPoly l3 = planar::chord(3);
        MultiPoly common =
            planar::b2_line() * planar::boundary_poly(3) * planar::boundary_poly(4) * l3;
        MultiPoly raw(xy_vars());
        for (const auto& s : cf4.summands)
            raw += s.numerator() * MultiPoly::exact_div(common, s.denominator_product());
        if (!MultiPoly::divides(l3, raw)) return false;

        for (int n = 3; n <= 6; ++n) {
            auto cf = planar::canonical_form(n);
            if (static_cast<int>(cf.summands.size()) != 2 * (n - 3) + 1) return false;
            const auto& dens = cf.combined.denominator_factors();
            if (static_cast<int>(dens.size()) != n - 1) return false;
            for (const auto& f : dens) {
                if (f.mult != 1) return false;
                bool expected = (f.poly == planar::b2_line());
                for (int k = 3; k <= n; ++k)
                    if (f.poly == planar::boundary_poly(k)) expected = true;
                if (!expected) return false;
            }
            std::vector<ParamCurve> curves;
            curves.push_back(planar::b2_line_param());
            for (int k = 3; k <= n; ++k) curves.push_back(planar::boundary_param(k));
            auto rep = is_logarithmic(cf.combined, curves);
            if (!rep.logarithmic) return false;
        }
        return true;
    });

    criterion(9, "membership: 10^3 samples inside per n in {3..6}, 10^3 exterior probes outside", [] {
        for (int n = 3; n <= 6; ++n) {
            for (const auto& xpt : sample_simplex(n, 1000, 4200 + static_cast<std::uint64_t>(n))) {
                auto p = power_sums(xpt, 3);
                if (planar::membership(n, {p[1], p[2]}) == planar::Membership::Outside)
                    return false;
            }
        }
        // provably exterior probes: y^2 > x^3, or below the b_2 line, or
        // x > 1, or y <= 0 (power-sum bounds on the simplex)
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<long> xv(0, 1050000), yv(-50000, 1050000);
        MultiPoly b2p = planar::b2_line();
        int probes = 0;
        while (probes < 1000) {
            Rational x(Integer(xv(rng)), Integer(1000000));
            Rational y(Integer(yv(rng)), Integer(1000000));
            bool exterior = (y * y > x * x * x) || (b2p.eval({x, y}) < 0) || x > 1 || y <= 0;
            if (!exterior) continue;
            ++probes;
            for (int n = 3; n <= 6; ++n)
                if (planar::membership(n, {x, y}) != planar::Membership::Outside) return false;
        }
        return true;
    });

    criterion(10, "dual-volume oracles: triangle 27, square 16, simplex closed form x50", [] {
        dualvol::Polygon tri({{rq(0), rq(0)}, {rq(1), rq(0)}, {rq(0), rq(1)}});
        auto t = dualvol::dual_volume(tri, {rq(1, 3), rq(1, 3)});
        if (!t.bounded || t.value != 27) return false;
        dualvol::Polygon sq({{rq(0), rq(0)}, {rq(1), rq(0)}, {rq(1), rq(1)}, {rq(0), rq(1)}});
        auto s = dualvol::dual_volume(sq, {rq(1, 2), rq(1, 2)});
        if (!s.bounded || s.value != 16) return false;
        std::mt19937_64 rng(55);
        std::uniform_int_distribution<long> nd(1, 97);
        int done = 0;
        while (done < 50) {
            Rational x(Integer(nd(rng)), Integer(100 + nd(rng)));
            Rational y(Integer(nd(rng)), Integer(100 + nd(rng)));
            if (x <= 0 || y <= 0 || x + y >= 1) continue;
            auto v = dualvol::dual_volume(tri, {x, y});
            if (!v.bounded || v.value != Rational(1) / (x * y * (1 - x - y))) return false;
            ++done;
        }
        return true;
    });

    criterion(11, "chain trick: interior reproduction and two-triangle signed identity", [] {
        dualvol::Polygon Tl({{rq(0), rq(0)}, {rq(1), rq(0)}, {rq(0), rq(1)}});
        dualvol::Polygon Tr({{rq(1), rq(0)}, {rq(1), rq(1)}, {rq(0), rq(1)}});
        dualvol::Polygon sq({{rq(0), rq(0)}, {rq(1), rq(0)}, {rq(1), rq(1)}, {rq(0), rq(1)}});
        dualvol::Point x{rq(1, 4), rq(1, 4)};
        Rational inter = dualvol::canonical_value_exterior(Tl, x, {Tl, Tr});
        if (inter != dualvol::dual_volume(Tl, x).value) return false;
        Rational cont = dualvol::canonical_value_exterior(Tr, x, {Tl, Tr});
        Rational expect = dualvol::dual_volume(sq, x).value - dualvol::dual_volume(Tl, x).value;
        return cont == expect;
    });

    criterion(12, "convergence: disk sequence deltas < 1e-6 by j = 12; limit deltas monotone", [] {
        dualvol::Point q{rq(0), rq(1, 2)};
        double prev = 0.0, delta = 1e9;
        Rational prev_exact(-1);
        for (int j = 1; j <= 12; ++j) {
            auto pts = dualvol::disk_vertex_stream(j);
            dualvol::Polygon U = dualvol::Polygon::convex_hull(pts);
            auto v = dualvol::dual_volume(U, q);
            if (!v.bounded) return false;
            if (prev_exact >= 0 && !(v.value < prev_exact)) return false;  // monotone
            if (j > 1) delta = std::abs(to_double(v.value) - prev);
            prev = to_double(v.value);
            prev_exact = v.value;
        }
        if (!(delta < 1e-6)) return false;

        // three interior sample points: exact nu_{3,3} images of points with
        // three distinct nonzero coordinates (hence interior per the boundary
        // characterization)
        std::vector<dualvol::Point> xs = {
            {rq(7, 18), rq(1, 6)},        // image of (1/2, 1/3, 1/6)
            {rq(23, 50), rq(61, 250)},    // image of (3/5, 3/10, 1/10)
            {rq(69, 200), rq(49, 400)},   // image of (2/5, 7/20, 1/4)
        };
        for (const auto& x : xs) {
            if (planar::membership(3, x) != planar::Membership::Inside) return false;
            auto rep = dualvol::limiting_canonical(x, 12);
            if (rep.rows.size() != 10) return false;
            for (const auto& row : rep.rows)
                if (!row.hull_increment_ok) return false;
            for (std::size_t i = 2; i < rep.rows.size(); ++i)
                if (!(std::abs(rep.rows[i].delta_float) <
                      std::abs(rep.rows[i - 1].delta_float)))
                    return false;
        }
        return true;
    });

    std::printf("%s (%d/12 criteria passed)\n", g_failures == 0 ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES",
                12 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
