#include "vcell/dualvol.hpp"
#include "vcell/errors.hpp"
#include "vcell/planar.hpp"

#include <algorithm>
#include <cmath>

namespace vcell::dualvol {

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

} // namespace

Polygon::Polygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw DimensionMismatch("polygon needs at least 3 vertices");
    if (area2() < 0) std::reverse(v_.begin(), v_.end());  // enforce ccw
}

Rational Polygon::area2() const {
    Rational s(0);
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point& a = v_[i];
        const Point& b = v_[(i + 1) % v_.size()];
        s += a.first * b.second - b.first * a.second;
    }
    return s;
}

bool Polygon::strictly_convex() const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point& a = v_[i];
        const Point& b = v_[(i + 1) % v_.size()];
        const Point& c = v_[(i + 2) % v_.size()];
        if (cross(a, b, c) <= 0) return false;
    }
    return true;
}

bool Polygon::contains(const Point& p, bool strict) const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
        Rational c = cross(v_[i], v_[(i + 1) % v_.size()], p);
        if (strict ? c <= 0 : c < 0) return false;
    }
    return true;
}

Polygon Polygon::translated(const Point& d) const {
    std::vector<Point> w;
    w.reserve(v_.size());
    for (const auto& p : v_) w.emplace_back(p.first + d.first, p.second + d.second);
    return Polygon(std::move(w));
}

Polygon Polygon::scaled(const Rational& s) const {
    std::vector<Point> w;
    w.reserve(v_.size());
    for (const auto& p : v_) w.emplace_back(p.first * s, p.second * s);
    return Polygon(std::move(w));
}

Polygon Polygon::convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw DimensionMismatch("hull of fewer than 3 distinct points");
    // monotone chain, strict turns so collinear middle points drop out
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    std::size_t lower = k + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return Polygon(std::move(h));
}

DualVolumeValue dual_volume(const Polygon& P, const Point& x) {
    DualVolumeValue out;
    if (!P.strictly_convex())
        throw DimensionMismatch("dual_volume requires a strictly convex polygon");
    if (!P.contains(x, true)) return out;  // bounded = false
    const auto& v = P.vertices();
    const std::size_t m = v.size();
    // vertex u_i of P-x gives the dual edge <y,u_i> = -1; consecutive
    // constraints intersect in the dual vertices (edge-vertex duality)
    std::vector<Point> dual;
    dual.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational a1 = v[i].first - x.first, b1 = v[i].second - x.second;
        Rational a2 = v[(i + 1) % m].first - x.first, b2 = v[(i + 1) % m].second - x.second;
        Rational det = a1 * b2 - a2 * b1;
        if (det == 0) throw std::logic_error("dual_volume: degenerate consecutive vertices");
        // solve a1 X + b1 Y = -1, a2 X + b2 Y = -1
        dual.emplace_back((b1 - b2) / det, (a2 - a1) / det);
    }
    Polygon D(std::move(dual));
    out.value = abs(D.area2());  // doubled area: standard simplex -> 1
    out.bounded = true;
    return out;
}

Polygon polar_dual(const Polygon& P) {
    DualVolumeValue probe = dual_volume(P, Point{Rational(0), Rational(0)});
    if (!probe.bounded) throw DimensionMismatch("polar_dual: origin not strictly interior");
    const auto& v = P.vertices();
    const std::size_t m = v.size();
    std::vector<Point> dual;
    for (std::size_t i = 0; i < m; ++i) {
        Rational a1 = v[i].first, b1 = v[i].second;
        Rational a2 = v[(i + 1) % m].first, b2 = v[(i + 1) % m].second;
        Rational det = a1 * b2 - a2 * b1;
        dual.emplace_back((b1 - b2) / det, (a2 - a1) / det);
    }
    return Polygon(std::move(dual));
}

Rational triangle_value(const Point& A, const Point& B, const Point& C, const Point& x) {
    Rational area2 = cross(A, B, C);
    if (area2 == 0) throw DimensionMismatch("degenerate triangle");
    auto edge = [&](const Point& Q, const Point& R, const Point& S) -> Rational {
        Rational a = R.second - Q.second, b = Q.first - R.first;
        Rational c0 = -(a * Q.first + b * Q.second);
        Rational at_opp = a * S.first + b * S.second + c0;
        Rational at_x = a * x.first + b * x.second + c0;
        if (at_x == 0) throw std::domain_error("triangle_value: point on an edge line");
        return at_x / at_opp;
    };
    return Rational(1) / (abs(area2) * edge(A, B, C) * edge(B, C, A) * edge(C, A, B));
}

namespace {

// union of a set of subdivision pieces: directed edges cancel against their
// reverses along shared faces, the rest must chain into one convex cycle
// (collinear chain vertices allowed)
std::optional<Polygon> union_of_set(const std::vector<Polygon>& pieces,
                                    const std::vector<std::size_t>& idx) {
    std::vector<std::pair<Point, Point>> edges;
    for (std::size_t i : idx) {
        const auto& v = pieces[i].vertices();
        for (std::size_t k = 0; k < v.size(); ++k) {
            Point p = v[k], q = v[(k + 1) % v.size()];
            auto rev = std::find(edges.begin(), edges.end(), std::make_pair(q, p));
            if (rev != edges.end())
                edges.erase(rev);
            else
                edges.emplace_back(p, q);
        }
    }
    if (edges.size() < 3) return std::nullopt;
    std::vector<Point> chain;
    chain.push_back(edges[0].first);
    Point cur = edges[0].second;
    std::vector<bool> used(edges.size(), false);
    used[0] = true;
    for (std::size_t step = 1; step < edges.size(); ++step) {
        bool found = false;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (used[e] || edges[e].first != cur) continue;
            chain.push_back(cur);
            cur = edges[e].second;
            used[e] = true;
            found = true;
            break;
        }
        if (!found) return std::nullopt;  // disconnected or branching boundary
    }
    if (cur != chain.front()) return std::nullopt;
    const std::size_t m = chain.size();
    for (std::size_t k = 0; k < m; ++k)
        if (cross(chain[k], chain[(k + 1) % m], chain[(k + 2) % m]) < 0) return std::nullopt;
    return Polygon(chain);
}

bool same_polygon(const Polygon& A, const Polygon& B) {
    if (A.size() != B.size()) return false;
    const auto& a = A.vertices();
    const auto& b = B.vertices();
    for (std::size_t off = 0; off < b.size(); ++off) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[(i + off) % b.size()]) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

} // namespace

Rational canonical_value_exterior(const Polygon& P, const Point& x,
                                  const std::vector<Polygon>& scaffold) {
    std::size_t target = scaffold.size();
    for (std::size_t i = 0; i < scaffold.size(); ++i)
        if (same_polygon(scaffold[i], P)) { target = i; break; }
    if (target == scaffold.size()) throw InvalidScaffold("P does not appear in the scaffold");

    std::size_t seed = scaffold.size();
    for (std::size_t i = 0; i < scaffold.size(); ++i)
        if (scaffold[i].contains(x, true)) { seed = i; break; }
    if (seed == scaffold.size()) throw InvalidScaffold("no scaffold piece contains x");

    std::vector<Rational> value(scaffold.size());
    std::vector<bool> known(scaffold.size(), false);
    value[seed] = dual_volume(scaffold[seed], x).value;
    known[seed] = true;

    // value(j) = Vol((U(T) - x)^v) - sum of known values over T\{j}, for any
    // piece set T containing the seed, exactly one unknown, and convex union.
    // Pairwise-with-seed first, then all-known-plus-one; x stays interior to
    // every union evaluated.
    auto try_set = [&](std::size_t j, const std::vector<std::size_t>& base) -> bool {
        std::vector<std::size_t> T = base;
        T.push_back(j);
        auto u = union_of_set(scaffold, T);
        if (!u) return false;
        Polygon strict = Polygon::convex_hull(u->vertices());
        auto dv = dual_volume(strict, x);
        if (!dv.bounded) return false;
        Rational v = dv.value;
        for (std::size_t s : base) v -= value[s];
        value[j] = v;
        known[j] = true;
        return true;
    };

    bool progress = true;
    while (progress && !known[target]) {
        progress = false;
        for (std::size_t j = 0; j < scaffold.size(); ++j) {
            if (known[j]) continue;
            if (try_set(j, {seed})) { progress = true; continue; }
            std::vector<std::size_t> all_known;
            for (std::size_t s = 0; s < scaffold.size(); ++s)
                if (known[s]) all_known.push_back(s);
            if (all_known.size() > 1 && try_set(j, all_known)) progress = true;
        }
    }
    if (!known[target])
        throw InvalidScaffold("chain cannot reach P with convex unions");
    return value[target];
}

ApproxStep approximate_region(const std::vector<Point>& vertex_stream, int j) {
    if (j < 1) throw DimensionMismatch("approximate_region requires j >= 1");
    std::size_t take = static_cast<std::size_t>(j) + 2;
    if (vertex_stream.size() < take)
        throw DimensionMismatch("vertex stream too short for requested step");
    std::vector<Point> cur(vertex_stream.begin(), vertex_stream.begin() + static_cast<long>(take));
    Polygon hull = Polygon::convex_hull(cur);
    if (hull.size() != take)
        throw DimensionMismatch("approximate_region: stream points not in convex position");
    if (j == 1) return ApproxStep{hull, hull};
    std::vector<Point> prev_pts(vertex_stream.begin(), vertex_stream.begin() + static_cast<long>(take - 1));
    Polygon prev = Polygon::convex_hull(prev_pts);
    // the added lune: new vertex plus the previous-hull chain it replaced.
    // The visible chain is contiguous; start the scan at a non-visible edge
    // so wrap-around does not split it.
    const Point& w = vertex_stream[take - 1];
    const auto& pv = prev.vertices();
    const std::size_t m = pv.size();
    std::size_t start = m;
    for (std::size_t i = 0; i < m; ++i)
        if (cross(pv[i], pv[(i + 1) % m], w) >= 0) { start = i; break; }
    if (start == m) throw std::logic_error("approximate_region: stream point sees every edge");
    std::vector<Point> visible;
    for (std::size_t k = 1; k <= m; ++k) {
        std::size_t i = (start + k) % m;
        const Point& p = pv[i];
        const Point& q = pv[(i + 1) % m];
        if (cross(p, q, w) < 0) {
            if (visible.empty()) visible.push_back(p);
            visible.push_back(q);
        } else if (!visible.empty()) {
            break;
        }
    }
    if (visible.empty()) return ApproxStep{hull, hull};  // w inside previous hull
    visible.push_back(w);
    return ApproxStep{Polygon(visible), hull};
}

LimitReport limiting_canonical(const Point& x, int N, double tol) {
    if (N < 3) throw DimensionMismatch("limiting_canonical requires N >= 3");
    if (planar::membership(3, x) != planar::Membership::Inside)
        throw std::domain_error("limiting_canonical: x must be strictly inside Pi_{3,3}");
    LimitReport rep;
    rep.tol = tol;
    auto cuspk = [](int k) {
        return Point{Rational(1, k), Rational(1, static_cast<long>(k) * k)};
    };
    // one recursion pass: Omega_n is the prefix sum of the summand list
    auto cf = planar::canonical_form(N);
    RationalTwoForm acc = cf.summands[0];
    std::size_t consumed = 1;
    Rational prev_omega(0), prev_hull(0);
    for (int n = 3; n <= N; ++n) {
        while (consumed < static_cast<std::size_t>(2 * (n - 3) + 1)) {
            acc = form_add(acc, cf.summands[consumed]);
            ++consumed;
        }
        LimitRow row;
        row.n = n;
        row.omega = acc.value_at({x.first, x.second});
        std::vector<Point> verts;
        for (int k = 1; k <= n; ++k) verts.push_back(cuspk(k));
        Polygon hull = Polygon::convex_hull(verts);
        row.hull = dual_volume(hull, x).value;
        row.complement = row.hull - row.omega;
        row.delta_float = (n == 3) ? 0.0 : to_double(Rational(row.omega - prev_omega));
        if (n == 3) {
            row.hull_increment_ok = true;
        } else {
            Rational tri = triangle_value(cuspk(1), cuspk(n - 1), cuspk(n), x);
            row.hull_increment_ok = (row.hull - prev_hull == tri);
        }
        prev_omega = row.omega;
        prev_hull = row.hull;
        rep.rows.push_back(std::move(row));
    }
    rep.converged = rep.rows.size() > 1 && std::abs(rep.rows.back().delta_float) < tol;
    return rep;
}

std::vector<Point> disk_vertex_stream(int j) {
    if (j < 0) throw DimensionMismatch("disk_vertex_stream requires j >= 0");
    // tangent half-angle grid t = i/2^j over [-1, 1], mirrored across the
    // y-axis: exact rational circle points, nested across levels. About
    // 2^(j+2) points, counterclockwise from (0, -1).
    long half = 1L << j;
    std::vector<Point> right;
    for (long i = -half; i <= half; ++i) {
        Rational t(i, half);
        Rational d = 1 + t * t;
        right.emplace_back((1 - t * t) / d, 2 * t / d);  // angle in (-pi/2, pi/2]
    }
    std::vector<Point> out;
    out.reserve(2 * right.size());
    for (const auto& p : right) out.push_back(p);  // t=-1 -> (0,-1) up to t=1 -> (0,1)
    for (auto it = std::next(right.rbegin()); it != std::prev(right.rend()); ++it)
        out.emplace_back(-it->first, it->second);  // left half, top to bottom
    return out;
}

} // namespace vcell::dualvol
