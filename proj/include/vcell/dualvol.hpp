#ifndef VCELL_DUALVOL_HPP
#define VCELL_DUALVOL_HPP

#include "vcell/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vcell::dualvol {

using Point = std::pair<Rational, Rational>;

// Strictly convex polygon with exact rational vertices, counterclockwise.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }

    // doubled signed area (positive: counterclockwise)
    Rational area2() const;
    bool strictly_convex() const;
    bool contains(const Point& p, bool strict) const;
    Polygon translated(const Point& d) const;
    Polygon scaled(const Rational& s) const;

    static Polygon convex_hull(std::vector<Point> pts);

private:
    std::vector<Point> v_;
};

struct DualVolumeValue {
    Rational value;   // meaningful only when bounded
    bool bounded = false;
};

// Vol((P - x)^v), normalized so the standard simplex has volume 1
// (Euclidean area doubled). bounded=false when x is not strictly interior.
DualVolumeValue dual_volume(const Polygon& P, const Point& x);

// polar dual about the origin (0 must be strictly interior)
Polygon polar_dual(const Polygon& P);

// canonical-function value of a triangle at any non-polar point: the
// analytic continuation 2*Area / (l1 l2 l3) with edge forms normalized to 1
// at the opposite vertex
Rational triangle_value(const Point& A, const Point& B, const Point& C, const Point& x);

// Canonical-function value of P at a point x that may lie outside P:
// iterated signed-difference chain over a scaffold subdivision whose running
// unions stay convex. scaffold[0] may equal P; P must appear in the scaffold.
Rational canonical_value_exterior(const Polygon& P, const Point& x,
                                  const std::vector<Polygon>& scaffold);

struct ApproxStep {
    Polygon added;    // the lune attached at this step
    Polygon hull;     // running union U_j
};

// inscribed polygon sequence from a boundary vertex stream (convex position,
// boundary order): U_j = hull of the first j+2 points
ApproxStep approximate_region(const std::vector<Point>& vertex_stream, int j);

struct LimitRow {
    int n;
    Rational omega;        // canonical-function value of Pi_{n,3}
    Rational hull;         // dual volume of conv{(1/k,1/k^2)}_{k<=n}
    Rational complement;   // hull - omega
    double delta_float;    // omega_n - omega_{n-1}
    bool hull_increment_ok;  // hull_n - hull_{n-1} == triangle(c1, c_{n-1}, c_n)
};

struct LimitReport {
    std::vector<LimitRow> rows;
    bool converged;        // |delta| fell below tol at the final step
    double tol;
};

// partial values of the limiting-cell canonical function at x for n=3..N,
// with the dual-volume hull cross-check at each step
LimitReport limiting_canonical(const Point& x, int N, double tol = 1e-9);

// exact rational points on the unit circle (tangent half-angle grid),
// counterclockwise, 2^j of them
std::vector<Point> disk_vertex_stream(int j);

} // namespace vcell::dualvol

#endif
