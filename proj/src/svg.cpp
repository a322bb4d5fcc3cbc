#include "vcell/svg.hpp"
#include "vcell/planar.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace vcell::svg {

namespace {

constexpr double kFrame = 1.05;  // cells live in [0,1]^2
constexpr int kSize = 640;

struct Mapper {
    double px(double x) const { return x / kFrame * kSize; }
    double py(double y) const { return kSize - y / kFrame * kSize; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

void polyline(std::ostringstream& os, const std::vector<std::pair<double, double>>& pts,
              const std::string& cls, const Mapper& m) {
    if (pts.empty()) return;
    os << "<path class=\"" << cls << "\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i == 0 ? "M" : " L") << fmt(m.px(pts[i].first)) << " " << fmt(m.py(pts[i].second));
    }
    os << "\"/>\n";
}

// segment of the line a*x + b*y + c = 0 clipped to the frame box
std::vector<std::pair<double, double>> clip_line(double a, double b, double c) {
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
        if (x >= -1e-9 && x <= kFrame + 1e-9 && y >= -1e-9 && y <= kFrame + 1e-9)
            hits.emplace_back(x, y);
    };
    if (b != 0) {
        push(0.0, -c / b);
        push(kFrame, -(c + a * kFrame) / b);
    }
    if (a != 0) {
        push(-c / a, 0.0);
        push(-(c + b * kFrame) / a, kFrame);
    }
    std::vector<std::pair<double, double>> seg;
    for (const auto& h : hits) {
        bool dup = false;
        for (const auto& s : seg)
            if (std::abs(s.first - h.first) < 1e-9 && std::abs(s.second - h.second) < 1e-9) dup = true;
        if (!dup) seg.push_back(h);
        if (seg.size() == 2) break;
    }
    return seg;
}

} // namespace

std::string plot_cell(int n, int samples_per_arc, int contour_grid) {
    Mapper m;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    os << "<style>.boundary{fill:none;stroke:#1f3d99;stroke-width:1.5}"
          ".chord{fill:none;stroke:#777;stroke-width:1;stroke-dasharray:6 4}"
          ".tangent{fill:none;stroke:#b5651d;stroke-width:1;stroke-dasharray:2 3}"
          ".adjoint{fill:none;stroke:#a01010;stroke-width:0.8}"
          ".cusp{fill:#a01010}</style>\n";

    auto cf = planar::canonical_form(n);

    // boundary arcs: b_2 segment plus cubic arcs b_3..b_n
    for (int k = 2; k <= n; ++k) {
        ParamCurve c = (k == 2) ? planar::b2_line_param() : planar::boundary_param(k);
        Rational a = c.domain->first, b = c.domain->second;
        std::vector<std::pair<double, double>> pts;
        pts.reserve(static_cast<std::size_t>(samples_per_arc));
        for (int i = 0; i < samples_per_arc; ++i) {
            Rational t = a + (b - a) * Rational(i, samples_per_arc - 1);
            pts.emplace_back(to_double(c.x_of_t.eval(t)), to_double(c.y_of_t.eval(t)));
        }
        polyline(os, pts, "boundary", m);
    }

    // chords l(c_k,(1,1)) and cuspidal tangents for the subdivision steps
    for (int k = 3; k < n; ++k) {
        auto ck = planar::cusp(k);
        std::vector<std::pair<double, double>> chord{
            {to_double(ck.first), to_double(ck.second)}, {1.0, 1.0}};
        polyline(os, chord, "chord", m);
        MultiPoly ct = planar::cuspidal_tangent(k);
        double a = to_double(ct.coeff({1, 0}));
        double b = to_double(ct.coeff({0, 1}));
        double c0 = to_double(ct.coeff({0, 0}));
        auto seg = clip_line(a, b, c0);
        if (seg.size() == 2) polyline(os, seg, "tangent", m);
    }

    // cusp markers
    for (int k = 3; k <= n; ++k) {
        auto ck = planar::cusp(k);
        os << "<circle class=\"cusp\" cx=\"" << fmt(m.px(to_double(ck.first))) << "\" cy=\""
           << fmt(m.py(to_double(ck.second))) << "\" r=\"3\"/>\n";
    }

    // adjoint zero set by marching squares on the combined numerator
    const MultiPoly& adj = cf.combined.numerator();
    int G = contour_grid;
    std::vector<double> vals(static_cast<std::size_t>((G + 1) * (G + 1)));
    for (int i = 0; i <= G; ++i)
        for (int j = 0; j <= G; ++j) {
            double x = kFrame * i / G, y = kFrame * j / G;
            vals[static_cast<std::size_t>(i * (G + 1) + j)] = adj.eval_double({x, y});
        }
    os << "<path class=\"adjoint\" d=\"";
    auto interp = [](double a, double b) { return a / (a - b); };
    bool any = false;
    for (int i = 0; i < G; ++i) {
        for (int j = 0; j < G; ++j) {
            double x0 = kFrame * i / G, x1 = kFrame * (i + 1) / G;
            double y0 = kFrame * j / G, y1 = kFrame * (j + 1) / G;
            double v00 = vals[static_cast<std::size_t>(i * (G + 1) + j)];
            double v10 = vals[static_cast<std::size_t>((i + 1) * (G + 1) + j)];
            double v01 = vals[static_cast<std::size_t>(i * (G + 1) + j + 1)];
            double v11 = vals[static_cast<std::size_t>((i + 1) * (G + 1) + j + 1)];
            std::vector<std::pair<double, double>> cross;
            if ((v00 < 0) != (v10 < 0)) cross.emplace_back(x0 + (x1 - x0) * interp(v00, v10), y0);
            if ((v01 < 0) != (v11 < 0)) cross.emplace_back(x0 + (x1 - x0) * interp(v01, v11), y1);
            if ((v00 < 0) != (v01 < 0)) cross.emplace_back(x0, y0 + (y1 - y0) * interp(v00, v01));
            if ((v10 < 0) != (v11 < 0)) cross.emplace_back(x1, y0 + (y1 - y0) * interp(v10, v11));
            if (cross.size() >= 2) {
                os << "M" << fmt(m.px(cross[0].first)) << " " << fmt(m.py(cross[0].second))
                   << " L" << fmt(m.px(cross[1].first)) << " " << fmt(m.py(cross[1].second)) << " ";
                any = true;
            }
        }
    }
    if (!any) os << "M0 0";
    os << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace vcell::svg
