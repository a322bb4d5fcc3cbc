#include "vcell/forms.hpp"
#include "vcell/errors.hpp"
#include "vcell/polymatrix.hpp"

#include <algorithm>
#include <sstream>

namespace vcell {

std::vector<std::string> xy_vars() { return {"x", "y"}; }

MultiPoly xy_poly(std::initializer_list<std::pair<std::pair<unsigned, unsigned>, Rational>> terms) {
    MultiPoly p(xy_vars());
    for (const auto& [e, c] : terms) p.add_term({e.first, e.second}, c);
    return p;
}

MultiPoly xy_linear(const Rational& cx, const Rational& cy, const Rational& c0) {
    MultiPoly p(xy_vars());
    p.add_term({1, 0}, cx);
    p.add_term({0, 1}, cy);
    p.add_term({0, 0}, c0);
    return p;
}

std::pair<MultiPoly, Rational> normalize_factor(const MultiPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot normalize the zero factor");
    Rational c = p.content_signed();  // sign follows the canonical leading term
    return {p.scaled(Rational(1) / c), c};
}

RationalTwoForm::RationalTwoForm(MultiPoly numerator, std::vector<Factor> denominator,
                                 int orientation)
    : num_(std::move(numerator)), den_(std::move(denominator)), orient_(orientation >= 0 ? 1 : -1) {
    normalize();
}

void RationalTwoForm::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    // normalize factors, folding multipliers into the numerator
    Rational scale(1);
    std::vector<Factor> nf;
    for (auto& f : den_) {
        if (f.mult == 0) continue;
        if (f.mult < 0) throw std::domain_error("negative factor multiplicity");
        if (f.poly.is_constant()) {
            scale /= pow(f.poly.leading().second, static_cast<unsigned>(f.mult));
            continue;
        }
        auto [p, c] = normalize_factor(f.poly);
        scale /= pow(c, static_cast<unsigned>(f.mult));
        // merge equal factors
        bool merged = false;
        for (auto& g : nf)
            if (g.poly == p) { g.mult += f.mult; merged = true; break; }
        if (!merged) nf.push_back({p, f.mult});
    }
    num_ = num_.scaled(scale);
    den_ = std::move(nf);
    // cancel factors that exactly divide the numerator
    for (auto& f : den_) {
        while (f.mult > 0) {
            try {
                num_ = MultiPoly::exact_div(num_, f.poly);
                f.mult -= 1;
            } catch (const NotDivisible&) {
                break;
            }
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.mult == 0; }),
               den_.end());
    std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
        return MultiPoly::compare(a.poly, b.poly) < 0;
    });
}

RationalTwoForm RationalTwoForm::flipped() const {
    RationalTwoForm f = *this;
    f.num_ = -f.num_;
    return f;
}

RationalTwoForm RationalTwoForm::scaled(const Rational& c) const {
    return RationalTwoForm(num_.scaled(c), den_, orient_);
}

Rational RationalTwoForm::value_at(const std::vector<Rational>& pt) const {
    Rational d(1);
    for (const auto& f : den_) d *= pow(f.poly.eval(pt), static_cast<unsigned>(f.mult));
    if (d == 0) throw std::domain_error("form evaluated on its polar locus");
    Rational v = num_.eval(pt) / d;
    return orient_ < 0 ? Rational(-v) : v;
}

MultiPoly RationalTwoForm::denominator_product() const {
    MultiPoly d = MultiPoly::constant(num_.vars(), Rational(1));
    for (const auto& f : den_) d *= f.poly.pow(static_cast<unsigned>(f.mult));
    return d;
}

bool RationalTwoForm::operator==(const RationalTwoForm& o) const {
    if (orient_ != o.orient_ || num_ != o.num_ || den_.size() != o.den_.size()) return false;
    for (std::size_t i = 0; i < den_.size(); ++i)
        if (den_[i].mult != o.den_[i].mult || den_[i].poly != o.den_[i].poly) return false;
    return true;
}

bool RationalTwoForm::equal_up_to_sign(const RationalTwoForm& o) const {
    if (den_.size() != o.den_.size()) return false;
    for (std::size_t i = 0; i < den_.size(); ++i)
        if (den_[i].mult != o.den_[i].mult || den_[i].poly != o.den_[i].poly) return false;
    MultiPoly a = orient_ < 0 ? -num_ : num_;
    MultiPoly b = o.orient_ < 0 ? -o.num_ : o.num_;
    return a == b || a == -b;
}

std::string RationalTwoForm::str() const {
    std::ostringstream os;
    if (orient_ < 0) os << "-";
    os << "(" << num_.str() << ")";
    if (!den_.empty()) {
        os << " / [";
        bool first = true;
        for (const auto& f : den_) {
            if (!first) os << " * ";
            first = false;
            os << "(" << f.poly.str() << ")";
            if (f.mult > 1) os << "^" << f.mult;
        }
        os << "]";
    }
    os << " dx^dy";
    return os.str();
}

bool ParamCurve::composes_to_zero() const {
    return compose(implicit, x_of_t, y_of_t).is_zero();
}

UniRat compose(const MultiPoly& p, const UniRat& X, const UniRat& Y) {
    if (p.nvars() != 2) throw DimensionMismatch("compose expects a polynomial in two variables");
    int dx = std::max(p.degree_in(0), 0);
    int dy = std::max(p.degree_in(1), 0);
    std::vector<UniRat> px(static_cast<std::size_t>(dx) + 1), py(static_cast<std::size_t>(dy) + 1);
    px[0] = UniRat::constant(Rational(1));
    for (int i = 1; i <= dx; ++i) px[static_cast<std::size_t>(i)] = px[static_cast<std::size_t>(i - 1)] * X;
    py[0] = UniRat::constant(Rational(1));
    for (int j = 1; j <= dy; ++j) py[static_cast<std::size_t>(j)] = py[static_cast<std::size_t>(j - 1)] * Y;
    UniRat s;
    for (const auto& [e, c] : p.terms())
        s = s + px[e[0]] * py[e[1]] * UniRat::constant(c);
    return s;
}

RationalTwoForm form_add(const RationalTwoForm& a, const RationalTwoForm& b) {
    if (a.vars() != b.vars()) throw DimensionMismatch("form_add: different variable pairs");
    if (a.orientation() != b.orientation())
        throw std::domain_error("form_add: orientation mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // least common denominator over the normalized factor multisets
    std::vector<RationalTwoForm::Factor> lcd = a.denominator_factors();
    for (const auto& f : b.denominator_factors()) {
        bool found = false;
        for (auto& g : lcd)
            if (g.poly == f.poly) { g.mult = std::max(g.mult, f.mult); found = true; break; }
        if (!found) lcd.push_back(f);
    }
    auto complement = [&](const RationalTwoForm& x) {
        MultiPoly m = MultiPoly::constant(x.vars(), Rational(1));
        for (const auto& g : lcd) {
            int have = 0;
            for (const auto& f : x.denominator_factors())
                if (f.poly == g.poly) { have = f.mult; break; }
            if (g.mult > have) m *= g.poly.pow(static_cast<unsigned>(g.mult - have));
        }
        return m;
    };
    MultiPoly num = a.numerator() * complement(a) + b.numerator() * complement(b);
    return RationalTwoForm(std::move(num), std::move(lcd), a.orientation());
}

OneFormT residue(const RationalTwoForm& form, const ParamCurve& along, bool check_other_factors) {
    auto [F, fmult] = normalize_factor(along.implicit);
    (void)fmult;
    const auto& dens = form.denominator_factors();
    std::size_t idx = dens.size();
    for (std::size_t i = 0; i < dens.size(); ++i)
        if (dens[i].poly == F) { idx = i; break; }
    if (idx == dens.size())
        throw UnmatchedFactor("residue: curve is not a denominator factor of the form");
    if (dens[idx].mult > 1)
        throw NotSimplePole("residue: denominator factor has multiplicity > 1");
    if (!along.composes_to_zero())
        throw std::domain_error("residue: parametrization does not satisfy the implicit equation");

    const UniRat& X = along.x_of_t;
    const UniRat& Y = along.y_of_t;
    UniRat G = UniRat::constant(Rational(1));
    for (std::size_t i = 0; i < dens.size(); ++i) {
        if (i == idx) continue;
        UniRat gi = compose(dens[i].poly, X, Y);
        if (gi.is_zero()) {
            if (check_other_factors)
                throw UnmatchedFactor("residue: another denominator factor vanishes on the curve");
            throw std::domain_error("residue: denominator vanishes identically on the curve");
        }
        G = G * gi.pow(static_cast<unsigned>(dens[i].mult));
    }
    UniRat f = compose(form.numerator(), X, Y);
    if (form.orientation() < 0) f = -f;

    MultiPoly Fy = F.derivative(1);
    UniRat fy = Fy.is_zero() ? UniRat() : compose(Fy, X, Y);
    UniRat r;
    if (!fy.is_zero()) {
        // eta = -f/(G F_y) dx
        r = -(f / (G * fy)) * X.derivative();
    } else {
        MultiPoly Fx = F.derivative(0);
        UniRat fx = Fx.is_zero() ? UniRat() : compose(Fx, X, Y);
        if (fx.is_zero())
            throw std::domain_error("residue: both partials vanish identically on the curve");
        // eta = f/(G F_x) dy
        r = (f / (G * fx)) * Y.derivative();
    }
    return OneFormT{r};
}

OneFormT segment_form(const Rational& a, const Rational& b) {
    if (a == b) throw std::domain_error("segment_form requires distinct endpoints");
    UniPoly den = UniPoly({-a, Rational(1)}) * UniPoly({-b, Rational(1)});
    return OneFormT{UniRat(UniPoly::constant(b - a), den)};
}

ParamCurve line_param(const MultiPoly& line) {
    if (line.total_degree() != 1) throw DimensionMismatch("line_param expects a linear polynomial");
    Rational cx = line.coeff({1, 0});
    Rational cy = line.coeff({0, 1});
    Rational c0 = line.coeff({0, 0});
    ParamCurve c;
    c.implicit = line;
    if (cy != 0) {
        // x = t, y = (-c0 - cx t)/cy
        c.x_of_t = UniRat::poly(UniPoly::t());
        c.y_of_t = UniRat::poly(UniPoly({-c0 / cy, -cx / cy}));
    } else {
        c.x_of_t = UniRat::constant(-c0 / cx);
        c.y_of_t = UniRat::poly(UniPoly::t());
    }
    return c;
}

LogReport is_logarithmic(const RationalTwoForm& form, const std::vector<ParamCurve>& curves) {
    LogReport rep;
    const auto& dens = form.denominator_factors();
    rep.residues.resize(dens.size());
    bool ok = true;
    for (std::size_t i = 0; i < dens.size(); ++i) {
        if (dens[i].mult > 1) {
            rep.offenders.push_back(LogOffender{i, std::nullopt, dens[i].mult, dens[i].poly.total_degree()});
            ok = false;
            continue;
        }
        // match a curve by normalized implicit
        const ParamCurve* match = nullptr;
        ParamCurve auto_line;
        for (const auto& c : curves) {
            auto [nc, s] = normalize_factor(c.implicit);
            (void)s;
            if (nc == dens[i].poly) { match = &c; break; }
        }
        if (!match) {
            if (dens[i].poly.total_degree() == 1) {
                auto_line = line_param(dens[i].poly);
                match = &auto_line;
            } else {
                throw UnmatchedFactor("is_logarithmic: no curve supplied for denominator factor " +
                                      dens[i].poly.str());
            }
        }
        OneFormT r = residue(form, *match, true);
        rep.residues[i] = r;
        PoleReport pr = pole_orders(r.coeff);
        for (const auto& [root, order] : pr.poles)
            if (order > 1) {
                rep.offenders.push_back(LogOffender{i, root, order, 0});
                ok = false;
            }
        for (const auto& [deg, order] : pr.residual_factors)
            if (order > 1) {
                rep.offenders.push_back(LogOffender{i, std::nullopt, order, deg});
                ok = false;
            }
    }
    rep.logarithmic = ok;
    return rep;
}

namespace {

// homogenized substitution: w^deg(p) * p(u/w, v/w) where u, v, w are the
// images of (x, y, 1) under M
MultiPoly chart_compose(const MultiPoly& p, const MultiPoly& u, const MultiPoly& v,
                        const MultiPoly& w) {
    int d = std::max(p.total_degree(), 0);
    std::vector<MultiPoly> pu{MultiPoly::constant(p.vars(), Rational(1))};
    std::vector<MultiPoly> pv{pu[0]}, pw{pu[0]};
    for (int k = 1; k <= d; ++k) {
        pu.push_back(pu.back() * u);
        pv.push_back(pv.back() * v);
        pw.push_back(pw.back() * w);
    }
    MultiPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        unsigned i = e[0], j = e[1];
        unsigned k = static_cast<unsigned>(d) - i - j;
        out += (pu[i] * pv[j] * pw[k]).scaled(c);
    }
    return out;
}

} // namespace

RationalTwoForm pullback_linear(const RationalTwoForm& form,
                                const std::array<std::array<Rational, 3>, 3>& M) {
    std::vector<std::vector<Rational>> A(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Rational detM = det_rational(A);
    if (detM == 0) throw std::domain_error("pullback_linear: singular matrix");
    auto vars = form.vars();
    auto row = [&](int i) {
        MultiPoly r = xy_linear(M[static_cast<std::size_t>(i)][0], M[static_cast<std::size_t>(i)][1], M[static_cast<std::size_t>(i)][2]);
        return r.with_vars(vars);
    };
    MultiPoly u = row(0), v = row(1), w = row(2);

    MultiPoly num = chart_compose(form.numerator(), u, v, w);
    int wexp = -static_cast<int>(std::max(form.numerator().total_degree(), 0)) - 3;
    std::vector<RationalTwoForm::Factor> dens;
    for (const auto& f : form.denominator_factors()) {
        MultiPoly g = chart_compose(f.poly, u, v, w);
        dens.push_back({g, f.mult});
        wexp += f.mult * std::max(f.poly.total_degree(), 0);
    }
    num = num.scaled(detM);
    if (!w.is_constant()) {
        if (wexp > 0)
            num *= w.pow(static_cast<unsigned>(wexp));
        else if (wexp < 0)
            dens.push_back({w, -wexp});
    } else if (wexp != 0) {
        Rational wc = w.leading().second;
        num = num.scaled(wexp > 0 ? pow(wc, static_cast<unsigned>(wexp))
                                  : Rational(1) / pow(wc, static_cast<unsigned>(-wexp)));
    }
    return RationalTwoForm(std::move(num), std::move(dens), form.orientation());
}

FixtureForms fixture_forms() {
    FixtureForms fx;
    auto vars = xy_vars();
    MultiPoly cusp = xy_poly({{{0, 2}, Rational(1)}, {{3, 0}, Rational(-1)}});  // y^2 - x^3
    MultiPoly xm1 = xy_linear(Rational(1), Rational(0), Rational(-1));          // x - 1
    MultiPoly yy = xy_linear(Rational(0), Rational(1), Rational(0));            // y
    MultiPoly xx = xy_linear(Rational(1), Rational(0), Rational(0));            // x
    MultiPoly ymx = xy_linear(Rational(-1), Rational(1), Rational(0));          // y - x
    MultiPoly a2line = xy_linear(Rational(-3, 2), Rational(1), Rational(1, 2)); // y - 3/2 x + 1/2

    fx.a1 = RationalTwoForm(xx.scaled(Rational(-2)), {{xm1, 1}, {cusp, 1}});
    fx.a2 = RationalTwoForm(ymx.scaled(Rational(3, 2)), {{a2line, 1}, {cusp, 1}});
    // y/((x-y)(y^2-x^3)): the (y,x,1) normalization stores the line as y-x
    fx.a3 = RationalTwoForm(yy.scaled(Rational(-1)), {{ymx, 1}, {cusp, 1}});
    MultiPoly s1num = xy_poly({{{2, 0}, Rational(1)}, {{1, 1}, Rational(1)}});  // x^2 + xy
    fx.s1 = RationalTwoForm(s1num, {{yy, 1}, {xm1, 1}, {cusp, 1}});
    fx.triangle = RationalTwoForm(MultiPoly::constant(vars, Rational(1)), {{yy, 1}, {xm1, 1}, {ymx, 1}});
    MultiPoly sline = xy_linear(Rational(-1), Rational(-1), Rational(1));  // 1 - x - y
    fx.simplex2d = RationalTwoForm(MultiPoly::constant(vars, Rational(1)), {{xx, 1}, {yy, 1}, {sline, 1}});
    fx.cusp_cubic.implicit = cusp;
    fx.cusp_cubic.x_of_t = UniRat::poly(UniPoly::monomial(2, Rational(1)));
    fx.cusp_cubic.y_of_t = UniRat::poly(UniPoly::monomial(3, Rational(1)));
    fx.cusp_cubic.domain = std::make_pair(Rational(-1), Rational(1));
    return fx;
}

} // namespace vcell
