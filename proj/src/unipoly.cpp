#include "vcell/unipoly.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace vcell {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(unsigned k, const Rational& c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational s(0);
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + db)] / b.c_.back();
        if (c == 0) continue;
        q[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= c * b.c_[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotDivisible("univariate exact_div: nonzero remainder");
    return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

Rational UniPoly::content_signed() const {
    if (is_zero()) return Rational(0);
    Integer L(1);
    for (const auto& c : c_) L = boost::multiprecision::lcm(L, den(c));
    Integer G(0);
    for (const auto& c : c_) G = boost::multiprecision::gcd(G, Integer(num(c) * (L / den(c))));
    Rational content(G, L);
    return leading() < 0 ? Rational(-content) : content;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / content_signed());
}

UniPoly UniPoly::deflate(const Rational& root) const {
    UniPoly lin({-root, Rational(1)});
    return exact_div(*this, lin);
}

MultiPoly UniPoly::to_multipoly(const std::string& var) const {
    MultiPoly p({var});
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) p.add_term({static_cast<unsigned>(i)}, c_[i]);
    return p;
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
    if (p.nvars() != 1) throw DimensionMismatch("from_multipoly: expected one variable");
    std::vector<Rational> v(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) v[e[0]] = c;
    return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const { return to_multipoly(var).str(); }

UniRat::UniRat(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("UniRat with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::exact_div(num_, g);
        den_ = UniPoly::exact_div(den_, g);
    }
    Rational lc = den_.leading();
    den_ = den_.scaled(Rational(1) / lc);
    num_ = num_.scaled(Rational(1) / lc);
}

UniRat UniRat::operator-() const { return UniRat(-num_, den_); }

UniRat operator+(const UniRat& a, const UniRat& b) {
    return UniRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
UniRat operator-(const UniRat& a, const UniRat& b) { return a + (-b); }
UniRat operator*(const UniRat& a, const UniRat& b) {
    return UniRat(a.num_ * b.num_, a.den_ * b.den_);
}
UniRat operator/(const UniRat& a, const UniRat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return UniRat(a.num_ * b.den_, a.den_ * b.num_);
}

Rational UniRat::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

UniRat UniRat::derivative() const {
    return UniRat(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

UniRat UniRat::pow(unsigned e) const {
    UniRat r = UniRat::constant(Rational(1));
    UniRat base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

std::string UniRat::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

namespace {

Integer pollard_rho(const Integer& n) {
    // Brent's variant; n odd composite
    Integer x(2), y(2), d(1), c(1);
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (true) {
        x = Integer(2);
        y = Integer(2);
        d = Integer(1);
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = gcd(Integer(boost::multiprecision::abs(Integer(x - y))), n);
        }
        if (d != n) return d;
        c += 1;  // cycle degenerated, retry with another polynomial
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    for (Integer p : {Integer(2), Integer(3), Integer(5)}) {
        while (n % p == 0) { out[p] += 1; n /= p; }
    }
    // wheel over 6k±1
    for (Integer p(7); p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) { out[p] += 1; n /= p; }
    }
    if (n == 1) return;
    if (boost::multiprecision::miller_rabin_test(n, 32)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

} // namespace

std::vector<Integer> divisors(const Integer& n) {
    Integer a = boost::multiprecision::abs(n);
    if (a == 0) throw std::domain_error("divisors of zero");
    std::map<Integer, int> f;
    factor_into(a, f);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : f) {
        std::size_t sz = divs.size();
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    UniPoly f = p.monic();
    UniPoly g = UniPoly::gcd(f, f.derivative());
    UniPoly w = UniPoly::exact_div(f, g);
    int m = 1;
    while (w.degree() > 0) {
        UniPoly y = UniPoly::gcd(w, g);
        UniPoly z = UniPoly::exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, m);
        w = y;
        g = UniPoly::exact_div(g, y);
        ++m;
    }
    return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
    std::vector<std::pair<Rational, int>> out;
    if (p.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        UniPoly q = f.primitive_part();
        // strip t^k
        int k = 0;
        while (q.coeff(0) == 0) {
            q = UniPoly::exact_div(q, UniPoly::t());
            ++k;
        }
        if (k > 0) out.emplace_back(Rational(0), mult);
        if (q.degree() == 0) continue;
        Integer a0 = num(q.coeff(0));
        Integer an = num(q.leading());
        for (const Integer& pp : divisors(a0)) {
            for (const Integer& qq : divisors(an)) {
                if (gcd(pp, qq) != 1) continue;
                for (int s : {1, -1}) {
                    Rational cand(s > 0 ? pp : Integer(-pp), qq);
                    if (q.eval(cand) == 0) {
                        out.emplace_back(cand, mult);
                        q = q.deflate(cand);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool PoleReport::all_simple() const { return max_order() <= 1; }

int PoleReport::max_order() const {
    int m = 0;
    for (const auto& [r, o] : poles) m = std::max(m, o);
    for (const auto& [d, o] : residual_factors) m = std::max(m, o);
    return m;
}

PoleReport pole_orders(const UniRat& r) {
    PoleReport rep;
    const UniPoly& d = r.den();
    if (d.degree() <= 0) return rep;  // polynomial input: no poles
    rep.poles = rational_roots(d);
    for (const auto& [f, mult] : squarefree_decomposition(d)) {
        int found = 0;
        for (const auto& [root, m] : rep.poles)
            if (m == mult && f.eval(root) == 0) ++found;
        int residual_deg = f.degree() - found;
        if (residual_deg > 0) rep.residual_factors.emplace_back(residual_deg, mult);
    }
    return rep;
}

} // namespace vcell
