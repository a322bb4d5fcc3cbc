#include "vcell/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vcell {

bool MultiPoly::MonoCmp::operator()(const Exp& a, const Exp& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    // lex, last variable most significant
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, std::vector<std::pair<Exp, Rational>> terms)
    : vars_(std::move(vars)) {
    for (auto& [e, c] : terms) add_term(e, c);
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exp(p.nvars(), 0u), c);
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, std::size_t idx, unsigned e,
                              const Rational& c) {
    MultiPoly p(std::move(vars));
    Exp ex(p.nvars(), 0u);
    if (idx >= p.nvars()) throw DimensionMismatch("monomial: variable index out of range");
    ex[idx] = e;
    p.add_term(ex, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](unsigned e) { return e == 0; });
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exp& e = terms_.begin()->first;  // leading term has max total degree
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

const std::pair<const MultiPoly::Exp, Rational>& MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.begin();
}

Rational MultiPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Exp(nvars(), 0u)); }

void MultiPoly::set_coeff(const Exp& e, const Rational& c) {
    if (e.size() != nvars()) throw DimensionMismatch("exponent vector length mismatch");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void MultiPoly::add_term(const Exp& e, const Rational& c) {
    if (e.size() != nvars()) throw DimensionMismatch("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw DimensionMismatch("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly r(a.vars_);
    MultiPoly::Exp e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
    return r;
}

int MultiPoly::compare(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonoCmp lt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return lt(ia->first, ib->first) ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars()) throw DimensionMismatch("evaluation point has wrong dimension");
    // precompute powers per variable
    std::vector<std::vector<Rational>> pw(nvars());
    for (std::size_t v = 0; v < nvars(); ++v) {
        int d = degree_in(v);
        pw[v].resize(static_cast<std::size_t>(d < 0 ? 0 : d) + 1, Rational(1));
        for (int k = 1; k <= d; ++k) pw[v][static_cast<std::size_t>(k)] = pw[v][static_cast<std::size_t>(k - 1)] * point[v];
    }
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (std::size_t v = 0; v < nvars(); ++v)
            if (e[v]) m *= pw[v][e[v]];
        s += m;
    }
    return s;
}

double MultiPoly::eval_double(const std::vector<double>& point) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = to_double(c);
        for (std::size_t v = 0; v < nvars(); ++v)
            for (unsigned k = 0; k < e[v]; ++k) m *= point[v];
        s += m;
    }
    return s;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars()) throw DimensionMismatch("derivative: variable index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * Rational(e[var]));
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    if (b.is_zero()) throw NotDivisible("division by zero polynomial");
    MultiPoly rem = a;
    MultiPoly q(a.vars_);
    const auto& [lb, cb] = b.leading();
    while (!rem.is_zero()) {
        const auto& [la, ca] = rem.leading();
        Exp e(la.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (la[i] < lb[i]) throw NotDivisible("exact_div: nonzero remainder");
            e[i] = la[i] - lb[i];
        }
        Rational c = ca / cb;
        MultiPoly m(a.vars_);
        m.add_term(e, c);
        q.add_term(e, c);
        rem -= m * b;
        // leading term of rem strictly decreased; if division is exact the
        // loop terminates with rem == 0, otherwise the exponent check throws
    }
    return q;
}

bool MultiPoly::divides(const MultiPoly& b, const MultiPoly& a) {
    try {
        (void)exact_div(a, b);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

Rational MultiPoly::content_signed() const {
    if (terms_.empty()) return Rational(0);
    Integer L(1);
    for (const auto& [e, c] : terms_) L = lcm(L, den(c));
    Integer G(0);
    for (const auto& [e, c] : terms_) G = gcd(G, Integer(num(c) * (L / den(c))));
    Rational content(G, L);
    return leading().second < 0 ? Rational(-content) : content;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(Rational(1) / content_signed());
}

MultiPoly MultiPoly::substitute(std::size_t idx, const MultiPoly& value) const {
    check_same_vars(value);
    MultiPoly r(vars_);
    int dmax = degree_in(idx);
    // powers of the substituted value
    std::vector<MultiPoly> pw;
    pw.push_back(MultiPoly::constant(vars_, Rational(1)));
    for (int k = 1; k <= dmax; ++k) pw.push_back(pw.back() * value);
    for (const auto& [e, c] : terms_) {
        Exp e2 = e;
        unsigned k = e2[idx];
        e2[idx] = 0;
        MultiPoly m(vars_);
        m.add_term(e2, c);
        r += m * pw[k];
    }
    return r;
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> vars) const {
    if (vars.size() != nvars()) throw DimensionMismatch("with_vars: arity mismatch");
    MultiPoly r(std::move(vars));
    r.terms_ = terms_;
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool allzero = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
        if (a != 1 || allzero) os << to_string(a);
        bool star = (a != 1);
        for (std::size_t v = 0; v < nvars(); ++v) {
            if (e[v] == 0) continue;
            if (star) os << "*";
            os << vars_[v];
            if (e[v] > 1) os << "^" << e[v];
            star = true;
        }
    }
    return os.str();
}

} // namespace vcell
