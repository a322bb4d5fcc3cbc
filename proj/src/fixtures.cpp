#include "vcell/fixtures.hpp"
#include "vcell/errors.hpp"

#include <random>

namespace vcell::fixtures {

namespace {

std::vector<std::string> yvars() { return {"y1", "y2", "y3"}; }

struct Term { unsigned e1, e2, e3; long c; };

// (2,1,1) elimination-ideal generator. The source display's leading term
// reads y1^6; the generator actually has 72 y1^6 (independently recomputed
// by resultant elimination), and only with that coefficient does P vanish
// on the parametrized surface.
constexpr Term kPTerms[] = {
    {6, 0, 0, 72},    {5, 0, 0, -684},  {4, 1, 0, 1536},  {3, 2, 0, -544},
    {4, 0, 1, -720},  {4, 0, 0, 1209},  {3, 1, 0, -4168}, {2, 2, 0, 4224},
    {1, 3, 0, -576},  {0, 4, 0, -192},  {3, 0, 1, 3096},  {2, 1, 1, -6336},
    {1, 2, 1, 1152},  {2, 0, 2, 2304},  {3, 0, 0, -796},  {2, 1, 0, 3144},
    {1, 2, 0, -4512}, {0, 3, 0, 2496},  {2, 0, 1, -2700}, {1, 1, 1, 8208},
    {0, 2, 1, -7200}, {1, 0, 2, -3744}, {0, 1, 2, 6912},  {0, 0, 3, -2304},
    {2, 0, 0, 210},   {1, 1, 0, -648},  {0, 2, 0, 544},   {1, 0, 1, 576},
    {0, 1, 1, -1008}, {0, 0, 2, 468},   {1, 0, 0, -24},   {0, 1, 0, 40},
    {0, 0, 1, -36},   {0, 0, 0, 1},
};

} // namespace

MultiPoly quartic_P() {
    MultiPoly p(yvars());
    for (const Term& t : kPTerms) p.add_term({t.e1, t.e2, t.e3}, Rational(t.c));
    return p;
}

MultiPoly quartic_Q() {
    MultiPoly q(yvars());
    q.add_term({2, 0, 0}, Rational(3));
    q.add_term({1, 0, 0}, Rational(-6));
    q.add_term({0, 1, 0}, Rational(8));
    q.add_term({0, 0, 1}, Rational(-6));
    q.add_term({0, 0, 0}, Rational(1));
    return q;
}

PolyMatrix resultant_matrix_template() {
    std::vector<std::string> vars{"x", "y", "n"};
    auto cnst = [&](long c) { return MultiPoly::constant(vars, Rational(c)); };
    auto mono = [&](std::size_t idx, unsigned e, long c = 1) {
        return MultiPoly::monomial(vars, idx, e, Rational(c));
    };
    MultiPoly n = mono(2, 1);
    MultiPoly m = n - cnst(1);           // n - 1
    MultiPoly e = m * m;                 // (n-1)^2
    MultiPoly X = mono(0, 1), Y = mono(1, 1);
    MultiPoly b3 = e - cnst(1);
    MultiPoly b2c = cnst(3);
    MultiPoly b1 = cnst(-3);
    MultiPoly b0 = cnst(1) - Y * e;
    MultiPoly a2 = n * m;
    MultiPoly a1 = cnst(-2) * m;
    MultiPoly a0 = m - X * e;
    PolyMatrix M(5, vars);
    M.at(0, 0) = b3;  M.at(0, 2) = a2;
    M.at(1, 0) = b2c; M.at(1, 1) = b3;  M.at(1, 2) = a1; M.at(1, 3) = a2;
    M.at(2, 0) = b1;  M.at(2, 1) = b2c; M.at(2, 2) = a0; M.at(2, 3) = a1; M.at(2, 4) = a2;
    M.at(3, 0) = b0;  M.at(3, 1) = b1;  M.at(3, 3) = a0; M.at(3, 4) = a1;
    M.at(4, 1) = b0;  M.at(4, 4) = a0;
    return M;
}

std::uint64_t digest(const MultiPoly& p) {
    std::string s;
    for (const auto& v : p.vars()) s += v + ";";
    s += "|" + p.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::vector<Rational>> sample_patch_params(const BoundaryPatch& patch, int count,
                                                       std::uint64_t seed, long grid) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, grid);
    std::vector<std::vector<Rational>> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 100000) throw std::runtime_error("sample_patch_params: rejection stalled");
        std::vector<Rational> params;
        for (int i = 0; i < patch.free_params(); ++i)
            params.emplace_back(Rational(dist(rng), grid + 1));
        std::sort(params.begin(), params.end());
        try {
            (void)patch.evaluate(params);
        } catch (const AdmissibilityError&) {
            continue;
        }
        out.push_back(std::move(params));
    }
    return out;
}

Report verify_quartic_boundaries(int samples, std::uint64_t seed, bool slow) {
    Report rep;
    MultiPoly P = quartic_P();
    MultiPoly Q = quartic_Q();
    rep.checks.push_back({"P transcription digest", digest(P) == P_digest_expected(), ""});
    rep.checks.push_back({"Q transcription digest", digest(Q) == Q_digest_expected(), ""});

    // Q on nu_{3,4} images of multiplicity-(1,1,1) points
    MultiplicityVector m111;
    m111.kind = MultiplicityVector::Kind::Type2;
    m111.m = {1, 1, 1};
    BoundaryPatch patch111(m111);
    int qfail = 0;
    for (const auto& params : sample_patch_params(patch111, samples, seed)) {
        auto r = patch111.evaluate(params);
        if (Q.eval(r.image) != 0) ++qfail;
    }
    rep.checks.push_back({"Q vanishes on nu_{3,4} (1,1,1) images",
                          qfail == 0, std::to_string(samples) + " samples"});

    // P on (2,1,1) parametrized points with n = 4
    MultiplicityVector m211;
    m211.kind = MultiplicityVector::Kind::Type2;
    m211.m = {2, 1, 1};
    BoundaryPatch patch211(m211);
    int pfail = 0;
    for (const auto& params : sample_patch_params(patch211, samples, seed + 1)) {
        auto r = patch211.evaluate(params);
        if (P.eval(r.image) != 0) ++pfail;
    }
    rep.checks.push_back({"P vanishes on (2,1,1) n=4 parametrized points",
                          pfail == 0, std::to_string(samples) + " samples"});

    // the worked example point: parameters with block values (1/10, 1/2, 3/10)
    auto ex = patch211.evaluate_unchecked({Rational(1, 10), Rational(1, 2)});
    rep.checks.push_back({"P at block values (1/10, 1/2, 3/10)", P.eval(ex.image) == 0, ""});

    // off-surface probe
    Rational half(1, 2);
    rep.checks.push_back({"P nonzero off the surface",
                          P.eval({half, half, half}) != 0, "P(1/2,1/2,1/2)"});

    if (slow) {
        // symbolic: substitute the closed-form (2,1,1) parametrization
        // x = (a, a, b, c), b = 1 - 2a - c, into P(p2, p3, p4) and expand
        std::vector<std::string> ac{"a", "c"};
        MultiPoly a = MultiPoly::monomial(ac, 0, 1);
        MultiPoly c = MultiPoly::monomial(ac, 1, 1);
        MultiPoly b = MultiPoly::constant(ac, Rational(1)) - a.scaled(Rational(2)) - c;
        auto psum = [&](unsigned k) { return a.pow(k).scaled(Rational(2)) + b.pow(k) + c.pow(k); };
        MultiPoly acc(ac);
        MultiPoly p2 = psum(2), p3 = psum(3), p4 = psum(4);
        for (const auto& [e, coef] : P.terms()) {
            MultiPoly term = MultiPoly::constant(ac, coef);
            if (e[0]) term *= p2.pow(e[0]);
            if (e[1]) term *= p3.pow(e[1]);
            if (e[2]) term *= p4.pow(e[2]);
            acc += term;
        }
        rep.checks.push_back({"P o (2,1,1)-parametrization is identically zero (symbolic)",
                              acc.is_zero(), ""});
        // Q symbolic: x = (a, b, c) on the simplex, b = 1 - a - c
        std::vector<std::string> ac2{"a", "c"};
        MultiPoly a2 = MultiPoly::monomial(ac2, 0, 1);
        MultiPoly c2 = MultiPoly::monomial(ac2, 1, 1);
        MultiPoly b2 = MultiPoly::constant(ac2, Rational(1)) - a2 - c2;
        auto psum3 = [&](unsigned k) { return a2.pow(k) + b2.pow(k) + c2.pow(k); };
        MultiPoly q2 = psum3(2), q3 = psum3(3), q4 = psum3(4);
        MultiPoly accq(ac2);
        for (const auto& [e, coef] : Q.terms()) {
            MultiPoly term = MultiPoly::constant(ac2, coef);
            if (e[0]) term *= q2.pow(e[0]);
            if (e[1]) term *= q3.pow(e[1]);
            if (e[2]) term *= q4.pow(e[2]);
            accq += term;
        }
        rep.checks.push_back({"Q o nu_{3,4} is identically zero (symbolic)", accq.is_zero(), ""});
    }
    return rep;
}

Report verify_same_hypersurface(int n, int m1, int samples, std::uint64_t seed) {
    Report rep;
    if (n != 4)
        throw DimensionMismatch("verify_same_hypersurface: embedded fixture covers n = 4");
    if (m1 < 1 || m1 > n - 2)
        throw AdmissibilityError("verify_same_hypersurface: need 1 <= m1 <= n-2");
    MultiPoly P = quartic_P();
    for (int mm : {m1, n - m1 - 1}) {
        MultiplicityVector v;
        v.kind = MultiplicityVector::Kind::Type2;
        v.m = {mm, 1, n - mm - 1};
        BoundaryPatch patch(v);
        int fail = 0;
        for (const auto& params : sample_patch_params(patch, samples, seed + static_cast<std::uint64_t>(mm))) {
            auto r = patch.evaluate(params);
            if (P.eval(r.image) != 0) ++fail;
        }
        rep.checks.push_back({"P vanishes on m1=" + std::to_string(mm) + " images", fail == 0,
                              std::to_string(samples) + " samples"});
    }
    return rep;
}

std::uint64_t P_digest_expected() { return 0x5eaaf3ae07a97ec0ull; }
std::uint64_t Q_digest_expected() { return 0x09f923270f692e94ull; }

} // namespace vcell::fixtures
