#include <doctest.h>

#include "vcell/multipoly.hpp"
#include "vcell/polymatrix.hpp"
#include "vcell/unipoly.hpp"

#include <random>
#include <set>

using namespace vcell;

namespace {

std::vector<std::string> xy{"x", "y"};

MultiPoly P(std::initializer_list<std::pair<std::pair<unsigned, unsigned>, long>> terms) {
    MultiPoly p(xy);
    for (const auto& [e, c] : terms) p.add_term({e.first, e.second}, Rational(c));
    return p;
}

MultiPoly random_poly(std::mt19937_64& rng, int maxdeg = 2, long cmax = 5) {
    std::uniform_int_distribution<long> coeff(-cmax, cmax);
    std::uniform_int_distribution<unsigned> deg(0, static_cast<unsigned>(maxdeg));
    MultiPoly p(xy);
    for (int i = 0; i < 4; ++i) p.add_term({deg(rng), deg(rng)}, Rational(coeff(rng)));
    return p;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("-22/7") == Rational(-22, 7));
    CHECK(parse_rational("45") == Rational(45));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK(den(Rational(0)) == 1);
}

TEST_CASE("poly_eval") {
    MultiPoly zero(xy);
    CHECK(zero.eval({Rational(3), Rational(-7)}) == 0);  // zero polynomial anywhere

    // b_3 at (1,1) and at the cusp (1/3, 1/9): frozen from the coefficient family
    MultiPoly b3 = P({{{3, 0}, 3}, {{0, 2}, -18}, {{1, 1}, 36}, {{2, 0}, -21},
                      {{1, 0}, 9}, {{0, 1}, -8}, {{0, 0}, -1}});
    CHECK(b3.eval({Rational(1), Rational(1)}) == 0);
    CHECK(b3.eval({Rational(1, 3), Rational(1, 9)}) == 0);
    CHECK_THROWS_AS(b3.eval({Rational(1)}), DimensionMismatch);
}

TEST_CASE("poly arithmetic and exact division") {
    MultiPoly x = P({{{1, 0}, 1}});
    MultiPoly y = P({{{0, 1}, 1}});
    CHECK((x + y) * (x - y) == P({{{2, 0}, 1}, {{0, 2}, -1}}));

    // b_2 = -(2y-3x+1)^2 divides twice by the line down to -1
    MultiPoly b2 = P({{{0, 2}, -4}, {{1, 1}, 12}, {{2, 0}, -9}, {{1, 0}, 6}, {{0, 1}, -4}, {{0, 0}, -1}});
    MultiPoly line = P({{{0, 1}, 2}, {{1, 0}, -3}, {{0, 0}, 1}});
    MultiPoly q1 = MultiPoly::exact_div(b2, line);
    MultiPoly q2 = MultiPoly::exact_div(q1, line);
    CHECK(q2 == MultiPoly::constant(xy, Rational(-1)));

    MultiPoly x2p1 = P({{{2, 0}, 1}, {{0, 0}, 1}});
    CHECK_THROWS_AS(MultiPoly::exact_div(x2p1, x), NotDivisible);
}

TEST_CASE("ring axioms and eval homomorphism on random polynomials") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        std::uniform_int_distribution<long> pv(-4, 4);
        std::vector<Rational> pt{Rational(pv(rng), 3), Rational(pv(rng), 2)};
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("determinants") {
    PolyMatrix id(3, xy);
    for (int i = 0; i < 3; ++i) id.at(i, i) = MultiPoly::constant(xy, Rational(1));
    CHECK(id.det() == MultiPoly::constant(xy, Rational(1)));

    PolyMatrix m(2, xy);
    m.at(0, 0) = P({{{1, 0}, 1}});
    m.at(0, 1) = MultiPoly::constant(xy, Rational(1));
    m.at(1, 0) = MultiPoly::constant(xy, Rational(1));
    m.at(1, 1) = P({{{1, 0}, 1}});
    CHECK(m.det() == P({{{2, 0}, 1}, {{0, 0}, -1}}));
}

TEST_CASE("det is multiplicative on random constant 3x3 matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> cv(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rational>> A(3, std::vector<Rational>(3)), B = A, C = A;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                A[i][j] = Rational(cv(rng));
                B[i][j] = Rational(cv(rng));
            }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                C[i][j] = 0;
                for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
            }
        CHECK(det_rational(C) == det_rational(A) * det_rational(B));
    }
}

TEST_CASE("unirat normalization") {
    UniPoly t = UniPoly::t();
    // (t^2-1)/(t-1) -> t+1
    UniRat r(t * t - UniPoly::constant(Rational(1)), t - UniPoly::constant(Rational(1)));
    CHECK(r.num() == t + UniPoly::constant(Rational(1)));
    CHECK(r.den() == UniPoly::constant(Rational(1)));
    // 3t^3/(3t) -> t^2
    UniRat r2(UniPoly::monomial(3, Rational(3)), UniPoly::monomial(1, Rational(3)));
    CHECK(r2.num() == UniPoly::monomial(2, Rational(1)));
    // the typeI residue chain: (2t^2)(3t^2) over (t^2-1)(3t^4) -> 2/(t^2-1)
    UniPoly num = UniPoly::monomial(2, Rational(2)) * UniPoly::monomial(2, Rational(3));
    UniPoly den = (t * t - UniPoly::constant(Rational(1))) * UniPoly::monomial(4, Rational(3));
    UniRat r3(num, den);
    CHECK(r3 == UniRat(UniPoly::constant(Rational(2)), t * t - UniPoly::constant(Rational(1))));
    CHECK_THROWS(UniRat(t, UniPoly()));
}

TEST_CASE("pole orders") {
    UniPoly t = UniPoly::t();
    UniPoly one = UniPoly::constant(Rational(1));
    SUBCASE("1/t^2 has a pole of order two at 0") {
        auto rep = pole_orders(UniRat(one, t * t));
        REQUIRE(rep.poles.size() == 1);
        CHECK(rep.poles[0].first == 0);
        CHECK(rep.poles[0].second == 2);
        CHECK(!rep.all_simple());
    }
    SUBCASE("2/((t+1)(t-1)) has simple poles at -1 and 1") {
        auto rep = pole_orders(UniRat(one.scaled(Rational(2)), t * t - one));
        REQUIRE(rep.poles.size() == 2);
        CHECK(rep.poles[0] == std::pair<Rational, int>{Rational(-1), 1});
        CHECK(rep.poles[1] == std::pair<Rational, int>{Rational(1), 1});
        CHECK(rep.all_simple());
    }
    SUBCASE("polynomial input: no poles") {
        auto rep = pole_orders(UniRat::poly(t * t + one));
        CHECK(rep.poles.empty());
        CHECK(rep.residual_factors.empty());
    }
    SUBCASE("irreducible quadratic factor reported by degree") {
        auto rep = pole_orders(UniRat(one, (t * t + one) * (t - one)));
        REQUIRE(rep.poles.size() == 1);
        CHECK(rep.poles[0].first == 1);
        REQUIRE(rep.residual_factors.size() == 1);
        CHECK(rep.residual_factors[0] == std::pair<int, int>{2, 1});
    }
    SUBCASE("product of distinct linear factors gives each root order 1") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> rv(-6, 6);
        for (int trial = 0; trial < 10; ++trial) {
            std::set<Rational> roots;
            UniPoly d = one;
            for (int i = 0; i < 4; ++i) {
                Rational r(rv(rng), 1 + (trial % 3));
                if (roots.count(r)) continue;
                roots.insert(r);
                d = d * UniPoly({-r, Rational(1)});
            }
            auto rep = pole_orders(UniRat(one, d));
            CHECK(rep.poles.size() == roots.size());
            for (const auto& [root, order] : rep.poles) {
                CHECK(order == 1);
                CHECK(roots.count(root) == 1);
            }
        }
    }
}

TEST_CASE("divisors handles large composites") {
    Integer n = Integer("600851475143");  // 71 * 839 * 1471 * 6857
    auto d = divisors(n);
    CHECK(d.size() == 16);
    CHECK(d.front() == 1);
    CHECK(d.back() == n);
}
