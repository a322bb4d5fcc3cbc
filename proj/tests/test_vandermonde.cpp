#include <doctest.h>

#include "vcell/vandermonde.hpp"
#include "vcell/planar.hpp"

#include <algorithm>
#include <random>

using namespace vcell;

TEST_CASE("power sums") {
    std::vector<Rational> e1{Rational(1), Rational(0), Rational(0)};
    CHECK(power_sums(e1, 3) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    std::vector<Rational> bary{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    CHECK(power_sums(bary, 4) ==
          std::vector<Rational>{Rational(1), Rational(1, 3), Rational(1, 9), Rational(1, 27)});

    std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    CHECK(power_sums(half, 3) == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4)});
}

TEST_CASE("power sums permutation invariance") {
    std::mt19937_64 rng(5);
    auto pts = sample_simplex(5, 20, 99);
    for (auto x : pts) {
        auto p1 = power_sums(x, 4);
        std::shuffle(x.begin(), x.end(), rng);
        CHECK(power_sums(x, 4) == p1);
    }
}

TEST_CASE("multiplicity vector enumeration") {
    SUBCASE("n=4 d=4 type2 vectors are (1,1,2) and (2,1,1)") {
        auto vecs = enumerate_multiplicity_vectors(4, 4);
        std::vector<std::vector<int>> t2;
        for (const auto& v : vecs)
            if (v.kind == MultiplicityVector::Kind::Type2) t2.push_back(v.m);
        REQUIRE(t2.size() == 2);
        CHECK(std::count(t2.begin(), t2.end(), std::vector<int>{1, 1, 2}) == 1);
        CHECK(std::count(t2.begin(), t2.end(), std::vector<int>{2, 1, 1}) == 1);
    }
    SUBCASE("n=3 d=3 type2 vector is exactly (2,1)") {
        auto vecs = enumerate_multiplicity_vectors(3, 3);
        std::vector<std::vector<int>> t2;
        for (const auto& v : vecs)
            if (v.kind == MultiplicityVector::Kind::Type2) t2.push_back(v.m);
        REQUIRE(t2.size() == 1);
        CHECK(t2[0] == std::vector<int>{2, 1});
    }
    SUBCASE("d=2 gives single-block vectors") {
        auto vecs = enumerate_multiplicity_vectors(5, 2);
        for (const auto& v : vecs) CHECK(v.m.size() == 1);
        bool has_full = false;
        for (const auto& v : vecs)
            if (v.m0 == 0 && v.m == std::vector<int>{5}) has_full = true;
        CHECK(has_full);
    }
    SUBCASE("entries sum to n and parity constraints hold") {
        for (int d = 2; d <= 5; ++d)
            for (int n = d - 1; n <= 8; ++n)
                for (const auto& v : enumerate_multiplicity_vectors(n, d)) {
                    CHECK(v.n() == n);
                    CHECK(v.valid());
                }
    }
}

namespace {
// brute force: partitions of a into exactly b positive non-increasing parts
int brute_partitions(int a, int b, int maxpart) {
    if (b == 0) return a == 0 ? 1 : 0;
    int count = 0;
    for (int p = std::min(a, maxpart); p >= 1; --p) count += brute_partitions(a - p, b - 1, p);
    return count;
}
} // namespace

TEST_CASE("partition counts against brute force") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 1; b <= std::max(a, 1); ++b)
            CHECK(partition_count(a, b) == brute_partitions(a, b, a));
    CHECK(partition_count(3, 2) == 1);
    CHECK(partition_count(4, 2) == 2);
    for (int n = 1; n <= 9; ++n) CHECK(partition_count(n, 1) == 1);
    // new-hypersurface counts: one new curve per step in the plane
    for (int n = 3; n <= 8; ++n) CHECK(new_hypersurface_count(n, 3) == 1);
    CHECK(new_hypersurface_count(4, 4) == 1);
    CHECK(new_hypersurface_count(5, 4) == 2);
}

TEST_CASE("boundary patch") {
    SUBCASE("d=3 type2 (n-1,1) reproduces the planar parametrization") {
        for (int n : {3, 4, 6}) {
            MultiplicityVector v;
            v.kind = MultiplicityVector::Kind::Type2;
            v.m = {n - 1, 1};
            BoundaryPatch patch(v);
            ParamCurve pc = planar::boundary_param(n);
            // patch parameter is x_1 = (1-t)/(n-1)
            for (const Rational& t : {Rational(1, 3), Rational(2, 5), Rational(1, 2)}) {
                Rational x1 = (1 - t) / (n - 1);
                auto r = patch.evaluate({x1});
                CHECK(r.image[0] == pc.x_of_t.eval(t));
                CHECK(r.image[1] == pc.y_of_t.eval(t));
            }
        }
    }
    SUBCASE("degenerate parameters give the image of the all-equal point") {
        MultiplicityVector v;
        v.kind = MultiplicityVector::Kind::Type2;
        v.m = {2, 1, 1};
        BoundaryPatch patch(v);
        auto r = patch.evaluate({Rational(1, 4), Rational(1, 4)});
        // preimage collapses to (1/4,1/4,1/4,1/4)
        auto p = power_sums(std::vector<Rational>(4, Rational(1, 4)), 4);
        CHECK(r.image == std::vector<Rational>(p.begin() + 1, p.end()));
    }
    SUBCASE("admissibility") {
        MultiplicityVector v;
        v.kind = MultiplicityVector::Kind::Type2;
        v.m = {2, 1, 1};
        BoundaryPatch patch(v);
        CHECK_THROWS_AS(patch.evaluate({Rational(1, 10), Rational(1, 2)}), AdmissibilityError);
        CHECK_NOTHROW(patch.evaluate_unchecked({Rational(1, 10), Rational(1, 2)}));
        CHECK_NOTHROW(patch.evaluate({Rational(1, 10), Rational(1, 5)}));
    }
    SUBCASE("round trip: power sums of the preimage reproduce the image") {
        MultiplicityVector v;
        v.kind = MultiplicityVector::Kind::Type1;
        v.m0 = 2;
        v.m = {1, 2};  // (0,0,x1,x2,x2), n = 5
        BoundaryPatch patch(v);
        auto r = patch.evaluate({Rational(1, 8)});
        CHECK(static_cast<int>(r.preimage.size()) == 5);
        Rational s(0);
        Rational prev(0);
        bool sorted = true, nonneg = true;
        for (const auto& c : r.preimage) {
            s += c;
            if (c < prev) sorted = false;
            if (c < 0) nonneg = false;
            prev = c;
        }
        CHECK(s == 1);
        CHECK(sorted);
        CHECK(nonneg);
        auto p = power_sums(r.preimage, 3);
        CHECK(std::vector<Rational>(p.begin() + 1, p.end()) == r.image);
    }
}

TEST_CASE("simplex sampling") {
    CHECK(sample_simplex(4, 0, 1).empty());
    auto pts = sample_simplex(4, 50, 123);
    CHECK(pts.size() == 50);
    for (const auto& x : pts) {
        Rational s(0);
        for (const auto& c : x) {
            s += c;
            CHECK(c >= 0);
        }
        CHECK(s == 1);
    }
    // determinism
    CHECK(sample_simplex(4, 50, 123) == pts);
    CHECK(sample_simplex(4, 5, 7) != sample_simplex(4, 5, 8));
}

TEST_CASE("nu_{3,3} images of samples are members of Pi_{3,3}") {
    for (const auto& x : sample_simplex(3, 200, 2024)) {
        auto p = power_sums(x, 3);
        auto m = planar::membership(3, {p[1], p[2]});
        CHECK(m != planar::Membership::Outside);
    }
}
