#include "vcell/vandermonde.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace vcell {

std::vector<Rational> power_sums(const std::vector<Rational>& x, int d) {
    if (d < 1) throw DimensionMismatch("power_sums: d must be >= 1");
    std::vector<Rational> p(static_cast<std::size_t>(d), Rational(0));
    for (const Rational& xi : x) {
        Rational pw = xi;
        for (int k = 0; k < d; ++k) {
            p[static_cast<std::size_t>(k)] += pw;
            if (k + 1 < d) pw *= xi;
        }
    }
    return p;
}

int MultiplicityVector::n() const {
    return m0 + std::accumulate(m.begin(), m.end(), 0);
}

bool MultiplicityVector::valid() const {
    if (m.empty()) return false;
    if (kind == Kind::Type1) {
        if (m0 < 0) return false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            int idx = static_cast<int>(i) + 1;  // m_1-based
            if (idx % 2 == 1 && m[i] != 1) return false;
            if (idx % 2 == 0 && m[i] < 1) return false;
        }
        return true;
    }
    if (m0 != 0) return false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        int idx = static_cast<int>(i) + 1;
        if (idx % 2 == 0 && m[i] != 1) return false;
        if (idx % 2 == 1 && m[i] < 1) return false;
    }
    return true;
}

namespace {

// enumerate all assignments of the free (unconstrained-parity) slots
void enumerate_kind(MultiplicityVector::Kind kind, int n, int d,
                    std::vector<MultiplicityVector>& out) {
    const int blocks = d - 1;
    // free slots: Type1 -> even indices (m_2, m_4, ...) plus m0;
    //             Type2 -> odd indices (m_1, m_3, ...)
    std::vector<int> free_idx;
    int fixed_sum = 0;
    for (int i = 1; i <= blocks; ++i) {
        bool fixed = (kind == MultiplicityVector::Kind::Type1) ? (i % 2 == 1) : (i % 2 == 0);
        if (fixed)
            fixed_sum += 1;
        else
            free_idx.push_back(i);
    }
    int budget = n - fixed_sum;  // to distribute over free slots (each >= 1) and m0 (>= 0)
    bool has_m0 = (kind == MultiplicityVector::Kind::Type1);
    int k = static_cast<int>(free_idx.size());
    if (budget < k) return;
    // compositions: free slots get >= 1, m0 >= 0 takes the rest (Type1) or must be 0 (Type2)
    std::vector<int> vals(static_cast<std::size_t>(k), 1);
    // iterate all compositions of (budget - k + k) = budget into k parts >= 1 when no m0,
    // otherwise parts >= 1 with slack going to m0
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == k) {
            if (!has_m0 && remaining != 0) return;
            MultiplicityVector v;
            v.kind = kind;
            v.m0 = has_m0 ? remaining : 0;
            v.m.assign(static_cast<std::size_t>(blocks), 1);
            for (int i = 0; i < k; ++i)
                v.m[static_cast<std::size_t>(free_idx[static_cast<std::size_t>(i)] - 1)] =
                    vals[static_cast<std::size_t>(i)];
            if (v.valid() && v.n() == n) out.push_back(v);
            return;
        }
        int upper = remaining - (k - pos - 1);  // leave >=1 for each later slot
        for (int val = 1; val <= upper; ++val) {
            vals[static_cast<std::size_t>(pos)] = val;
            rec(pos + 1, remaining - val);
        }
    };
    if (k == 0) {
        if (has_m0 ? budget >= 0 : budget == 0) {
            MultiplicityVector v;
            v.kind = kind;
            v.m0 = has_m0 ? budget : 0;
            v.m.assign(static_cast<std::size_t>(blocks), 1);
            if (v.valid() && v.n() == n) out.push_back(v);
        }
        return;
    }
    rec(0, budget);
}

} // namespace

std::vector<MultiplicityVector> enumerate_multiplicity_vectors(int n, int d) {
    if (d < 2 || n < d - 1) return {};
    std::vector<MultiplicityVector> out;
    enumerate_kind(MultiplicityVector::Kind::Type2, n, d, out);
    enumerate_kind(MultiplicityVector::Kind::Type1, n, d, out);
    // dedupe on (m0, m): a vector valid as both types keeps its first (Type2) tag
    std::vector<MultiplicityVector> uniq;
    for (const auto& v : out) {
        bool dup = false;
        for (const auto& u : uniq)
            if (u == v) { dup = true; break; }
        if (!dup) uniq.push_back(v);
    }
    std::stable_sort(uniq.begin(), uniq.end(), [](const auto& a, const auto& b) {
        if (a.m0 != b.m0) return a.m0 < b.m0;
        return a.m < b.m;
    });
    return uniq;
}

long long partition_count(int a, int b) {
    if (a < 0) throw DimensionMismatch("partition_count: a must be >= 0");
    if (b < 1) throw DimensionMismatch("partition_count: b must be >= 1");
    // p(a,b) = p(a-1,b-1) + p(a-b,b)
    std::vector<std::vector<long long>> p(static_cast<std::size_t>(a) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(b) + 1, 0));
    for (int j = 0; j <= b; ++j) {
        for (int i = 0; i <= a; ++i) {
            if (j == 0) { p[i][j] = (i == 0) ? 1 : 0; continue; }
            long long s = 0;
            if (i >= 1) s += p[i - 1][j - 1];
            if (i >= j) s += p[i - j][j];
            p[i][j] = s;
        }
    }
    return p[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

long long new_hypersurface_count(int n, int d) {
    int fl = (d - 1) / 2;  // floor((d-1)/2)
    int ce = d / 2;        // ceil((d-1)/2)
    return partition_count(n - fl, ce);
}

BoundaryPatch::BoundaryPatch(MultiplicityVector mult) : mult_(std::move(mult)) {
    if (!mult_.valid()) throw DimensionMismatch("invalid multiplicity vector");
}

BoundaryPatch::Result BoundaryPatch::eval_impl(const std::vector<Rational>& params,
                                               bool check) const {
    const int d = mult_.d();
    if (static_cast<int>(params.size()) != d - 2)
        throw DimensionMismatch("boundary patch expects d-2 parameters");
    std::vector<Rational> xs(params);
    // eliminate x_{d-1} by the normalization sum m_i x_i = 1
    Rational acc(1);
    for (int i = 0; i < d - 2; ++i)
        acc -= Rational(mult_.m[static_cast<std::size_t>(i)]) * xs[static_cast<std::size_t>(i)];
    Rational last = acc / Rational(mult_.m.back());
    xs.push_back(last);
    if (check) {
        Rational prev(0);
        for (const Rational& v : xs) {
            if (v < prev)
                throw AdmissibilityError("parameter point violates 0 <= x_i <= x_{i+1}");
            prev = v;
        }
        if (last < 0) throw AdmissibilityError("eliminated coordinate is negative");
    }
    Result res;
    res.block_values = xs;
    // preimage: zeros then blocks
    for (int i = 0; i < mult_.m0; ++i) res.preimage.emplace_back(0);
    for (int i = 0; i < d - 1; ++i)
        for (int k = 0; k < mult_.m[static_cast<std::size_t>(i)]; ++k)
            res.preimage.push_back(xs[static_cast<std::size_t>(i)]);
    auto p = power_sums(res.preimage, d);
    res.image.assign(p.begin() + 1, p.end());  // p_2..p_d
    return res;
}

BoundaryPatch::Result BoundaryPatch::evaluate(const std::vector<Rational>& params) const {
    return eval_impl(params, true);
}

BoundaryPatch::Result BoundaryPatch::evaluate_unchecked(const std::vector<Rational>& params) const {
    return eval_impl(params, false);
}

std::vector<std::vector<Rational>> sample_simplex(int n, int count, std::uint64_t seed, long grid) {
    if (n < 1) throw DimensionMismatch("sample_simplex: n must be >= 1");
    std::vector<std::vector<Rational>> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, grid);
    while (static_cast<int>(out.size()) < count) {
        std::vector<Integer> raw(static_cast<std::size_t>(n));
        Integer sum(0);
        for (auto& v : raw) {
            v = Integer(dist(rng));
            sum += v;
        }
        if (sum == 0) continue;
        std::vector<Rational> pt;
        pt.reserve(raw.size());
        for (const auto& v : raw) pt.emplace_back(Rational(v, sum));
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace vcell
