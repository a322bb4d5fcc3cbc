#ifndef VCELL_VANDERMONDE_HPP
#define VCELL_VANDERMONDE_HPP

#include "vcell/rational.hpp"
#include "vcell/errors.hpp"

#include <cstdint>
#include <vector>

namespace vcell {

// power sums p_1..p_d of a point
std::vector<Rational> power_sums(const std::vector<Rational>& x, int d);

// Block structure of a boundary preimage. Type1 carries a zero block of
// size m0 and requires odd-indexed multiplicities (m_1, m_3, ...) equal to 1;
// Type2 has no zero block and requires even-indexed multiplicities equal to 1.
// Indices follow m_1..m_{d-1}; entries sum (with m0) to n.
struct MultiplicityVector {
    enum class Kind { Type1, Type2 };
    Kind kind = Kind::Type2;
    int m0 = 0;              // zero-block size; 0 for Type2
    std::vector<int> m;      // m_1..m_{d-1}

    int n() const;
    int d() const { return static_cast<int>(m.size()) + 1; }
    bool valid() const;
    bool operator==(const MultiplicityVector& o) const { return m0 == o.m0 && m == o.m; }
};

// All valid multiplicity vectors for (n, d), both types, deduplicated
// (a vector admissible as both types is emitted once, as Type2),
// deterministic order.
std::vector<MultiplicityVector> enumerate_multiplicity_vectors(int n, int d);

// number of partitions of a into exactly b positive parts
long long partition_count(int a, int b);

// number of new boundary hypersurfaces of Pi_{n,d} relative to Pi_{n-1,d}:
// p(n - floor((d-1)/2), ceil((d-1)/2))
long long new_hypersurface_count(int n, int d);

// Exact evaluator for the boundary parametrization of one multiplicity
// vector: given the free parameters x_1..x_{d-2}, the last coordinate is
// eliminated by the normalization sum m_i x_i = 1 and the image is
// (p_2,...,p_d) of the block preimage.
class BoundaryPatch {
public:
    explicit BoundaryPatch(MultiplicityVector mult);

    const MultiplicityVector& mult() const { return mult_; }
    int free_params() const { return mult_.d() - 2; }

    struct Result {
        std::vector<Rational> image;      // p_2..p_d
        std::vector<Rational> preimage;   // full point in R^n (zeros included)
        std::vector<Rational> block_values;  // x_1..x_{d-1}
    };

    // strict admissibility: 0 <= x_1 <= ... <= x_{d-1}; violations raise
    Result evaluate(const std::vector<Rational>& params) const;
    // same formula on the Zariski closure, no chain checks
    Result evaluate_unchecked(const std::vector<Rational>& params) const;

private:
    Result eval_impl(const std::vector<Rational>& params, bool check) const;
    MultiplicityVector mult_;
};

// Reproducible pseudo-random rational points on the simplex Delta_{n-1}.
// Coordinates are integers from [0, grid] normalized to sum 1.
std::vector<std::vector<Rational>> sample_simplex(int n, int count, std::uint64_t seed,
                                                  long grid = 1000000L);

} // namespace vcell

#endif
