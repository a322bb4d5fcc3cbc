#ifndef VCELL_FIXTURES_HPP
#define VCELL_FIXTURES_HPP

#include "vcell/multipoly.hpp"
#include "vcell/polymatrix.hpp"
#include "vcell/vandermonde.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vcell::fixtures {

// degree-6 boundary polynomial of the (2,1,1) hypersurface of Pi_{4,4},
// in coordinates (y1, y2, y3) = (p_2, p_3, p_4)
MultiPoly quartic_P();

// the n=3 relation Q = 3 y1^2 - 6 y1 + 8 y2 - 6 y3 + 1
MultiPoly quartic_Q();

// 5x5 presenting matrix template over (x, y, n), entries cleared of
// denominators by the factor (n-1)^2; its determinant at integer n is
// -n (n-1)^6 b_n
PolyMatrix resultant_matrix_template();

// FNV-1a 64 digest of the canonical serialization; transcription lock
std::uint64_t digest(const MultiPoly& p);
std::uint64_t P_digest_expected();
std::uint64_t Q_digest_expected();

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    std::vector<CheckLine> checks;
    bool all_pass() const;
};

// Point tier: Q on nu_{3,4} images of (1,1,1) points, P on (2,1,1)
// parametrized points with n = 4, plus an off-surface nonvanishing probe.
// The slow tier substitutes the closed-form parametrization symbolically.
Report verify_quartic_boundaries(int samples, std::uint64_t seed, bool slow = false);

// m_1 and n - m_1 - 1 parametrizations annihilate the same hypersurface
// polynomial (checked against P for n = 4)
Report verify_same_hypersurface(int n, int m1, int samples = 10, std::uint64_t seed = 7);

// admissible random parameter points for a (d-2)-parameter patch
std::vector<std::vector<Rational>> sample_patch_params(const BoundaryPatch& patch, int count,
                                                       std::uint64_t seed, long grid = 1000);

} // namespace vcell::fixtures

#endif
