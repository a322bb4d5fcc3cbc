#ifndef VCELL_SVG_HPP
#define VCELL_SVG_HPP

#include <string>

namespace vcell::svg {

// Deterministic SVG of Pi_{n,3}: boundary arcs sampled at 256 parameter
// values, cusp markers, chords and cuspidal tangents dashed, adjoint zero
// set contoured by marching squares. Frame fixed to [0, 1.05]^2.
std::string plot_cell(int n, int samples_per_arc = 256, int contour_grid = 256);

void write_file(const std::string& path, const std::string& content);

} // namespace vcell::svg

#endif
