#pragma once

#include <string>

#include "cylcob/invariants.hpp"
#include "cylcob/matrix.hpp"

namespace cylcob {

// Invariants of an evaluated word as a single-line JSON object with fixed key
// order: n_in, n_out, tau, t0 (null when tau = 0), beta, mu, ind_d, ind_b,
// caps, cups, through. Label lists are ascending; caps/cups are [start, end]
// pairs; through is [ingoing, outgoing] pairs.
std::string invariant_json(const AffineDiagram& d);

// Row-major nested array of entry strings, e.g. [["1","0"],["0","1"]].
std::string matrix_json(const Matrix& m);

// One row per line, entries comma-separated, same entry strings.
std::string matrix_csv(const Matrix& m);

}  // namespace cylcob
