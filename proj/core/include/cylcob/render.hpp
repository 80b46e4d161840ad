#pragma once

#include <ostream>

#include "cylcob/invariants.hpp"

namespace cylcob {

// Draws the evaluated diagram as an annulus: the ingoing circle outside, the
// outgoing circle inside, marked points clockwise from 12 o'clock with the
// basepoint highlighted, caps/cups/through strands as smooth arcs, bracelets
// as closed concentric loops, and a legend with the invariant tuple. Every
// drawable strand element carries class "strand", so their count is exactly
// caps + cups + tau + beta.
void render_svg(std::ostream& out, const AffineDiagram& d);

}  // namespace cylcob
