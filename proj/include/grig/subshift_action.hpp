#pragma once

#include <cstdint>

#include "grig/word.hpp"

namespace grig::group {

/// Involutions on pointed windows mirroring the tree generators: each moves
/// the origin marker across the seam letter it responds to, or fixes the
/// window.
///   A responds to a;  B to {x,y};  C to {x,z};  D to {y,z}.
enum class SubshiftGen : char { A = 'A', B = 'B', C = 'C', D = 'D' };

SubshiftGen subshift_gen_from_char(char c);

/// Applies one generator. The pair (omega_0, omega_1) and one step of slack
/// must be inside the window: requires 2 <= origin <= |word| - 1.
PointedWord subshift_generator(SubshiftGen g, const PointedWord& w);

/// True iff g moves the marker on w (rather than fixing the window).
bool generator_moves(SubshiftGen g, const PointedWord& w);

/// BFS over {A,B,C,D} applications from w. True iff every shift T^k(w) with
/// |k| <= steps is reached; every reached window is a shift by construction
/// (the generators only move the marker). Requires the window to keep
/// origin +- steps away from the boundary.
bool orbit_coincidence_check(const PointedWord& w, std::int64_t steps);

}  // namespace grig::group
