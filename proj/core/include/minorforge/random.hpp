#pragma once

#include <cstdint>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Erdos-Renyi G(n, p).
///
/// The generator is std::mt19937_64 seeded with `seed`; its output sequence
/// is fixed by the C++ standard, so graphs are identical on every platform.
/// Pairs are visited in graph6 bit order ((0,1), (0,2), (1,2), (0,3), ...)
/// and each consumes exactly one 64-bit draw x; the pair is an edge iff
/// (x >> 11) < floor(p * 2^53), with p = 1 mapped to 2^53.
/// No std::*_distribution is involved (those are implementation-defined).
///
/// Throws std::invalid_argument when p is outside [0, 1] or NaN.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace minorforge
