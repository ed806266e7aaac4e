#pragma once

#include "gbl/diagram.hpp"
#include "gbl/magnus.hpp"

#include <vector>

namespace gbl {

/// Zero-framed longitude of every component as a word in the meridians
/// x_1 .. x_m, where x_c is the meridian of the arc through the first passage
/// of component c. Arc meridians are rewritten in the x_c by depth - 1 rounds
/// of substitution through the crossing relations, so each longitude is exact
/// modulo the depth-th term of the lower central series. Throws
/// std::invalid_argument for depth < 2 or a string-link diagram.
std::vector<Word> wirtinger_longitudes(const LinkDiagram& d, std::size_t depth);

/// The same longitudes computed directly as Magnus series truncated at
/// degree_cap, without materialising words. Exact in every degree <= degree_cap.
std::vector<MagnusSeries> longitude_series(const LinkDiagram& d, std::size_t degree_cap, bool reduced);

}  // namespace gbl
