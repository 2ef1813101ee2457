#pragma once

#include "sr/builders.hpp"
#include "sr/coloring.hpp"

#include <cstdint>
#include <vector>

namespace sr {

struct ConnectedSumReport {
    RibbonDiagram sum;
    SumInfo info;
    InvariantValue direct;   // invariant of the sum
    InvariantValue product;  // parts glued term by term along the band (the ·ij product)
    InvariantValue residual; // colorings of the sum that do not come from colorings of the parts
    std::uint64_t colorings = 0;
    std::uint64_t residual_colorings = 0;

    bool formula_holds() const;
};

// dec1 and dec2 decorate d1 and d2 (one cocycle per surface component); the cocycles on the two
// glued components must coincide.
ConnectedSumReport connected_sum_check(const RibbonDiagram &d1, int b1, const std::vector<Cochain2> &dec1,
                                       const RibbonDiagram &d2, int b2, const std::vector<Cochain2> &dec2);

} // namespace sr
