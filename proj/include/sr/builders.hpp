#pragma once

#include "sr/diagram.hpp"
#include "sr/presentation.hpp"

#include <vector>

namespace sr {

RibbonDiagram disk();
RibbonDiagram annulus();
// Disk with m trivial bands and n crossed band pairs: b = m+1, g = n.
RibbonDiagram trivial_band_closure(int m, int n);
// Annulus whose band carries m full twists (kinks).
RibbonDiagram looped_band(int m);
// Disk with one band per entry of twists (that many kinks) followed by k untwisted bands.
RibbonDiagram punctured_disk(const std::vector<int> &twists, int k);
// Punctured torus: two bands braided 2k+1 times.
RibbonDiagram torus_T1(int k);
// S1 linked once by each of S2 and S3, which are unlinked with each other.
RibbonDiagram three_annuli_chain();
RibbonDiagram hopf_annuli();

RibbonDiagram disjoint_union(const RibbonDiagram &a, const RibbonDiagram &b);

// Band feet created by boundary_connected_sum, as node indices of the result.
struct SumInfo {
    int offset = 0; // first node of the second summand
    int first_vertex = -1;
    int second_vertex = -1;
    // Surface component of each summand's surface in the result.
    std::vector<int> first_surfaces, second_surfaces;
    // Arc of each summand (in its own boundary structure) where the band is attached.
    int first_arc = -1, second_arc = -1;
};

// Joins boundary component b1 of d1 to b2 of d2 (indices into boundary(d).components) by an
// untwisted band. A disk atom on either side is simply absorbed.
RibbonDiagram boundary_connected_sum(const RibbonDiagram &d1, int b1, const RibbonDiagram &d2, int b2,
                                     SumInfo *info = nullptr);

// Inserts count kinks on edge e (index into edges(d)); sign picks the crossing flag.
RibbonDiagram insert_kinks(const RibbonDiagram &d, int edge, int count, int sign = 1);

// Band with one full twist whose feet both sit on edge e, on the same side or on opposite sides.
RibbonDiagram add_twisted_band(const RibbonDiagram &d, int edge, bool opposite_sides, int sign = 1);

// Band from the right side of e over e to its left side: forces the two boundary colours of e
// to agree and adds one free generator.
RibbonDiagram stabilize(const RibbonDiagram &d, int edge);

struct Realization {
    RibbonDiagram diagram;
    int k = 0; // expected free factors: #generators + #relators + 1
};

Realization realize_group(const GroupPresentation &p);

} // namespace sr
