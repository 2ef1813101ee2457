#pragma once

#include "sr/cocycle.hpp"
#include "sr/diagram.hpp"

#include <string>
#include <vector>

namespace sr {

// cyclic:n, dihedral:n, or a file holding a group multiplication table (n rows of n entries).
HeapPtr parse_heap_spec(const std::string &spec);
// cyclic:n or abelian:n1,n2,...
CoeffPtr parse_coeff_spec(const std::string &spec);

// zero, phi:n:i, phivec:[n:]a0,..., psiD:n:i, psivec:[n:]a0,..., ring:n:a,b, cobdy:f0,f1,... or a file
// of |X|^3 values in (x,y,z) order. zero, cobdy and table files use the given heap and coefficients.
Cochain2 parse_cocycle_spec(const std::string &spec, const HeapPtr &heap, const CoeffPtr &coeffs);
// Comma-separated list; bare numbers continue the previous entry, so "zero,phivec:0,1,2" has two.
std::vector<std::string> split_cocycle_list(const std::string &list);

// annulus, disk, bands:m,n, looped:m, loops:m1,...;k, torus:k, rings3, hopf.
RibbonDiagram build_from_spec(const std::string &spec);
// An existing .srd file, otherwise a builder spec.
RibbonDiagram load_diagram(const std::string &arg);

} // namespace sr
