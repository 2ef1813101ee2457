#pragma once

#include "sr/cocycle.hpp"
#include "sr/diagram.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sr {

// Heap element per arc of a BoundaryStructure.
using Coloring = std::vector<int>;

// Backtracking enumeration in a fixed deterministic order; visit returns false to stop early.
void for_each_coloring(const BoundaryStructure &bs, const FiniteHeap &x,
                       const std::function<bool(const Coloring &)> &visit);
std::vector<Coloring> enumerate_colorings(const RibbonDiagram &d, const FiniteHeap &x);
std::uint64_t count_colorings(const RibbonDiagram &d, const FiniteHeap &x);
std::uint64_t count_colorings(const BoundaryStructure &bs, const FiniteHeap &x);
bool is_coloring(const BoundaryStructure &bs, const FiniteHeap &x, const Coloring &c);

// One cocycle per surface component, all on a common heap and coefficient group.
// Construction verifies RA, the cocycle condition and pairwise mutual distributivity.
class Decoration {
public:
    explicit Decoration(std::vector<Cochain2> cocycles);

    std::size_t size() const { return cocycles_.size(); }
    const Cochain2 &operator[](std::size_t i) const { return cocycles_[i]; }
    const FiniteHeap &heap() const { return cocycles_.front().heap(); }
    const AbelianGroup &coeffs() const { return cocycles_.front().coeffs(); }

private:
    std::vector<Cochain2> cocycles_;
};

// Empty string when admissible, otherwise the first failing condition.
std::string admissibility_error(const std::vector<Cochain2> &cocycles);

// Sum over the events of one boundary component of psi_l(c, a, b), where the crossed strand goes
// from colour c to T(c,a,b) in boundary direction and l is the surface of the over ribbon.
int boltzmann(const BoundaryStructure &bs, const Coloring &c, int component, const Decoration &dec);

// Per surface component, the sorted weights of its boundary components.
using Term = std::vector<std::vector<int>>;

struct InvariantValue {
    std::map<Term, std::uint64_t> terms;

    std::uint64_t total() const;
    bool operator==(const InvariantValue &) const = default;
    void add(const Term &t, std::uint64_t mult = 1) { terms[t] += mult; }
    // "mult × [S1: (a,b)] [S2: (c)]" per line.
    std::string to_string(const AbelianGroup &a) const;
    // {"term": {"S1": [..], ...}, "mult": N} per line.
    std::string to_json_lines(const AbelianGroup &a) const;
};

Term coloring_term(const BoundaryStructure &bs, const Coloring &c, const Decoration &dec);
InvariantValue cocycle_invariant(const RibbonDiagram &d, const Decoration &dec);
InvariantValue cocycle_invariant(const BoundaryStructure &bs, const Decoration &dec);

} // namespace sr
