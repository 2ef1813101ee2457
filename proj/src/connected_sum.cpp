#include "sr/connected_sum.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <map>

namespace sr {

namespace {

struct PartColorings {
    std::map<int, std::vector<std::vector<int>>> weights_at; // band arc colour -> per-boundary weights
};

PartColorings part_colorings(const BoundaryStructure &bs, int arc, const Decoration &dec) {
    PartColorings p;
    for_each_coloring(bs, dec.heap(), [&](const Coloring &c) {
        std::vector<int> w(bs.components.size());
        for (std::size_t b = 0; b < w.size(); ++b)
            w[b] = boltzmann(bs, c, static_cast<int>(b), dec);
        p.weights_at[c[arc]].push_back(std::move(w));
        return true;
    });
    return p;
}

InvariantValue merged(const InvariantValue &a, const InvariantValue &b) {
    InvariantValue r = a;
    for (const auto &[t, m] : b.terms)
        r.add(t, m);
    return r;
}

} // namespace

bool ConnectedSumReport::formula_holds() const { return direct == merged(product, residual); }

ConnectedSumReport connected_sum_check(const RibbonDiagram &d1, int b1, const std::vector<Cochain2> &dec1,
                                       const RibbonDiagram &d2, int b2, const std::vector<Cochain2> &dec2) {
    ConnectedSumReport r;
    BoundaryStructure bs1 = boundary(d1), bs2 = boundary(d2);
    if (static_cast<int>(dec1.size()) != bs1.surfaces || static_cast<int>(dec2.size()) != bs2.surfaces)
        throw Error("decoration size does not match the number of surface components");
    if (b1 < 0 || b1 >= static_cast<int>(bs1.components.size()) || b2 < 0 ||
        b2 >= static_cast<int>(bs2.components.size()))
        throw Error("boundary component out of range");
    const int s1 = bs1.components[b1].surface, s2 = bs2.components[b2].surface;
    if (!(dec1[s1] == dec2[s2]))
        throw Error("incompatible decorations: the glued components carry different cocycles");
    Decoration D1(dec1), D2(dec2);
    if (D1.heap().op().table != D2.heap().op().table || !(D1.coeffs() == D2.coeffs()))
        throw Error("incompatible decorations: different heaps or coefficient groups");

    r.sum = boundary_connected_sum(d1, b1, d2, b2, &r.info);
    BoundaryStructure bs = boundary(r.sum);
    std::vector<Cochain2> decs(bs.surfaces, dec1.front());
    for (int t = 0; t < bs1.surfaces; ++t)
        decs[r.info.first_surfaces[t]] = dec1[t];
    for (int t = 0; t < bs2.surfaces; ++t)
        decs[r.info.second_surfaces[t]] = dec2[t];
    Decoration D(decs);
    const auto &A = D.coeffs();

    int side_a = -1, side_b = -1;
    if (r.info.first_vertex >= 0) {
        side_a = bs.arc_at({r.info.first_vertex, 2});
        side_b = bs.arc_at({r.info.second_vertex, 2});
    }
    for_each_coloring(bs, D.heap(), [&](const Coloring &c) {
        Term t = coloring_term(bs, c, D);
        r.direct.add(t);
        ++r.colorings;
        if (side_a >= 0 && c[side_a] != c[side_b]) {
            r.residual.add(t);
            ++r.residual_colorings;
        }
        return true;
    });

    auto p1 = part_colorings(bs1, r.info.first_arc, D1);
    auto p2 = part_colorings(bs2, r.info.second_arc, D2);
    const int glued = r.info.first_surfaces[s1];
    for (const auto &[x, list1] : p1.weights_at) {
        auto it = p2.weights_at.find(x);
        if (it == p2.weights_at.end())
            continue;
        for (const auto &w1 : list1)
            for (const auto &w2 : it->second) {
                Term t(bs.surfaces);
                for (int b = 0; b < static_cast<int>(w1.size()); ++b)
                    if (b != b1)
                        t[r.info.first_surfaces[bs1.components[b].surface]].push_back(w1[b]);
                for (int b = 0; b < static_cast<int>(w2.size()); ++b)
                    if (b != b2)
                        t[r.info.second_surfaces[bs2.components[b].surface]].push_back(w2[b]);
                t[glued].push_back(A.add(w1[b1], w2[b2]));
                for (auto &f : t)
                    std::sort(f.begin(), f.end());
                r.product.add(t);
            }
    }
    return r;
}

} // namespace sr
