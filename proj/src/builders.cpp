#include "sr/builders.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace sr {

namespace {

constexpr int kUp = 2;

// Replaces edge e by e.a - in ... out - e.b; a free loop closes into out - in.
void splice(RibbonDiagram &d, const EdgeRef &e, PortRef in, PortRef out) {
    if (e.loop >= 0) {
        d.loops.erase(d.loops.begin() + e.loop);
        d.connect(out, in);
        return;
    }
    d.disconnect(e.a);
    d.connect(e.a, in);
    d.connect(out, e.b);
}

EdgeRef edge_at(const RibbonDiagram &d, int edge) {
    auto es = edges(d);
    if (edge < 0 || edge >= static_cast<int>(es.size()))
        throw Error("edge index " + std::to_string(edge) + " out of range (" + std::to_string(es.size()) +
                    " edges)");
    return es[edge];
}

int kink_flag(int sign) { return sign >= 0 ? 0 : 1; }

// Chain of count kinks; returns its entry and exit ports.
std::pair<PortRef, PortRef> kink_chain(RibbonDiagram &d, int count, int sign) {
    PortRef in{}, out{};
    for (int i = 0; i < count; ++i) {
        int c = d.add_crossing(kink_flag(sign));
        d.connect({c, OO}, {c, UI});
        if (out.valid())
            d.connect(out, {c, OI});
        else
            in = {c, OI};
        out = {c, UO};
    }
    return {in, out};
}

// Joins from -> chain -> to, skipping an empty chain.
void thread(RibbonDiagram &d, PortRef from, std::pair<PortRef, PortRef> chain, PortRef to) {
    if (!chain.first.valid()) {
        d.connect(from, to);
        return;
    }
    d.connect(from, chain.first);
    d.connect(chain.second, to);
}

// Planar base: feet 0..2B-1 along a path whose end feet continue straight into their arches.
// Vertex for foot p (1 <= p <= 2B-2) has slots left, right, up in counterclockwise order.
struct ArchBase {
    std::vector<PortRef> foot;
};

ArchBase arch_base(RibbonDiagram &d, int bands) {
    const int feet = 2 * bands;
    ArchBase base;
    std::vector<int> v(feet, -1);
    for (int p = 1; p + 1 < feet; ++p)
        v[p] = d.add_vertex();
    for (int p = 1; p + 2 < feet; ++p)
        d.connect({v[p], 1}, {v[p + 1], 0});
    base.foot.resize(feet);
    for (int p = 0; p < feet; ++p) {
        if (p == 0)
            base.foot[p] = {v[1], 0};
        else if (p == feet - 1)
            base.foot[p] = {v[feet - 2], 1};
        else
            base.foot[p] = {v[p], kUp};
    }
    return base;
}

int find_edge(const RibbonDiagram &d, PortRef p) {
    auto es = edges(d);
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        if (es[i].a == p || es[i].b == p)
            return i;
    throw Error("port is not on any edge");
}

} // namespace

RibbonDiagram disk() {
    RibbonDiagram d;
    d.add_disk();
    return d;
}

RibbonDiagram annulus() {
    RibbonDiagram d;
    d.add_loop();
    return d;
}

RibbonDiagram looped_band(int m) {
    if (m < 0)
        throw Error("looped_band needs m >= 0");
    RibbonDiagram d;
    if (m == 0) {
        d.add_loop();
        return d;
    }
    auto [in, out] = kink_chain(d, m, 1);
    d.connect(out, in);
    return d;
}

RibbonDiagram punctured_disk(const std::vector<int> &twists, int k) {
    if (k < 0)
        throw Error("punctured_disk needs k >= 0");
    for (int t : twists)
        if (t < 0)
            throw Error("twist counts must be non-negative");
    const int bands = static_cast<int>(twists.size()) + k;
    if (bands == 0)
        return disk();
    if (bands == 1)
        return looped_band(twists.empty() ? 0 : twists[0]);
    RibbonDiagram d;
    ArchBase base = arch_base(d, bands);
    for (int j = 0; j < bands; ++j) {
        int t = j < static_cast<int>(twists.size()) ? twists[j] : 0;
        thread(d, base.foot[2 * j], kink_chain(d, t, 1), base.foot[2 * j + 1]);
    }
    return d;
}

RibbonDiagram trivial_band_closure(int m, int n) {
    if (m < 0 || n < 0)
        throw Error("trivial_band_closure needs m, n >= 0");
    const int bands = m + 2 * n;
    if (bands == 0)
        return disk();
    if (bands == 1)
        return annulus();
    RibbonDiagram d;
    ArchBase base = arch_base(d, bands);
    int p = 0;
    for (int j = 0; j < n; ++j, p += 4) {
        // arch (p, p+2) passes over arch (p+1, p+3)
        int c = d.add_crossing(1);
        d.connect(base.foot[p], {c, OI});
        d.connect({c, OO}, base.foot[p + 2]);
        d.connect(base.foot[p + 1], {c, UI});
        d.connect({c, UO}, base.foot[p + 3]);
    }
    for (int j = 0; j < m; ++j, p += 2)
        d.connect(base.foot[p], base.foot[p + 1]);
    return d;
}

RibbonDiagram torus_T1(int k) {
    if (k < 0)
        throw Error("torus_T1 needs k >= 0");
    RibbonDiagram d;
    int bot = d.add_vertex("vb"); // slots: around, right strand, left strand
    int top = d.add_vertex("vt"); // slots: around, left, right
    d.connect({bot, 0}, {top, 0});
    PortRef left = {bot, 2}, right = {bot, 1};
    for (int j = 0; j < 2 * k + 1; ++j) {
        int c = d.add_crossing(1);
        d.connect(left, {c, OI});
        d.connect(right, {c, UI});
        left = {c, UO};
        right = {c, OO};
    }
    d.connect(left, {top, 1});
    d.connect(right, {top, 2});
    d.relabel();
    return d;
}

RibbonDiagram three_annuli_chain() {
    RibbonDiagram d;
    // node order fixes the component order S1 (middle), S2, S3
    int cb = d.add_crossing(1); // S1 over S2
    int ca = d.add_crossing(1); // S2 over S1
    int cd = d.add_crossing(0); // S1 over S3
    int cc = d.add_crossing(0); // S3 over S1
    d.connect({cd, OO}, {cc, UI});
    d.connect({cc, UO}, {ca, UI});
    d.connect({ca, UO}, {cb, OI});
    d.connect({cb, OO}, {cd, OI});
    d.connect({ca, OO}, {cb, UI});
    d.connect({cb, UO}, {ca, OI});
    d.connect({cc, OO}, {cd, UI});
    d.connect({cd, UO}, {cc, OI});
    d.relabel();
    return d;
}

RibbonDiagram hopf_annuli() {
    RibbonDiagram d;
    int cb = d.add_crossing(1);
    int ca = d.add_crossing(1);
    d.connect({ca, UO}, {cb, OI});
    d.connect({cb, OO}, {ca, UI});
    d.connect({ca, OO}, {cb, UI});
    d.connect({cb, UO}, {ca, OI});
    d.relabel();
    return d;
}

RibbonDiagram disjoint_union(const RibbonDiagram &a, const RibbonDiagram &b) {
    RibbonDiagram d = a;
    const int off = static_cast<int>(a.nodes.size());
    for (Node n : b.nodes) {
        for (int s = 0; s < n.arity(); ++s)
            if (n.link[s].valid())
                n.link[s].node += off;
        d.nodes.push_back(n);
    }
    d.loops.insert(d.loops.end(), b.loops.begin(), b.loops.end());
    d.disks.insert(d.disks.end(), b.disks.begin(), b.disks.end());
    d.relabel();
    return d;
}

namespace {

// Index into d.disks when boundary component b is a disk atom, else -1.
int disk_atom(const RibbonDiagram &d, const BoundaryStructure &bs, int b) {
    if (b < 0 || b >= static_cast<int>(bs.components.size()))
        throw Error("boundary component " + std::to_string(b) + " out of range");
    const int first_disk = static_cast<int>(bs.components.size() - d.disks.size());
    return b >= first_disk ? b - first_disk : -1;
}

// Opens a vertex on boundary component b with slot 2 free for a band.
int attach_vertex(RibbonDiagram &d, const BoundaryStructure &bs, int b) {
    const auto &bc = bs.components[b];
    if (bc.arrivals.empty()) {
        int port_comps = 0;
        for (const auto &c : bs.components)
            port_comps += !c.arrivals.empty();
        d.loops.erase(d.loops.begin() + (b - port_comps) / 2);
        int v = d.add_vertex();
        d.connect({v, 0}, {v, 1});
        return v;
    }
    PortRef p = bc.arrivals.front();
    PortRef a = d.partner(p);
    d.disconnect(p);
    int v = d.add_vertex();
    d.connect(a, {v, 0});
    d.connect({v, 1}, p);
    return v;
}

} // namespace

namespace {

// Loop erased by attach_vertex for boundary component b, or -1.
int attached_loop(const BoundaryStructure &bs, int b) {
    if (!bs.components[b].arrivals.empty())
        return -1;
    int port_comps = 0;
    for (const auto &c : bs.components)
        port_comps += !c.arrivals.empty();
    return (b - port_comps) / 2;
}

struct SideLayout {
    int node_off = 0, loop_off = 0, disk_off = 0;
    int lost_loop = -1, lost_disk = -1;
    int vertex = -1; // attach vertex in the result
};

// Surface of the result for each surface of part o; -1 marks an absorbed disk.
std::vector<int> map_surfaces(const RibbonDiagram &o, const RibbonDiagram &d, const std::vector<int> &comp_d,
                              int graph_d, const SideLayout &l) {
    int so = 0;
    auto comp_o = surface_components(o, &so);
    const int loops = static_cast<int>(o.loops.size()), disks = static_cast<int>(o.disks.size());
    const int graph_o = so - loops - disks;
    std::vector<int> out(so, -1);
    for (std::size_t pid = 0; pid < comp_o.size(); ++pid)
        if (comp_o[pid] >= 0 && out[comp_o[pid]] < 0)
            out[comp_o[pid]] = comp_d[pid + 4 * l.node_off];
    for (int i = 0; i < loops; ++i) {
        if (i == l.lost_loop)
            out[graph_o + i] = comp_d[4 * l.vertex];
        else
            out[graph_o + i] = graph_d + l.loop_off + i - (l.lost_loop >= 0 && i > l.lost_loop);
    }
    const int loops_d = static_cast<int>(d.loops.size());
    for (int i = 0; i < disks; ++i)
        if (i != l.lost_disk)
            out[graph_o + loops + i] = graph_d + loops_d + l.disk_off + i - (l.lost_disk >= 0 && i > l.lost_disk);
    return out;
}

int attachment_arc(const BoundaryStructure &bs, int b) {
    const auto &c = bs.components[b];
    return c.arrivals.empty() ? c.arcs.front() : bs.arc_at(c.arrivals.front());
}

} // namespace

RibbonDiagram boundary_connected_sum(const RibbonDiagram &d1, int b1, const RibbonDiagram &d2, int b2,
                                     SumInfo *info) {
    RibbonDiagram x = d1, y = d2;
    BoundaryStructure bx = boundary(x), by = boundary(y);
    int k1 = disk_atom(x, bx, b1), k2 = disk_atom(y, by, b2);
    int v1 = -1, v2 = -1;
    SideLayout l1, l2;
    if (k1 >= 0) {
        x.disks.erase(x.disks.begin() + k1);
        l1.lost_disk = k1;
    } else if (k2 >= 0) {
        y.disks.erase(y.disks.begin() + k2);
        l2.lost_disk = k2;
    } else {
        l1.lost_loop = attached_loop(bx, b1);
        l2.lost_loop = attached_loop(by, b2);
        v1 = attach_vertex(x, bx, b1);
        v2 = attach_vertex(y, by, b2);
    }
    const int off = static_cast<int>(x.nodes.size());
    RibbonDiagram d = disjoint_union(x, y);
    if (v1 >= 0)
        d.connect({v1, 2}, {off + v2, 2});
    if (info) {
        info->offset = off;
        info->first_vertex = v1;
        info->second_vertex = v2 >= 0 ? off + v2 : -1;
        int count = 0;
        auto comp = surface_components(d, &count);
        const int graph = count - static_cast<int>(d.loops.size() + d.disks.size());
        l1.vertex = v1;
        l2 = {off, static_cast<int>(x.loops.size()), static_cast<int>(x.disks.size()), l2.lost_loop, l2.lost_disk,
              v2 >= 0 ? off + v2 : -1};
        info->first_surfaces = map_surfaces(d1, d, comp, graph, l1);
        info->second_surfaces = map_surfaces(d2, d, comp, graph, l2);
        int s1 = bx.components[b1].surface, s2 = by.components[b2].surface;
        if (k1 >= 0)
            info->first_surfaces[s1] = info->second_surfaces[s2];
        if (k2 >= 0)
            info->second_surfaces[s2] = info->first_surfaces[s1];
        info->first_arc = attachment_arc(bx, b1);
        info->second_arc = attachment_arc(by, b2);
    }
    return d;
}

RibbonDiagram insert_kinks(const RibbonDiagram &d0, int edge, int count, int sign) {
    RibbonDiagram d = d0;
    EdgeRef e = edge_at(d, edge);
    if (count <= 0)
        return d;
    // follow the strand direction when the edge ends at a crossing input
    auto input = [&](PortRef p) { return d.nodes[p.node].kind == NodeKind::Crossing && p.slot % 2 == 0; };
    if (e.loop < 0 && (input(e.a) || (!input(e.b) && d.nodes[e.b.node].kind == NodeKind::Crossing)))
        std::swap(e.a, e.b);
    auto [in, out] = kink_chain(d, count, sign);
    splice(d, e, in, out);
    d.relabel();
    return d;
}

RibbonDiagram add_twisted_band(const RibbonDiagram &d0, int edge, bool opposite_sides, int sign) {
    RibbonDiagram d = d0;
    EdgeRef e = edge_at(d, edge);
    auto kink = kink_chain(d, 1, sign);
    int v1 = d.add_vertex(); // toP, toQ, band (band on the left)
    int v2 = d.add_vertex();
    if (!opposite_sides) {
        splice(d, e, {v1, 0}, {v2, 1});
        d.connect({v1, 1}, {v2, 0});
        thread(d, {v1, 2}, kink, {v2, 2});
    } else {
        // v2: toP, band, toQ (band on the right); the band passes under e at c
        int c = d.add_crossing(0);
        splice(d, e, {v1, 0}, {c, OO});
        d.connect({v1, 1}, {v2, 0});
        d.connect({v2, 2}, {c, OI});
        thread(d, {v1, 2}, kink, {c, UI});
        d.connect({c, UO}, {v2, 1});
    }
    d.relabel();
    return d;
}

RibbonDiagram stabilize(const RibbonDiagram &d0, int edge) {
    RibbonDiagram d = d0;
    EdgeRef e = edge_at(d, edge);
    int a = d.add_vertex(); // in, out, band on the left
    int b = d.add_vertex(); // in, band on the right, out
    int c = d.add_crossing(0);
    splice(d, e, {a, 0}, {c, UO});
    d.connect({a, 1}, {b, 0});
    d.connect({b, 2}, {c, UI});
    // band leaves on the right, passes over e and comes down on the left
    d.connect({b, 1}, {c, OI});
    d.connect({c, OO}, {a, 2});
    d.relabel();
    return d;
}

// Layout: handles are arches over a horizontal base with their tops running east, one slot of
// width 4 per relator letter. Generator g is one annulus: a thin loop in the sky at level g
// (bottom strand east, top strand west) with a finger hooking the handle at each occurrence.
// A finger passes over the lower loops, so each lower strand sees the finger's colours once in
// each direction and is left unchanged; handles are monochromatic after stabilization.
Realization realize_group(const GroupPresentation &p) {
    const int n = p.rank();
    const int m = static_cast<int>(p.relators.size());
    Realization r;
    r.k = n + m + 1;
    RibbonDiagram &d = r.diagram;
    for (const auto &w : p.relators)
        for (int l : w)
            if (l == 0 || std::abs(l) > n)
                throw Error("relator letter out of range");

    struct Finger {
        int gen, sign, slot;
        int L = -1, R = -1; // crossings with the handle, west then east
    };
    std::vector<Finger> fingers;
    std::vector<std::vector<int>> of_gen(n);
    std::vector<std::pair<PortRef, PortRef>> handle_chain(m);
    for (int j = 0; j < m; ++j) {
        PortRef first{}, last{};
        auto append = [&](PortRef in, PortRef out) {
            if (last.valid())
                d.connect(last, in);
            else
                first = in;
            last = out;
        };
        for (int l : p.relators[j]) {
            Finger f{std::abs(l) - 1, l > 0 ? 1 : -1, static_cast<int>(fingers.size())};
            if (f.sign > 0) {
                f.L = d.add_crossing(1); // ring over, heading south
                f.R = d.add_crossing(1); // handle over
                append({f.L, UI}, {f.L, UO});
                append({f.R, OI}, {f.R, OO});
            } else {
                f.L = d.add_crossing(0); // handle over
                f.R = d.add_crossing(0); // ring over, heading north
                append({f.L, OI}, {f.L, OO});
                append({f.R, UI}, {f.R, UO});
            }
            of_gen[f.gen].push_back(f.slot);
            fingers.push_back(f);
        }
        handle_chain[j] = {first, last};
    }

    std::vector<int> lo(n), hi(n);
    for (int g = 0; g < n; ++g)
        if (!of_gen[g].empty()) {
            lo[g] = 4 * of_gen[g].front();
            hi[g] = 4 * of_gen[g].back() + 4;
        }
    // finger strand at x (down at 4t+1, up at 4t+3) over strand s (0 bottom, 1 top) of loop g
    std::map<std::tuple<int, int, int>, int> cross;
    for (const auto &f : fingers)
        for (int up = 0; up < 2; ++up) {
            int x = 4 * f.slot + 1 + 2 * up;
            for (int g = 0; g < f.gen; ++g) {
                if (of_gen[g].empty() || !(lo[g] < x && x < hi[g]))
                    continue;
                // down/south over east: 1, over west: 0; up/north the reverse
                cross[{x, g, 0}] = d.add_crossing(up ? 0 : 1);
                cross[{x, g, 1}] = d.add_crossing(up ? 1 : 0);
            }
        }

    for (int g = 0; g < n; ++g) {
        if (of_gen[g].empty()) {
            d.add_loop();
            continue;
        }
        std::vector<std::pair<PortRef, PortRef>> passes;
        auto over = [&](int c) { passes.push_back({{c, OI}, {c, OO}}); };
        auto under = [&](int c) { passes.push_back({{c, UI}, {c, UO}}); };
        std::vector<int> xs; // higher fingers crossing this loop
        for (const auto &[key, c] : cross)
            if (std::get<1>(key) == g && std::get<2>(key) == 0)
                xs.push_back(std::get<0>(key));
        std::size_t k = 0;
        for (int t : of_gen[g]) {
            for (; k < xs.size() && xs[k] < 4 * t; ++k)
                under(cross[{xs[k], g, 0}]);
            const Finger &f = fingers[t];
            int down = 4 * t + 1, up = 4 * t + 3;
            for (int h = g - 1; h >= 0; --h)
                if (cross.count({down, h, 1})) {
                    over(cross[{down, h, 1}]);
                    over(cross[{down, h, 0}]);
                }
            if (f.sign > 0) {
                over(f.L);
                under(f.R);
            } else {
                under(f.L);
                over(f.R);
            }
            for (int h = 0; h < g; ++h)
                if (cross.count({up, h, 0})) {
                    over(cross[{up, h, 0}]);
                    over(cross[{up, h, 1}]);
                }
        }
        for (; k < xs.size(); ++k)
            under(cross[{xs[k], g, 0}]);
        for (auto it = xs.rbegin(); it != xs.rend(); ++it)
            under(cross[{*it, g, 1}]);
        for (std::size_t i = 0; i < passes.size(); ++i)
            d.connect(passes[i].second, passes[(i + 1) % passes.size()].first);
    }

    if (m == 0) {
        d.add_disk();
        d.relabel();
        return r;
    }
    std::vector<PortRef> left_foot(m);
    int handle_loop = -1;
    if (m == 1) {
        auto [first, last] = handle_chain[0];
        if (first.valid()) {
            d.connect(last, first);
            left_foot[0] = first;
        } else {
            handle_loop = static_cast<int>(d.loops.size());
            d.add_loop();
        }
    } else {
        ArchBase base = arch_base(d, m);
        for (int j = 0; j < m; ++j) {
            thread(d, base.foot[2 * j], handle_chain[j], base.foot[2 * j + 1]);
            left_foot[j] = base.foot[2 * j];
        }
    }
    for (int j = 0; j < m; ++j) {
        if (left_foot[j].valid()) {
            d = stabilize(d, find_edge(d, left_foot[j]));
            continue;
        }
        auto es = edges(d);
        for (int e = 0; e < static_cast<int>(es.size()); ++e)
            if (es[e].loop == handle_loop) {
                d = stabilize(d, e);
                break;
            }
    }
    d.relabel();
    return r;
}

} // namespace sr
