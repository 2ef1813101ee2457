#include "sr/diagram.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace sr {

int RibbonDiagram::add_vertex(std::string id) {
    Node n;
    n.kind = NodeKind::Vertex;
    n.id = id.empty() ? "v" + std::to_string(nodes.size() + 1) : std::move(id);
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
}

int RibbonDiagram::add_crossing(int side_order, std::string id) {
    Node n;
    n.kind = NodeKind::Crossing;
    n.side_order = side_order & 1;
    n.id = id.empty() ? "c" + std::to_string(nodes.size() + 1) : std::move(id);
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
}

void RibbonDiagram::connect(PortRef a, PortRef b) {
    if (a == b)
        throw Error("cannot link a port to itself");
    for (PortRef p : {a, b}) {
        if (p.node < 0 || p.node >= static_cast<int>(nodes.size()) || p.slot < 0 ||
            p.slot >= nodes[p.node].arity())
            throw Error("port reference out of range");
        if (nodes[p.node].link[p.slot].valid())
            throw Error("port of " + nodes[p.node].id + " already linked");
    }
    nodes[a.node].link[a.slot] = b;
    nodes[b.node].link[b.slot] = a;
}

void RibbonDiagram::disconnect(PortRef a) {
    PortRef b = partner(a);
    nodes[a.node].link[a.slot] = PortRef{};
    if (b.valid())
        nodes[b.node].link[b.slot] = PortRef{};
}

std::vector<EdgeRef> edges(const RibbonDiagram &d) {
    std::vector<EdgeRef> out;
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
        for (int s = 0; s < d.nodes[i].arity(); ++s) {
            PortRef p{i, s}, q = d.nodes[i].link[s];
            if (p < q)
                out.push_back({p, q});
        }
    for (int l = 0; l < static_cast<int>(d.loops.size()); ++l)
        out.push_back({{}, {}, l});
    return out;
}

void RibbonDiagram::add_loop(std::string id) {
    loops.push_back(id.empty() ? "l" + std::to_string(loops.size() + 1) : std::move(id));
}

void RibbonDiagram::add_disk(std::string id) {
    disks.push_back(id.empty() ? "d" + std::to_string(disks.size() + 1) : std::move(id));
}

int RibbonDiagram::crossing_count() const {
    int c = 0;
    for (const auto &n : nodes)
        c += n.kind == NodeKind::Crossing;
    return c;
}

int RibbonDiagram::vertex_count() const {
    return static_cast<int>(nodes.size()) - crossing_count();
}

int RibbonDiagram::edge_count() const {
    int ports = 0;
    for (const auto &n : nodes)
        ports += n.arity();
    return ports / 2 + static_cast<int>(loops.size());
}

void RibbonDiagram::check_links() const {
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        for (int s = 0; s < nodes[i].arity(); ++s) {
            PortRef q = nodes[i].link[s];
            if (!q.valid())
                throw Error("dangling port on " + nodes[i].id);
            if (q.node >= static_cast<int>(nodes.size()) || q.slot >= nodes[q.node].arity() ||
                nodes[q.node].link[q.slot] != PortRef{i, s})
                throw Error("inconsistent link at " + nodes[i].id);
        }
}

void RibbonDiagram::relabel() {
    int v = 0, c = 0;
    for (auto &n : nodes)
        n.id = n.kind == NodeKind::Vertex ? "v" + std::to_string(++v) : "c" + std::to_string(++c);
    for (std::size_t i = 0; i < loops.size(); ++i)
        loops[i] = "l" + std::to_string(i + 1);
    for (std::size_t i = 0; i < disks.size(); ++i)
        disks[i] = "d" + std::to_string(i + 1);
}

bool RibbonDiagram::operator==(const RibbonDiagram &o) const {
    if (nodes.size() != o.nodes.size() || loops.size() != o.loops.size() || disks.size() != o.disks.size())
        return false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto &a = nodes[i], &b = o.nodes[i];
        if (a.kind != b.kind || a.link != b.link)
            return false;
        if (a.kind == NodeKind::Crossing && a.side_order != b.side_order)
            return false;
    }
    return true;
}

namespace {

void swap_slots(RibbonDiagram &d, int c, int s1, int s2) {
    auto &n = d.nodes[c];
    PortRef a = n.link[s1], b = n.link[s2];
    if (a == PortRef{c, s2})
        return;
    n.link[s1] = b;
    n.link[s2] = a;
    d.nodes[b.node].link[b.slot] = PortRef{c, s1};
    d.nodes[a.node].link[a.slot] = PortRef{c, s2};
}

int port_id(PortRef p) { return p.node * 4 + p.slot; }

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Port left by a boundary strand that arrives at p.
int exit_slot(const Node &n, int slot) {
    if (n.kind == NodeKind::Vertex)
        return (slot + 2) % 3;
    return slot ^ 1;
}

} // namespace

void reverse_over(RibbonDiagram &d, int c) {
    swap_slots(d, c, OI, OO);
    d.nodes[c].side_order ^= 1;
}

void reverse_under(RibbonDiagram &d, int c) {
    swap_slots(d, c, UI, UO);
    d.nodes[c].side_order ^= 1;
}

int ccw_next(const Node &n, int slot) {
    if (n.kind == NodeKind::Vertex)
        return (slot + 1) % 3;
    static constexpr std::array<std::array<int, 4>, 2> order{{{OI, UO, OO, UI}, {OI, UI, OO, UO}}};
    const auto &o = order[n.side_order];
    int k = static_cast<int>(std::find(o.begin(), o.end(), slot) - o.begin());
    return o[(k + 1) % 4];
}

std::vector<std::vector<PortRef>> faces(const RibbonDiagram &d) {
    const int nn = static_cast<int>(d.nodes.size());
    std::vector<char> seen(nn * 4, 0);
    std::vector<std::vector<PortRef>> out;
    for (int i = 0; i < nn; ++i)
        for (int s = 0; s < d.nodes[i].arity(); ++s) {
            if (seen[port_id({i, s})])
                continue;
            auto &f = out.emplace_back();
            for (PortRef p{i, s}; !seen[port_id(p)];) {
                seen[port_id(p)] = 1;
                f.push_back(p);
                PortRef q = d.partner(p);
                p = {q.node, ccw_next(d.nodes[q.node], q.slot)};
            }
        }
    return out;
}

bool is_planar(const RibbonDiagram &d) {
    d.check_links();
    const int nn = static_cast<int>(d.nodes.size());
    if (nn == 0)
        return true;
    Dsu dsu(nn);
    int darts = 0;
    for (int i = 0; i < nn; ++i)
        for (int s = 0; s < d.nodes[i].arity(); ++s) {
            dsu.unite(i, d.nodes[i].link[s].node);
            ++darts;
        }
    int comps = 0;
    for (int i = 0; i < nn; ++i)
        comps += dsu.find(i) == i;
    int f = static_cast<int>(faces(d).size());
    return nn - darts / 2 + f == 2 * comps;
}

int TopologySummary::total_boundaries() const {
    int s = 0;
    for (const auto &c : components)
        s += c.boundaries;
    return s;
}

int TopologySummary::total_genus() const {
    int s = 0;
    for (const auto &c : components)
        s += c.genus;
    return s;
}

int TopologySummary::total_euler() const {
    int s = 0;
    for (const auto &c : components)
        s += c.euler;
    return s;
}

std::vector<int> surface_components(const RibbonDiagram &d, int *count) {
    const int np = static_cast<int>(d.nodes.size()) * 4;
    Dsu dsu(np);
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        const auto &n = d.nodes[i];
        for (int s = 0; s < n.arity(); ++s)
            dsu.unite(i * 4 + s, port_id(n.link[s]));
        if (n.kind == NodeKind::Vertex) {
            dsu.unite(i * 4, i * 4 + 1);
            dsu.unite(i * 4, i * 4 + 2);
        } else {
            dsu.unite(i * 4 + OI, i * 4 + OO);
            dsu.unite(i * 4 + UI, i * 4 + UO);
        }
    }
    std::vector<int> comp(np, -1), root_id(np, -1);
    int k = 0;
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
        for (int s = 0; s < d.nodes[i].arity(); ++s) {
            int r = dsu.find(i * 4 + s);
            if (root_id[r] < 0)
                root_id[r] = k++;
            comp[i * 4 + s] = root_id[r];
        }
    if (count)
        *count = k + static_cast<int>(d.loops.size() + d.disks.size());
    return comp;
}

BoundaryStructure boundary(const RibbonDiagram &d) {
    d.check_links();
    BoundaryStructure bs;
    int graph_comps = 0;
    auto comp = surface_components(d, &bs.surfaces);
    graph_comps = bs.surfaces - static_cast<int>(d.loops.size() + d.disks.size());

    const int nn = static_cast<int>(d.nodes.size());
    auto next = [&](PortRef p) {
        return d.partner(PortRef{p.node, exit_slot(d.nodes[p.node], p.slot)});
    };
    auto is_event = [&](PortRef p) {
        return d.nodes[p.node].kind == NodeKind::Crossing && (p.slot == UI || p.slot == UO);
    };

    std::vector<int> arc_of(nn * 4, -1);
    std::vector<char> seen(nn * 4, 0);
    for (int i = 0; i < nn; ++i)
        for (int s = 0; s < d.nodes[i].arity(); ++s) {
            PortRef start{i, s};
            if (seen[port_id(start)])
                continue;
            BoundaryComponent bc;
            bc.surface = comp[port_id(start)];
            std::vector<PortRef> walk;
            for (PortRef p = start;;) {
                seen[port_id(p)] = 1;
                walk.push_back(p);
                p = next(p);
                if (p == start)
                    break;
            }
            std::size_t first_event = walk.size();
            for (std::size_t k = 0; k < walk.size(); ++k)
                if (is_event(walk[k])) {
                    first_event = k;
                    break;
                }
            if (first_event < walk.size())
                std::rotate(walk.begin(), walk.begin() + (first_event + 1) % walk.size(), walk.end());
            int arc = bs.arc_count++;
            bs.arc_surface.push_back(bc.surface);
            bc.arcs.push_back(arc);
            for (std::size_t k = 0; k < walk.size(); ++k) {
                arc_of[port_id(walk[k])] = arc;
                if (is_event(walk[k]) && k + 1 < walk.size()) {
                    arc = bs.arc_count++;
                    bs.arc_surface.push_back(bc.surface);
                    bc.arcs.push_back(arc);
                }
            }
            bc.arrivals = std::move(walk);
            bs.components.push_back(std::move(bc));
        }
    for (auto &bc : bs.components)
        for (std::size_t k = 0; k < bc.arrivals.size(); ++k) {
            PortRef p = bc.arrivals[k];
            if (!is_event(p))
                continue;
            BoundaryEvent ev;
            ev.crossing = p.node;
            ev.along_under = p.slot == UI;
            ev.arc_before = arc_of[port_id(p)];
            ev.arc_after = arc_of[port_id(bc.arrivals[(k + 1) % bc.arrivals.size()])];
            bc.events.push_back(ev);
        }

    for (std::size_t l = 0; l < d.loops.size(); ++l)
        for (int side = 0; side < 2; ++side) {
            BoundaryComponent bc;
            bc.surface = graph_comps + static_cast<int>(l);
            bc.arcs.push_back(bs.arc_count++);
            bs.arc_surface.push_back(bc.surface);
            bs.components.push_back(std::move(bc));
        }
    for (std::size_t k = 0; k < d.disks.size(); ++k) {
        BoundaryComponent bc;
        bc.surface = graph_comps + static_cast<int>(d.loops.size() + k);
        bs.disk_arc.push_back(bs.arc_count);
        bc.arcs.push_back(bs.arc_count++);
        bs.arc_surface.push_back(bc.surface);
        bs.components.push_back(std::move(bc));
    }

    bs.crossing_index.assign(nn, -1);
    for (int i = 0; i < nn; ++i) {
        const auto &n = d.nodes[i];
        if (n.kind != NodeKind::Crossing)
            continue;
        CrossingArcs ca;
        ca.x = arc_of[port_id({i, UI})];
        ca.w = arc_of[port_id({i, UO})];
        ca.z = arc_of[port_id(next({i, UI}))];
        ca.y = arc_of[port_id(next({i, UO}))];
        int left = arc_of[port_id({i, OI})];
        int right = arc_of[port_id({i, OO})];
        ca.u = n.side_order == 0 ? left : right;
        ca.v = n.side_order == 0 ? right : left;
        ca.over_surface = comp[port_id({i, OI})];
        ca.under_surface = comp[port_id({i, UI})];
        bs.crossing_index[i] = static_cast<int>(bs.crossings.size());
        bs.crossings.push_back(ca);
    }
    bs.port_arc = std::move(arc_of);
    return bs;
}

TopologySummary validate(const RibbonDiagram &d) {
    if (d.nodes.empty() && d.loops.empty() && d.disks.empty())
        throw Error("empty diagram");
    d.check_links();
    int count = 0;
    auto comp = surface_components(d, &count);
    const int graph_comps = count - static_cast<int>(d.loops.size() + d.disks.size());
    std::vector<ComponentSummary> cs(count);
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        const auto &n = d.nodes[i];
        int c = comp[i * 4];
        if (n.kind == NodeKind::Vertex) {
            cs[c].euler += 1;
        } else {
            cs[comp[i * 4 + OI]].euler += 1;
            cs[comp[i * 4 + UI]].euler += 1;
        }
        for (int s = 0; s < n.arity(); ++s)
            if (PortRef{i, s} < n.link[s])
                cs[comp[i * 4 + s]].euler -= 1;
    }
    for (int l = 0; l < static_cast<int>(d.loops.size()); ++l)
        cs[graph_comps + l].euler = 0;
    for (int k = 0; k < static_cast<int>(d.disks.size()); ++k)
        cs[graph_comps + static_cast<int>(d.loops.size()) + k].euler = 1;
    BoundaryStructure bs = boundary(d);
    for (const auto &bc : bs.components)
        cs[bc.surface].boundaries += 1;
    for (std::size_t c = 0; c < cs.size(); ++c) {
        int twice = 2 - cs[c].euler - cs[c].boundaries;
        if (twice < 0 || twice % 2 != 0)
            throw Error("component " + std::to_string(c + 1) + " has invalid genus parity (chi=" +
                        std::to_string(cs[c].euler) + ", b=" + std::to_string(cs[c].boundaries) + ")");
        cs[c].genus = twice / 2;
    }
    return TopologySummary{cs};
}

std::ostream &operator<<(std::ostream &os, const TopologySummary &s) {
    os << "components " << s.nu();
    for (std::size_t i = 0; i < s.components.size(); ++i) {
        const auto &c = s.components[i];
        os << "\n  S" << i + 1 << ": chi=" << c.euler << " b=" << c.boundaries << " g=" << c.genus;
    }
    return os;
}

} // namespace sr
