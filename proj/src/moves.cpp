#include "sr/moves.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace sr {

namespace {

bool is_crossing(const RibbonDiagram &d, int n) {
    return n >= 0 && n < static_cast<int>(d.nodes.size()) && d.nodes[n].kind == NodeKind::Crossing;
}

bool is_vertex(const RibbonDiagram &d, int n) {
    return n >= 0 && n < static_cast<int>(d.nodes.size()) && d.nodes[n].kind == NodeKind::Vertex;
}

bool port_ok(const RibbonDiagram &d, PortRef p) {
    return p.node >= 0 && p.node < static_cast<int>(d.nodes.size()) && p.slot >= 0 &&
           p.slot < d.nodes[p.node].arity();
}

int mate(int slot) { return slot ^ 1; }
bool over(int slot) { return slot < 2; }

// Next dart of the face to the right of p.
PortRef next_dart(const RibbonDiagram &d, PortRef p) {
    PortRef q = d.partner(p);
    return {q.node, ccw_next(d.nodes[q.node], q.slot)};
}

PortRef remap(PortRef p, const std::vector<int> &m) { return {m[p.node], p.slot}; }

// Deletes nodes; links into them are cleared. Returns old -> new index (-1 for erased).
std::vector<int> erase_nodes(RibbonDiagram &d, const std::set<int> &dead) {
    std::vector<int> m(d.nodes.size(), -1);
    std::vector<Node> kept;
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
        if (!dead.count(i)) {
            m[i] = static_cast<int>(kept.size());
            kept.push_back(d.nodes[i]);
        }
    for (auto &n : kept)
        for (int s = 0; s < n.arity(); ++s)
            n.link[s] = n.link[s].valid() && m[n.link[s].node] >= 0 ? remap(n.link[s], m) : PortRef{};
    d.nodes = std::move(kept);
    return m;
}

// Removes crossings and joins the strands that ran through them; closed strands become loops.
void bypass(RibbonDiagram &d, const std::set<int> &dead) {
    std::set<PortRef> used;
    std::vector<std::pair<PortRef, PortRef>> joins;
    for (int n : dead)
        for (int s = 0; s < 4; ++s) {
            PortRef e = d.partner({n, s});
            if (dead.count(e.node) || used.count(e))
                continue;
            PortRef q{n, s};
            PortRef r;
            while (true) {
                used.insert(q);
                PortRef m{q.node, mate(q.slot)};
                used.insert(m);
                r = d.partner(m);
                if (!dead.count(r.node))
                    break;
                q = r;
            }
            used.insert(e);
            used.insert(r);
            joins.emplace_back(e, r);
        }
    int closed = 0;
    for (int n : dead)
        for (int s = 0; s < 4; ++s) {
            if (used.count({n, s}))
                continue;
            ++closed;
            PortRef q{n, s};
            while (!used.count(q)) {
                used.insert(q);
                PortRef m{q.node, mate(q.slot)};
                used.insert(m);
                q = d.partner(m);
            }
        }
    auto m = erase_nodes(d, dead);
    for (auto [a, b] : joins)
        d.connect(remap(a, m), remap(b, m));
    for (int i = 0; i < closed; ++i)
        d.add_loop();
}

// Cuts the edge read from dart p (or free loop l) and returns its two ends; both invalid for a loop.
std::pair<PortRef, PortRef> open_edge(RibbonDiagram &d, PortRef p, int loop) {
    if (loop >= 0) {
        d.loops.erase(d.loops.begin() + loop);
        return {};
    }
    PortRef q = d.partner(p);
    d.disconnect(p);
    return {p, q};
}

// Joins a chain in..out into an opened edge.
void close_edge(RibbonDiagram &d, std::pair<PortRef, PortRef> ends, PortRef in, PortRef out) {
    if (!ends.first.valid()) {
        d.connect(out, in);
        return;
    }
    d.connect(ends.first, in);
    d.connect(out, ends.second);
}

// Kink: a crossing whose strand returns to itself. Entry and exit of the remaining strand.
bool kink_ends(const RibbonDiagram &d, int k, PortRef &entry, PortRef &exit) {
    if (!is_crossing(d, k))
        return false;
    bool a = d.partner({k, OO}) == PortRef{k, UI};
    bool b = d.partner({k, UO}) == PortRef{k, OI};
    if (a == b)
        return false;
    entry = {k, a ? OI : UI};
    exit = {k, a ? UO : OO};
    return true;
}

bool outside(const RibbonDiagram &d, int node, std::initializer_list<int> slots, const std::set<int> &inner) {
    for (int s : slots)
        if (inner.count(d.partner({node, s}).node))
            return false;
    return true;
}

bool dart_linked(const RibbonDiagram &d, PortRef p) { return port_ok(d, p) && d.partner(p).valid(); }

bool same_edge(const RibbonDiagram &d, PortRef a, PortRef b) { return a == b || d.partner(a) == b; }

bool match_rii_plus(const RibbonDiagram &d, const MoveSite &s) {
    if (s.variant < 0 || s.variant > 1 || !s.nodes.empty())
        return false;
    if (s.loop >= 0)
        return s.ports.empty() && s.loop < static_cast<int>(d.loops.size());
    if (s.ports.size() == 1)
        return dart_linked(d, s.ports[0]);
    if (s.ports.size() != 2 || !dart_linked(d, s.ports[0]) || !dart_linked(d, s.ports[1]) ||
        same_edge(d, s.ports[0], s.ports[1]))
        return false;
    PortRef p = s.ports[0];
    do {
        p = next_dart(d, p);
        if (p == s.ports[1])
            return true;
    } while (p != s.ports[0]);
    return false;
}

bool match_rii_minus(const RibbonDiagram &d, const MoveSite &s) {
    if (s.nodes.size() != 2 || s.ports.size() != 2 || s.loop >= 0)
        return false;
    int a = s.nodes[0], b = s.nodes[1];
    if (a == b || !is_crossing(d, a) || !is_crossing(d, b))
        return false;
    PortRef d1 = s.ports[0], d2 = s.ports[1];
    if (d1.node != a || d2.node != b || !port_ok(d, d1) || !port_ok(d, d2))
        return false;
    if (next_dart(d, d1) != d2 || next_dart(d, d2) != d1)
        return false;
    PortRef q1 = d.partner(d1), q2 = d.partner(d2);
    bool e1o = over(d1.slot) && over(q1.slot), e1u = !over(d1.slot) && !over(q1.slot);
    bool e2o = over(d2.slot) && over(q2.slot), e2u = !over(d2.slot) && !over(q2.slot);
    return (e1o && e2u) || (e1u && e2o);
}

bool match_riii(const RibbonDiagram &d, const MoveSite &s) {
    if (s.nodes.size() != 3 || s.ports.size() != 3 || s.loop >= 0)
        return false;
    std::set<int> tri(s.nodes.begin(), s.nodes.end());
    if (tri.size() != 3)
        return false;
    for (int i = 0; i < 3; ++i)
        if (!is_crossing(d, s.nodes[i]) || s.ports[i].node != s.nodes[i] || !port_ok(d, s.ports[i]))
            return false;
    bool top = false;
    for (int i = 0; i < 3; ++i) {
        PortRef p = s.ports[i], q = d.partner(p);
        if (next_dart(d, p) != s.ports[(i + 1) % 3])
            return false;
        if (over(p.slot) && over(q.slot))
            top = true;
    }
    return top;
}

bool match_cl_minus(const RibbonDiagram &d, const MoveSite &s) {
    if (s.nodes.size() != 2 || !s.ports.empty() || s.loop >= 0 || s.nodes[0] == s.nodes[1])
        return false;
    PortRef in1, out1, in2, out2;
    if (!kink_ends(d, s.nodes[0], in1, out1) || !kink_ends(d, s.nodes[1], in2, out2))
        return false;
    return d.partner(out1) == in2 && d.nodes[s.nodes[0]].side_order != d.nodes[s.nodes[1]].side_order;
}

bool match_cl_plus(const RibbonDiagram &d, const MoveSite &s) {
    if (s.variant < 0 || s.variant > 1 || !s.nodes.empty())
        return false;
    if (s.loop >= 0)
        return s.ports.empty() && s.loop < static_cast<int>(d.loops.size());
    return s.ports.size() == 1 && dart_linked(d, s.ports[0]);
}

bool match_ih(const RibbonDiagram &d, const MoveSite &s) {
    if (s.nodes.size() != 2 || s.ports.size() != 1 || s.loop >= 0)
        return false;
    int u = s.nodes[0], v = s.nodes[1];
    return u != v && is_vertex(d, u) && is_vertex(d, v) && s.ports[0].node == u && port_ok(d, s.ports[0]) &&
           d.partner(s.ports[0]).node == v;
}

// YI: nodes V, C1 (on prong s+1), C2 (on prong s+2); ports[0] = V.s, the stem.
bool match_yi(const RibbonDiagram &d, const MoveSite &s) {
    if (s.nodes.size() != 3 || s.ports.size() != 1 || s.loop >= 0)
        return false;
    int v = s.nodes[0], c1 = s.nodes[1], c2 = s.nodes[2];
    if (!is_vertex(d, v) || !is_crossing(d, c1) || !is_crossing(d, c2) || c1 == c2)
        return false;
    PortRef stem = s.ports[0];
    if (stem.node != v || !port_ok(d, stem))
        return false;
    int k1 = (stem.slot + 1) % 3, k2 = (stem.slot + 2) % 3;
    PortRef q1 = d.partner({v, k1}), q2 = d.partner({v, k2});
    if (q1.node != c1 || q2.node != c2 || over(q1.slot) != over(q2.slot))
        return false;
    PortRef a = next_dart(d, {v, k2});
    if (a.node != c2)
        return false;
    PortRef b = next_dart(d, a);
    if (b.node != c1 || next_dart(d, b) != PortRef{v, k2})
        return false;
    std::set<int> inner{v, c1, c2};
    return !inner.count(d.partner(stem).node) && outside(d, c1, {mate(q1.slot)}, inner) &&
           outside(d, c2, {mate(q2.slot)}, inner) && outside(d, c2, {mate(a.slot)}, inner) &&
           outside(d, c1, {mate(d.partner(a).slot)}, inner);
}

// IY: nodes V, C; ports[0] = V.s with C on that edge.
bool match_iy(const RibbonDiagram &d, const MoveSite &s) {
    if (s.nodes.size() != 2 || s.ports.size() != 1 || s.loop >= 0)
        return false;
    int v = s.nodes[0], c = s.nodes[1];
    if (!is_vertex(d, v) || !is_crossing(d, c))
        return false;
    PortRef stem = s.ports[0];
    if (stem.node != v || !port_ok(d, stem) || d.partner(stem).node != c)
        return false;
    std::set<int> inner{v, c};
    int cs = d.partner(stem).slot;
    if (!outside(d, v, {(stem.slot + 1) % 3, (stem.slot + 2) % 3}, inner))
        return false;
    for (int t = 0; t < 4; ++t)
        if (t != cs && inner.count(d.partner({c, t}).node))
            return false;
    return true;
}

bool matches(const RibbonDiagram &d, const MoveSite &s) {
    switch (s.kind) {
    case MoveKind::RIIPlus:
        return match_rii_plus(d, s);
    case MoveKind::RIIMinus:
        return match_rii_minus(d, s);
    case MoveKind::RIII:
        return match_riii(d, s);
    case MoveKind::CLPlus:
        return match_cl_plus(d, s);
    case MoveKind::CLMinus:
        return match_cl_minus(d, s);
    case MoveKind::IH:
        return match_ih(d, s);
    case MoveKind::YI:
        return match_yi(d, s);
    case MoveKind::IY:
        return match_iy(d, s);
    }
    return false;
}

void apply_rii_plus(RibbonDiagram &d, const MoveSite &s) {
    if (s.ports.size() == 2) {
        PortRef p1 = s.ports[0], p2 = s.ports[1];
        PortRef q1 = d.partner(p1), q2 = d.partner(p2);
        bool first_over = s.variant == 0;
        int x1 = d.add_crossing(first_over ? 0 : 1);
        int x2 = d.add_crossing(first_over ? 1 : 0);
        int i1 = first_over ? OI : UI, i2 = first_over ? UI : OI;
        d.disconnect(p1);
        d.disconnect(p2);
        d.connect(p1, {x1, i1});
        d.connect({x1, mate(i1)}, {x2, i1});
        d.connect({x2, mate(i1)}, q1);
        d.connect(p2, {x2, i2});
        d.connect({x2, mate(i2)}, {x1, i2});
        d.connect({x1, mate(i2)}, q2);
        return;
    }
    // Self bigon: the strand passes x1, x2, then folds back across both.
    bool finger_over = s.variant == 0;
    int x1 = d.add_crossing(finger_over ? 0 : 1);
    int x2 = d.add_crossing(finger_over ? 1 : 0);
    int in1 = finger_over ? UI : OI, in2 = finger_over ? OI : UI;
    auto ends = open_edge(d, s.ports.empty() ? PortRef{} : s.ports[0], s.loop);
    d.connect({x1, mate(in1)}, {x2, in1});
    d.connect({x2, mate(in1)}, {x2, in2});
    d.connect({x2, mate(in2)}, {x1, in2});
    close_edge(d, ends, {x1, in1}, {x1, mate(in2)});
}

// Each side slides past the opposite corner: the crossing at p takes over the outer end of q and back.
void apply_riii(RibbonDiagram &d, const MoveSite &s) {
    std::map<PortRef, PortRef> moved;
    std::vector<std::pair<PortRef, PortRef>> inner;
    for (PortRef p : s.ports) {
        PortRef q = d.partner(p);
        PortRef xm{p.node, mate(p.slot)}, ym{q.node, mate(q.slot)};
        moved[xm] = q;
        moved[ym] = p;
        inner.emplace_back(ym, xm);
    }
    std::set<std::pair<PortRef, PortRef>> outer;
    for (auto [from, to] : moved) {
        PortRef a = d.partner(from);
        outer.insert(std::minmax(from, a));
    }
    for (int n : s.nodes)
        for (int t = 0; t < 4; ++t)
            if (d.nodes[n].link[t].valid())
                d.disconnect({n, t});
    auto at = [&](PortRef x) { return moved.count(x) ? moved[x] : x; };
    for (auto [a, b] : inner)
        d.connect(a, b);
    for (auto [a, b] : outer)
        d.connect(at(a), at(b));
}

void apply_cl_plus(RibbonDiagram &d, const MoveSite &s) {
    int k1 = d.add_crossing(s.variant);
    int k2 = d.add_crossing(s.variant ^ 1);
    d.connect({k1, OO}, {k1, UI});
    d.connect({k2, OO}, {k2, UI});
    d.connect({k1, UO}, {k2, OI});
    auto ends = open_edge(d, s.ports.empty() ? PortRef{} : s.ports[0], s.loop);
    close_edge(d, ends, {k1, OI}, {k2, UO});
}

void apply_ih(RibbonDiagram &d, const MoveSite &s) {
    int u = s.nodes[0], v = s.nodes[1];
    int i = s.ports[0].slot, j = d.partner(s.ports[0]).slot;
    PortRef a{u, (i + 1) % 3}, b{u, (i + 2) % 3}, c{v, (j + 1) % 3}, e{v, (j + 2) % 3};
    auto to = [&](PortRef p) -> PortRef {
        if (p == b)
            return {u, 1};
        if (p == c)
            return {u, 2};
        if (p == e)
            return {v, 1};
        if (p == a)
            return {v, 2};
        return p;
    };
    std::vector<std::pair<PortRef, PortRef>> links;
    for (PortRef p : {a, b, c, e}) {
        PortRef q = d.partner(p);
        if ((q.node == u || q.node == v) && q < p)
            continue;
        links.emplace_back(to(p), to(q));
    }
    for (int n : {u, v})
        for (int t = 0; t < 3; ++t)
            if (d.nodes[n].link[t].valid())
                d.disconnect({n, t});
    d.connect({u, 0}, {v, 0});
    for (auto [p, q] : links)
        d.connect(p, q);
}

void apply_yi(RibbonDiagram &d, const MoveSite &s) {
    int v = s.nodes[0], c1 = s.nodes[1], c2 = s.nodes[2];
    int st = s.ports[0].slot, k1 = (st + 1) % 3, k2 = (st + 2) % 3;
    PortRef q1 = d.partner({v, k1}), q2 = d.partner({v, k2});
    bool stem_over = over(q1.slot);
    PortRef a = next_dart(d, {v, k2});
    PortRef b = d.partner(a);
    PortRef f1 = d.partner({c1, mate(q1.slot)}), f2 = d.partner({c2, mate(q2.slot)});
    PortRef ew = d.partner({c2, mate(a.slot)}), ee = d.partner({c1, mate(b.slot)});
    PortRef fs = d.partner({v, st});
    d.disconnect({v, st});
    auto m = erase_nodes(d, {c1, c2});
    v = m[v];
    f1 = remap(f1, m), f2 = remap(f2, m), ew = remap(ew, m), ee = remap(ee, m), fs = remap(fs, m);
    d.connect({v, k1}, f1);
    d.connect({v, k2}, f2);
    int c = d.add_crossing(stem_over ? 1 : 0);
    int si = stem_over ? OI : UI, xi = stem_over ? UI : OI;
    d.connect({v, st}, {c, si});
    d.connect({c, mate(si)}, fs);
    d.connect(ew, {c, xi});
    d.connect({c, mate(xi)}, ee);
}

void apply_iy(RibbonDiagram &d, const MoveSite &s) {
    int v = s.nodes[0], c = s.nodes[1];
    int st = s.ports[0].slot, k1 = (st + 1) % 3, k2 = (st + 2) % 3;
    PortRef cv = d.partner({v, st});
    bool stem_over = over(cv.slot);
    int left = ccw_next(d.nodes[c], cv.slot);
    PortRef el = d.partner({c, left}), er = d.partner({c, mate(left)});
    PortRef fs = d.partner({c, mate(cv.slot)});
    PortRef f1 = d.partner({v, k1}), f2 = d.partner({v, k2});
    d.disconnect({v, k1});
    d.disconnect({v, k2});
    auto m = erase_nodes(d, {c});
    v = m[v];
    el = remap(el, m), er = remap(er, m), fs = remap(fs, m), f1 = remap(f1, m), f2 = remap(f2, m);
    d.connect({v, st}, fs);
    int x1 = d.add_crossing(stem_over ? 0 : 1);
    int x2 = d.add_crossing(stem_over ? 0 : 1);
    int pi = stem_over ? OI : UI, xi = stem_over ? UI : OI;
    d.connect({v, k1}, {x1, pi});
    d.connect({x1, mate(pi)}, f1);
    d.connect({v, k2}, {x2, pi});
    d.connect({x2, mate(pi)}, f2);
    d.connect(el, {x2, xi});
    d.connect({x2, mate(xi)}, {x1, xi});
    d.connect({x1, mate(xi)}, er);
}

std::string port_name(const RibbonDiagram &d, PortRef p) {
    return d.nodes[p.node].id + "." + std::to_string(p.slot);
}

} // namespace

std::string move_name(MoveKind k) {
    switch (k) {
    case MoveKind::RIIPlus:
        return "RII+";
    case MoveKind::RIIMinus:
        return "RII-";
    case MoveKind::RIII:
        return "RIII";
    case MoveKind::CLPlus:
        return "CL+";
    case MoveKind::CLMinus:
        return "CL-";
    case MoveKind::IH:
        return "IH";
    case MoveKind::YI:
        return "YI";
    case MoveKind::IY:
        return "IY";
    }
    return "?";
}

bool is_backward(MoveKind k) { return k == MoveKind::RIIPlus || k == MoveKind::CLPlus || k == MoveKind::IY; }

std::string MoveSite::describe(const RibbonDiagram &d) const {
    std::string s = move_name(kind);
    for (int n : nodes)
        s += " " + d.nodes[n].id;
    for (PortRef p : ports)
        s += " " + port_name(d, p);
    if (loop >= 0)
        s += " " + d.loops[loop];
    if (kind == MoveKind::RIIPlus || kind == MoveKind::CLPlus)
        s += " v" + std::to_string(variant);
    return s;
}

std::vector<MoveSite> find_sites(const RibbonDiagram &d, MoveKind kind) {
    std::vector<MoveSite> out;
    auto keep = [&](MoveSite s) {
        s.kind = kind;
        if (matches(d, s))
            out.push_back(std::move(s));
    };
    const int nn = static_cast<int>(d.nodes.size());
    switch (kind) {
    case MoveKind::RIIPlus:
    case MoveKind::CLPlus:
        for (const auto &e : edges(d))
            for (int var = 0; var < 2; ++var) {
                MoveSite s;
                if (e.loop >= 0)
                    s.loop = e.loop;
                else
                    s.ports = {e.a};
                s.variant = var;
                keep(s);
            }
        if (kind == MoveKind::RIIPlus)
            for (const auto &f : faces(d))
                for (std::size_t i = 0; i < f.size(); ++i)
                    for (std::size_t j = i + 1; j < f.size(); ++j)
                        if (!same_edge(d, f[i], f[j]))
                            for (int var = 0; var < 2; ++var) {
                                MoveSite s;
                                s.ports = {f[i], f[j]};
                                s.variant = var;
                                keep(s);
                            }
        break;
    case MoveKind::RIIMinus:
        for (const auto &f : faces(d))
            if (f.size() == 2)
                keep({kind, {f[0].node, f[1].node}, {f[0], f[1]}});
        break;
    case MoveKind::RIII:
        for (const auto &f : faces(d))
            if (f.size() == 3)
                keep({kind, {f[0].node, f[1].node, f[2].node}, {f[0], f[1], f[2]}});
        break;
    case MoveKind::CLMinus:
        for (int k = 0; k < nn; ++k) {
            PortRef in, out_;
            if (kink_ends(d, k, in, out_))
                keep({kind, {k, d.partner(out_).node}, {}});
        }
        break;
    case MoveKind::IH:
        for (int u = 0; u < nn; ++u)
            if (d.nodes[u].kind == NodeKind::Vertex)
                for (int i = 0; i < 3; ++i) {
                    PortRef p{u, i}, q = d.partner(p);
                    if (p < q)
                        keep({kind, {u, q.node}, {p}});
                }
        break;
    case MoveKind::YI:
        for (int v = 0; v < nn; ++v)
            if (d.nodes[v].kind == NodeKind::Vertex)
                for (int st = 0; st < 3; ++st)
                    keep({kind,
                          {v, d.partner({v, (st + 1) % 3}).node, d.partner({v, (st + 2) % 3}).node},
                          {{v, st}}});
        break;
    case MoveKind::IY:
        for (int v = 0; v < nn; ++v)
            if (d.nodes[v].kind == NodeKind::Vertex)
                for (int st = 0; st < 3; ++st)
                    keep({kind, {v, d.partner({v, st}).node}, {{v, st}}});
        break;
    }
    return out;
}

RibbonDiagram apply(const RibbonDiagram &d0, const MoveSite &s) {
    if (!matches(d0, s))
        throw Error("stale move site");
    RibbonDiagram d = d0;
    switch (s.kind) {
    case MoveKind::RIIPlus:
        apply_rii_plus(d, s);
        break;
    case MoveKind::RIIMinus:
    case MoveKind::CLMinus:
        bypass(d, {s.nodes.begin(), s.nodes.end()});
        break;
    case MoveKind::RIII:
        apply_riii(d, s);
        break;
    case MoveKind::CLPlus:
        apply_cl_plus(d, s);
        break;
    case MoveKind::IH:
        apply_ih(d, s);
        break;
    case MoveKind::YI:
        apply_yi(d, s);
        break;
    case MoveKind::IY:
        apply_iy(d, s);
        break;
    }
    d.relabel();
    return d;
}

namespace {

bool shrinks(MoveKind k) { return k == MoveKind::RIIMinus || k == MoveKind::CLMinus || k == MoveKind::YI; }

} // namespace

FuzzResult fuzz(const RibbonDiagram &d, std::uint64_t seed, int steps, const FuzzOptions &opt) {
    if (steps < 0)
        throw Error("steps must be non-negative");
    FuzzResult r{d, {}};
    std::mt19937_64 rng(seed);
    for (int step = 0; step < steps; ++step) {
        int size = r.diagram.edge_count();
        std::vector<std::pair<MoveKind, std::vector<MoveSite>>> pool, small, neutral;
        for (MoveKind k : opt.kinds) {
            if (is_backward(k) && size >= opt.max_edges)
                continue;
            auto sites = find_sites(r.diagram, k);
            if (sites.empty())
                continue;
            if (shrinks(k))
                small.emplace_back(k, sites);
            else if (!is_backward(k))
                neutral.emplace_back(k, sites);
            pool.emplace_back(k, std::move(sites));
        }
        if (2 * size > opt.max_edges)
            pool = !small.empty() ? small : !neutral.empty() ? neutral : pool;
        if (pool.empty()) {
            r.trace.push_back("stuck: no applicable move");
            break;
        }
        auto &[kind, sites] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        const auto &site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        r.trace.push_back(site.describe(r.diagram));
        r.diagram = apply(r.diagram, site);
    }
    return r;
}

} // namespace sr
