#include "sr/builders.hpp"
#include "sr/cocycle.hpp"
#include "sr/coloring.hpp"
#include "sr/error.hpp"
#include "sr/moves.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace sr;

namespace {

CoeffPtr zn(int n) { return std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n)); }

// Triangle faces whose three corners are distinct crossings, one of them joined to the next
// by an edge running over at both ends.
int triangle_oracle(const RibbonDiagram &d) {
    int count = 0;
    for (const auto &f : faces(d)) {
        if (f.size() != 3)
            continue;
        std::set<int> nodes;
        bool all_crossings = true, over_edge = false;
        for (const auto &p : f) {
            nodes.insert(p.node);
            all_crossings = all_crossings && d.nodes[p.node].kind == NodeKind::Crossing;
            PortRef q = d.partner(p);
            over_edge = over_edge || (p.slot < 2 && q.slot < 2);
        }
        if (nodes.size() == 3 && all_crossings && over_edge)
            ++count;
    }
    return count;
}

std::vector<RibbonDiagram> samples() {
    return {annulus(),      trivial_band_closure(1, 1), looped_band(2),        torus_T1(1),
            torus_T1(2),    three_annuli_chain(),       hopf_annuli(),         punctured_disk({2, 3}, 1),
            disjoint_union(annulus(), torus_T1(1))};
}

struct Fingerprint {
    TopologySummary summary;
    std::vector<std::uint64_t> counts;
    InvariantValue phi, cobdy;
    bool operator==(const Fingerprint &) const = default;
};

Fingerprint fingerprint(const RibbonDiagram &d) {
    Fingerprint f;
    f.summary = validate(d);
    auto bs = boundary(d);
    for (auto g : {cyclic_group(2), cyclic_group(3), cyclic_group(4), dihedral_group(3)})
        f.counts.push_back(count_colorings(bs, group_heap(g)));
    f.phi = cocycle_invariant(bs, Decoration(std::vector<Cochain2>(bs.surfaces, phi_vec({0, 1, 2}))));
    f.cobdy = cocycle_invariant(
        bs, Decoration(std::vector<Cochain2>(bs.surfaces, coboundary(dihedral_heap(3), zn(3), {0, 1, 2, 2, 0, 1}))));
    return f;
}

bool has_kink_pair(const RibbonDiagram &d) { return !find_sites(d, MoveKind::CLMinus).empty(); }

} // namespace

TEST_CASE("move names") {
    std::set<std::string> names;
    for (auto k : all_move_kinds)
        names.insert(move_name(k));
    CHECK(names.size() == 8);
    CHECK(move_name(MoveKind::RIIPlus) == "RII+");
    CHECK(is_backward(MoveKind::CLPlus));
    CHECK_FALSE(is_backward(MoveKind::RIII));
}

TEST_CASE("RII+ sites on the annulus") {
    RibbonDiagram a = annulus();
    auto sites = find_sites(a, MoveKind::RIIPlus);
    CHECK(sites.size() >= static_cast<std::size_t>(a.edge_count()));
    for (auto d : samples()) {
        auto s = find_sites(d, MoveKind::RIIPlus);
        std::set<int> loops;
        std::set<PortRef> ports;
        for (const auto &site : s) {
            if (site.loop >= 0)
                loops.insert(site.loop);
            for (const auto &p : site.ports)
                ports.insert(p);
        }
        for (const auto &e : edges(d)) {
            if (e.loop >= 0)
                CHECK(loops.count(e.loop));
            else
                CHECK((ports.count(e.a) || ports.count(e.b)));
        }
    }
}

TEST_CASE("RIII sites match the triangle oracle") {
    for (auto d : samples()) {
        CHECK(static_cast<int>(find_sites(d, MoveKind::RIII).size()) == triangle_oracle(d));
    }
    RibbonDiagram t = torus_T1(1);
    CHECK(triangle_oracle(t) == 0);
    // one bigon pushed across a crossing gives a triangle
    bool found = false;
    for (const auto &s : find_sites(t, MoveKind::RIIPlus)) {
        if (s.ports.size() != 2)
            continue;
        RibbonDiagram u = apply(t, s);
        if (triangle_oracle(u) >= 1) {
            auto sites = find_sites(u, MoveKind::RIII);
            REQUIRE(sites.size() >= 1);
            Fingerprint base = fingerprint(u);
            for (const auto &r : sites) {
                RibbonDiagram v = apply(u, r);
                CHECK_NOTHROW(v.check_links());
                CHECK(is_planar(v));
                CHECK(fingerprint(v) == base);
            }
            found = true;
            break;
        }
    }
    CHECK(found);
}

TEST_CASE("no IH sites without vertices") {
    CHECK(find_sites(looped_band(3), MoveKind::IH).empty());
    CHECK(find_sites(annulus(), MoveKind::IH).empty());
    CHECK(find_sites(hopf_annuli(), MoveKind::IH).empty());
    CHECK_FALSE(find_sites(torus_T1(1), MoveKind::IH).empty());
}

TEST_CASE("RII+ then RII- gives back the diagram") {
    for (auto d : samples()) {
        d.relabel();
        for (const auto &s : find_sites(d, MoveKind::RIIPlus)) {
            RibbonDiagram u = apply(d, s);
            CHECK(u.crossing_count() == d.crossing_count() + 2);
            bool back = false;
            for (const auto &r : find_sites(u, MoveKind::RIIMinus))
                back = back || apply(u, r) == d;
            CHECK(back);
        }
    }
}

TEST_CASE("opposite kinks cancel on a looped band") {
    for (int m = 1; m <= 3; ++m) {
        RibbonDiagram d = looped_band(m);
        REQUIRE_FALSE(has_kink_pair(d));
        // add m kinks of the opposite sign on the same edge
        RibbonDiagram u = insert_kinks(d, 0, m, -1);
        int steps = 0;
        while (has_kink_pair(u) && steps < 10) {
            u = apply(u, find_sites(u, MoveKind::CLMinus).front());
            ++steps;
        }
        CHECK(steps == m);
        CHECK(u.crossing_count() == 0);
        CHECK(validate(u) == validate(annulus()));
        CHECK(count_colorings(u, group_heap(cyclic_group(4))) == 16);
    }
}

TEST_CASE("IH on torus keeps Z3 counts") {
    auto z3 = group_heap(cyclic_group(3));
    for (int k = 1; k <= 3; ++k) {
        RibbonDiagram t = torus_T1(k);
        auto n = count_colorings(t, z3);
        auto sites = find_sites(t, MoveKind::IH);
        REQUIRE_FALSE(sites.empty());
        for (const auto &s : sites)
            CHECK(count_colorings(apply(t, s), z3) == n);
    }
}

TEST_CASE("stale sites are rejected") {
    RibbonDiagram t = torus_T1(1);
    auto s = find_sites(t, MoveKind::IH).front();
    RibbonDiagram u = apply(t, find_sites(t, MoveKind::CLPlus).front());
    auto again = find_sites(u, MoveKind::IH);
    if (std::find(again.begin(), again.end(), s) == again.end())
        CHECK_THROWS_AS(apply(u, s), Error);
    MoveSite bogus{MoveKind::RIIMinus, {0, 1}, {}, -1, 0};
    CHECK_THROWS_AS(apply(annulus(), bogus), Error);
}

TEST_CASE("every move kind keeps the fingerprint") {
    std::map<MoveKind, int> applied;
    // samples plus one bigon each, so the shrinking kinds have somewhere to act
    auto starts = samples();
    for (const auto &d : samples())
        for (const auto &s : find_sites(d, MoveKind::RIIPlus))
            if (s.ports.size() == 2) {
                starts.push_back(apply(d, s));
                break;
            }
    for (auto d : starts) {
        Fingerprint base = fingerprint(d);
        for (auto k : all_move_kinds) {
            auto sites = find_sites(d, k);
            for (std::size_t i = 0; i < sites.size() && i < 6; ++i) {
                RibbonDiagram u = apply(d, sites[i]);
                CAPTURE(move_name(k));
                CHECK_NOTHROW(u.check_links());
                CHECK(is_planar(u));
                CHECK(fingerprint(u) == base);
                ++applied[k];
            }
        }
    }
    // kinds that need a richer start are reached by the fuzz test
    CHECK(applied[MoveKind::RIIPlus] > 0);
    CHECK(applied[MoveKind::CLPlus] > 0);
    CHECK(applied[MoveKind::IH] > 0);
    CHECK(applied[MoveKind::RIIMinus] > 0);
}

TEST_CASE("fuzz contract") {
    RibbonDiagram r = three_annuli_chain();
    auto same = fuzz(r, 9, 30);
    auto again = fuzz(r, 9, 30);
    CHECK(same.trace == again.trace);
    CHECK(same.diagram == again.diagram);
    CHECK(fuzz(r, 10, 30).trace != same.trace);
    auto zero = fuzz(r, 4, 0);
    CHECK(zero.diagram == r);
    CHECK(zero.trace.empty());
    auto z3 = group_heap(cyclic_group(3));
    CHECK(count_colorings(fuzz(r, 42, 50).diagram, z3) == count_colorings(r, z3));
}

TEST_CASE("fuzz respects the edge cap") {
    FuzzOptions opt;
    opt.max_edges = 30;
    opt.kinds = {MoveKind::RIIPlus, MoveKind::CLPlus};
    auto r = fuzz(annulus(), 3, 200, opt);
    CHECK(r.diagram.edge_count() <= 30 + 8);
}

TEST_CASE("property: fuzz keeps the fingerprint step by step") {
    std::map<std::string, int> used;
    for (auto d : samples()) {
        Fingerprint base = fingerprint(d);
        for (std::uint64_t seed : {1, 2}) {
            RibbonDiagram cur = d;
            FuzzOptions opt;
            opt.max_edges = 60;
            for (int step = 0; step < 40; ++step) {
                auto r = fuzz(cur, seed * 1000 + step, 1, opt);
                for (const auto &line : r.trace)
                    ++used[line.substr(0, line.find(' '))];
                cur = r.diagram;
                CHECK(is_planar(cur));
                CHECK(validate(cur) == base.summary);
            }
            CHECK(fingerprint(cur) == base);
        }
    }
    for (auto k : all_move_kinds) {
        CAPTURE(move_name(k));
        CHECK(used[move_name(k)] > 0);
    }
}
