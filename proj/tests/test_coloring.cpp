#include "sr/acceptance.hpp"
#include "sr/builders.hpp"
#include "sr/cocycle.hpp"
#include "sr/coloring.hpp"
#include "sr/error.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace sr;

namespace {

CoeffPtr zn(int n) { return std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n)); }

std::vector<int> iota_vec(int n) {
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 0);
    return a;
}

Term trivial_term(const BoundaryStructure &bs) {
    Term t(bs.surfaces);
    for (const auto &c : bs.components)
        t[c.surface].push_back(0);
    return t;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b ? gcd(b, a % b) : a; }

} // namespace

TEST_CASE("coloring counts") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            if (m + n == 0)
                continue;
            for (int q : {2, 3, 4}) {
                std::uint64_t want = 1;
                for (int i = 0; i < m + n + 1; ++i)
                    want *= q;
                CHECK(count_colorings(trivial_band_closure(m, n), group_heap(cyclic_group(q))) == want);
            }
        }
    for (int n : {2, 3, 4, 5})
        CHECK(count_colorings(three_annuli_chain(), group_heap(cyclic_group(n))) ==
              static_cast<std::uint64_t>(n * n * n * n));
    for (int m = 1; m <= 5; ++m)
        for (int q = 2; q <= 6; ++q)
            CHECK(count_colorings(looped_band(m), group_heap(cyclic_group(q))) == q * gcd(m, q));
    for (int q = 1; q <= 5; ++q)
        CHECK(count_colorings(annulus(), group_heap(cyclic_group(q))) == static_cast<std::uint64_t>(q * q));
    auto z3 = group_heap(cyclic_group(3));
    CHECK(count_colorings(hopf_annuli(), z3) == count_homs_bruteforce(fundamental_presentation(hopf_annuli()),
                                                                     cyclic_group(3)));
}

TEST_CASE("enumerated colorings satisfy every relation") {
    auto d3 = group_heap(dihedral_group(3));
    for (auto d : {torus_T1(1), three_annuli_chain(), looped_band(3)}) {
        auto bs = boundary(d);
        auto all = enumerate_colorings(d, d3);
        CHECK(all.size() == count_colorings(bs, d3));
        for (const auto &c : all)
            CHECK(is_coloring(bs, d3, c));
        std::sort(all.begin(), all.end());
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}

TEST_CASE("boltzmann examples") {
    auto bs = boundary(annulus());
    Decoration dec({phi_vec(iota_vec(3))});
    for (int b = 0; b < 2; ++b)
        CHECK(boltzmann(bs, {1, 2}, b, dec) == 0);

    // middle annulus of the chain: the weight is φ evaluated on the overpassing colours
    RibbonDiagram r = three_annuli_chain();
    auto rb = boundary(r);
    Decoration phi_on_s2({zero_cochain(cyclic_heap(3), zn(3)), phi_vec(iota_vec(3)),
                          zero_cochain(cyclic_heap(3), zn(3))});
    for_each_coloring(rb, group_heap(cyclic_group(3)), [&](const Coloring &c) {
        for (int b = 0; b < static_cast<int>(rb.components.size()); ++b) {
            const auto &comp = rb.components[b];
            if (comp.surface == 1)
                CHECK(boltzmann(rb, c, b, phi_on_s2) == 0);
            int sum = 0;
            for (const auto &ev : comp.events) {
                const auto &k = rb.crossings[rb.crossing_index[ev.crossing]];
                if (k.over_surface == 1)
                    sum += ev.along_under ? (c[k.v] - c[k.u] + 3) % 3 : (c[k.u] - c[k.v] + 3) % 3;
            }
            CHECK(boltzmann(rb, c, b, phi_on_s2) == sum % 3);
        }
        return true;
    });
}

TEST_CASE("three-annuli invariant") {
    // the two boundary curves of S1 carry g^i and g^-i
    for (int n : {3, 5}) {
        auto x = cyclic_heap(n);
        Decoration dec({zero_cochain(x, zn(n)), phi_vec(iota_vec(n)), zero_cochain(x, zn(n))});
        InvariantValue v = cocycle_invariant(three_annuli_chain(), dec);
        InvariantValue want;
        for (int i = 0; i < n; ++i) {
            int j = (n - i) % n;
            want.add({{std::min(i, j), std::max(i, j)}, {0, 0}, {0, 0}}, n * n * n);
        }
        CHECK(v == want);
        CHECK(v.total() == static_cast<std::uint64_t>(n * n * n * n));
    }
}

TEST_CASE("trivial bands give the trivial tensor") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 2}, {1, 2}}) {
        auto d = trivial_band_closure(m, n);
        auto bs = boundary(d);
        for (int q : {2, 3}) {
            std::uint64_t total = 1;
            for (int i = 0; i < m + n + 1; ++i)
                total *= q;
            InvariantValue want;
            want.add({std::vector<int>(m + 1, 0)}, total);
            CHECK(cocycle_invariant(bs, Decoration({phi_vec(iota_vec(q))})) == want);
            CHECK(cocycle_invariant(bs, Decoration({coboundary(cyclic_heap(q), zn(q), iota_vec(q))})) == want);
        }
    }
}

TEST_CASE("decorations are checked") {
    auto d = three_annuli_chain();
    auto x = cyclic_heap(3);
    CHECK_THROWS_AS(cocycle_invariant(d, Decoration({phi_vec(iota_vec(3))})), Error);
    CHECK_THROWS_AS(Decoration({phi_i(3, 1)}), Error);
    CHECK_THROWS_AS(Decoration({ring_cocycle(4, 2, 1), ring_cocycle(4, 0, 0)}), Error);
    CHECK_THROWS_AS(Decoration({phi_vec(iota_vec(3)), phi_vec(iota_vec(4))}), Error);
    CHECK_THROWS_AS(Decoration(std::vector<Cochain2>{}), Error);
    CHECK_NOTHROW(Decoration({ring_cocycle(4, 2, 1), ring_cocycle(4, 2, 3)}));
}

TEST_CASE("invariant output formats") {
    auto x = cyclic_heap(3);
    Decoration dec({zero_cochain(x, zn(3)), phi_vec(iota_vec(3)), zero_cochain(x, zn(3))});
    InvariantValue v = cocycle_invariant(three_annuli_chain(), dec);
    CHECK(v.to_string(*zn(3)) ==
          "27 × [S1: (e,e)] [S2: (e,e)] [S3: (e,e)]\n54 × [S1: (g,g^2)] [S2: (e,e)] [S3: (e,e)]\n");
    CHECK(v.to_json_lines(*zn(3)) ==
          "{\"term\":{\"S1\":[\"e\",\"e\"],\"S2\":[\"e\",\"e\"],\"S3\":[\"e\",\"e\"]},\"mult\":27}\n"
          "{\"term\":{\"S1\":[\"g\",\"g^2\"],\"S2\":[\"e\",\"e\"],\"S3\":[\"e\",\"e\"]},\"mult\":54}\n");
}

TEST_CASE("property: coboundary decorations give the trivial tensor") {
    std::mt19937 rng(41);
    std::vector<RibbonDiagram> ds{torus_T1(1), three_annuli_chain(), looped_band(3), hopf_annuli(),
                                  punctured_disk({2, 3}, 1)};
    for (int trial = 0; trial < 12; ++trial) {
        HeapPtr x = trial % 2 ? dihedral_heap(3) : cyclic_heap(3 + trial % 3);
        CoeffPtr a = zn(2 + trial % 3);
        std::vector<int> f(x->size());
        for (int &v : f)
            v = static_cast<int>(rng() % a->order());
        Cochain2 df = coboundary(x, a, f);
        for (const auto &d : ds) {
            auto bs = boundary(d);
            InvariantValue want;
            want.add(trivial_term(bs), count_colorings(bs, *x));
            CHECK(cocycle_invariant(bs, Decoration(std::vector<Cochain2>(bs.surfaces, df))) == want);
        }
    }
}

TEST_CASE("property: cohomologous decorations give equal invariants") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + trial % 3;
        auto x = cyclic_heap(n);
        std::vector<int> f(n);
        for (int &v : f)
            v = static_cast<int>(rng() % n);
        Cochain2 df = coboundary(x, zn(n), f);
        Cochain2 phi = phi_vec(iota_vec(n));
        Cochain2 zero = zero_cochain(x, zn(n));
        Decoration base({zero, phi, zero});
        Decoration moved({zero + df, phi + df, zero + df});
        CHECK(cocycle_invariant(three_annuli_chain(), base) == cocycle_invariant(three_annuli_chain(), moved));
        auto t = torus_T1(1 + trial % 2);
        CHECK(cocycle_invariant(t, Decoration({phi})) == cocycle_invariant(t, Decoration({phi + df})));
    }
}

TEST_CASE("property: monochromatic bands") {
    // if both sides of a band agree somewhere they agree along the whole band
    for (auto d : {torus_T1(1), looped_band(2), trivial_band_closure(1, 1), three_annuli_chain()}) {
        auto bs = boundary(d);
        for_each_coloring(bs, group_heap(dihedral_group(3)), [&](const Coloring &c) {
            // an under-passage keeps the two sides equal or unequal
            for (std::size_t n = 0; n < d.nodes.size(); ++n) {
                if (d.nodes[n].kind != NodeKind::Crossing)
                    continue;
                int k = bs.crossing_index[n];
                const auto &cr = bs.crossings[k];
                CHECK((c[cr.x] == c[cr.y]) == (c[cr.z] == c[cr.w]));
            }
            return true;
        });
    }
}

TEST_CASE("property: base point independence") {
    auto d = three_annuli_chain();
    auto bs = boundary(d);
    auto x = cyclic_heap(5);
    Decoration dec({phi_vec(iota_vec(5)), phi_vec(iota_vec(5)), phi_vec(iota_vec(5))});
    BoundaryStructure rotated = bs;
    for (auto &c : rotated.components)
        if (!c.events.empty())
            std::rotate(c.events.begin(), c.events.begin() + 1, c.events.end());
    for_each_coloring(bs, *x, [&](const Coloring &c) {
        for (int b = 0; b < static_cast<int>(bs.components.size()); ++b)
            CHECK(boltzmann(bs, c, b, dec) == boltzmann(rotated, c, b, dec));
        return true;
    });
}

TEST_CASE("property: invariant multiplicities sum to the coloring count") {
    auto corpus = load_corpus(SR_CORPUS_DIR);
    for (const auto &[name, d] : corpus) {
        auto bs = boundary(d);
        for (int n : {2, 3}) {
            auto v = cocycle_invariant(bs, Decoration(std::vector<Cochain2>(bs.surfaces, phi_vec(iota_vec(n)))));
            CHECK(v.total() == count_colorings(bs, group_heap(cyclic_group(n))));
        }
    }
}

TEST_CASE("property: colorings match the raw presentation") {
    auto corpus = load_corpus(SR_CORPUS_DIR);
    auto groups = small_groups();
    groups.emplace_back("D3", dihedral_group(3));
    groups.emplace_back("Z5", cyclic_group(5));
    for (const auto &[name, d] : corpus) {
        auto raw = fundamental_presentation(d);
        for (const auto &[gname, g] : groups) {
            CAPTURE(name);
            CAPTURE(gname);
            CHECK(count_colorings(d, FiniteHeap::of_group(g)) == count_homs_bruteforce(raw, g));
        }
    }
}
