#include "sr/acceptance.hpp"
#include "sr/builders.hpp"
#include "sr/error.hpp"
#include "sr/moves.hpp"
#include "sr/presentation.hpp"

#include "doctest.h"

#include <random>

using namespace sr;

namespace {

AbelianInvariants simplified_ab(const RibbonDiagram &d) {
    return abelianization(tietze_simplify(fundamental_presentation(d)));
}

// Hand-rolled generator: random relators over r generators.
GroupPresentation random_presentation(std::mt19937 &rng, int r, int rels, int len) {
    GroupPresentation p;
    for (int i = 0; i < r; ++i)
        p.generators.push_back(default_generator_name(i));
    for (int k = 0; k < rels; ++k) {
        Word w;
        int l = 1 + static_cast<int>(rng() % len);
        for (int i = 0; i < l; ++i) {
            int g = 1 + static_cast<int>(rng() % r);
            w.push_back(rng() % 2 ? g : -g);
        }
        p.relators.push_back(w);
    }
    return p;
}

// Determinant-free check: order of the finite abelian group is the product of invariant factors.
std::int64_t torsion_order(const AbelianInvariants &a) {
    std::int64_t n = 1;
    for (auto t : a.torsion)
        n *= t;
    return n;
}

} // namespace

TEST_CASE("words") {
    CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
    CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
    CHECK(inverse({1, -2}) == Word{2, -1});
}

TEST_CASE("parse presentations") {
    GroupPresentation p = parse_presentation("gens: a b\nrel: a b A B\n# note\nrel: a a\n");
    CHECK(p.rank() == 2);
    CHECK(p.relators.size() == 2);
    CHECK(p.relators[0] == Word{1, 2, -1, -2});
    CHECK(parse_presentation(p.to_text()).relators == p.relators);
    auto where = [](const std::string &t) {
        try {
            parse_presentation(t);
        } catch (const ParseError &e) {
            return std::pair{e.line(), e.column()};
        }
        return std::pair{0, 0};
    };
    CHECK(where("rel: a\n").first == 1);
    CHECK(where("gens: a\nrel: a 3\n") == std::pair{2, 8});
    CHECK(where("gens: a\nrel: b\n").first == 2);
    CHECK(where("gens: a\nfoo\n").first == 2);
}

TEST_CASE("fundamental presentation examples") {
    GroupPresentation a = fundamental_presentation(annulus());
    CHECK(a.rank() == 2);
    CHECK(a.relators.empty());
    for (int m = 1; m <= 5; ++m) {
        auto s = split_free_factor(tietze_simplify(fundamental_presentation(looped_band(m))));
        CHECK(s.count == 1);
        CHECK(abelianization(s.reduced) == AbelianInvariants{0, m > 1 ? std::vector<std::int64_t>{m}
                                                                        : std::vector<std::int64_t>{}});
        CHECK(s.reduced.rank() <= 1);
    }
    for (int k = 1; k <= 4; ++k) {
        // <y, α, β | α^{k+1} β^{-k}, (αβ)^{k+1} β^{-(k+1)}> has the same abelianization
        std::string rel1 = "rel:", rel2 = "rel:";
        for (int i = 0; i <= k; ++i)
            rel1 += " a";
        for (int i = 0; i < k; ++i)
            rel1 += " B";
        for (int i = 0; i <= k; ++i)
            rel2 += " a b";
        for (int i = 0; i <= k; ++i)
            rel2 += " B";
        auto model = parse_presentation("gens: y a b\n" + rel1 + "\n" + rel2 + "\n");
        CHECK(simplified_ab(torus_T1(k)) == abelianization(model));
    }
}

TEST_CASE("tietze examples") {
    auto p = parse_presentation("gens: x z u v\nrel: z V u X\nrel: u X\nrel: v X\n");
    auto s = tietze_simplify(p);
    CHECK(s.rank() == 1);
    CHECK(s.relators.empty());
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m + n == 0)
                continue;
            auto t = tietze_simplify(fundamental_presentation(trivial_band_closure(m, n)));
            CHECK(t.relators.empty());
            CHECK(t.rank() == m + n + 1);
        }
}

TEST_CASE("abelianization examples") {
    CHECK(abelianization(parse_presentation("gens: a b c\n")) == AbelianInvariants{3, {}});
    CHECK(simplified_ab(torus_T1(2)) == AbelianInvariants{1, {6}});
    CHECK(simplified_ab(punctured_disk({2, 3}, 1)) == AbelianInvariants{2, {6}});
    CHECK(simplified_ab(punctured_disk({2, 4}, 0)) == AbelianInvariants{1, {2, 4}});
    CHECK(abelianization(parse_presentation("gens: a b\nrel: a a b b b b b b\nrel: a a a a b b b b\n")) ==
          AbelianInvariants{0, {2, 8}});
    CHECK(AbelianInvariants{1, {2, 6}}.to_string() == "Z + Z2 + Z6");
}

TEST_CASE("abelianization uses exact arithmetic") {
    // entries overflow 64 bits if eliminated naively
    std::string rel = "gens: a b\nrel:";
    for (int i = 0; i < 40; ++i)
        rel += " a";
    rel += "\nrel:";
    for (int i = 0; i < 39; ++i)
        rel += " a";
    rel += " b b\n";
    auto ab = abelianization(parse_presentation(rel));
    CHECK(ab.free_rank == 0);
    CHECK(torsion_order(ab) == 80);
}

TEST_CASE("split free factor examples") {
    CHECK(split_free_factor(fundamental_presentation(annulus())).count == 2);
    CHECK(split_free_factor(fundamental_presentation(disjoint_union(annulus(), annulus()))).count == 4);
}

TEST_CASE("property: abelianization survives Tietze simplification") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_presentation(rng, 1 + trial % 4, trial % 4, 6);
        CHECK(abelianization(tietze_simplify(p)) == abelianization(p));
    }
}

TEST_CASE("property: homomorphism counts survive Tietze simplification") {
    std::mt19937 rng(37);
    auto groups = small_groups();
    groups.emplace_back("D3", dihedral_group(3));
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_presentation(rng, 1 + trial % 3, 1 + trial % 3, 5);
        auto s = tietze_simplify(p);
        for (const auto &[name, g] : groups)
            CHECK(count_homs_bruteforce(s, g) == count_homs_bruteforce(p, g));
    }
}

TEST_CASE("property: abelianization is invariant under moves") {
    for (auto d : {looped_band(3), torus_T1(1), three_annuli_chain(), punctured_disk({2, 3}, 1)}) {
        auto ab = simplified_ab(d);
        for (std::uint64_t seed : {5, 6})
            CHECK(simplified_ab(fuzz(d, seed, 40).diagram) == ab);
    }
}

TEST_CASE("property: free factors at least nu") {
    auto corpus = load_corpus(SR_CORPUS_DIR);
    REQUIRE_FALSE(corpus.empty());
    for (const auto &[name, d] : corpus) {
        CAPTURE(name);
        CHECK(split_free_factor(tietze_simplify(fundamental_presentation(d))).count >= validate(d).nu());
    }
}

TEST_CASE("property: disjoint union abelianizes to the direct sum") {
    std::vector<RibbonDiagram> parts{annulus(), looped_band(2), torus_T1(1), punctured_disk({3}, 0)};
    for (const auto &a : parts)
        for (const auto &b : parts) {
            auto x = simplified_ab(a), y = simplified_ab(b), u = simplified_ab(disjoint_union(a, b));
            CHECK(u.free_rank == x.free_rank + y.free_rank);
            CHECK(torsion_order(u) == torsion_order(x) * torsion_order(y));
        }
}
