#include "sr/acceptance.hpp"

#include "sr/builders.hpp"
#include "sr/cocycle.hpp"
#include "sr/coloring.hpp"
#include "sr/error.hpp"
#include "sr/moves.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace sr {

std::uint64_t count_homs_bruteforce(const GroupPresentation &p, const FiniteGroup &g) {
    const int r = p.rank();
    std::vector<std::vector<const Word *>> due(r);
    for (const auto &w : p.relators) {
        int last = -1;
        for (int l : w)
            last = std::max(last, std::abs(l) - 1);
        if (last < 0)
            continue;
        due[last].push_back(&w);
    }
    std::vector<int> val(r, g.identity);
    auto holds = [&](const Word &w) {
        int acc = g.identity;
        for (int l : w) {
            int x = val[std::abs(l) - 1];
            acc = g.mul(acc, l > 0 ? x : g.inv(x));
        }
        return acc == g.identity;
    };
    std::uint64_t n = 0;
    std::function<void(int)> go = [&](int i) {
        if (i == r) {
            ++n;
            return;
        }
        for (int x = 0; x < g.order; ++x) {
            val[i] = x;
            bool ok = true;
            for (const Word *w : due[i])
                if (!holds(*w)) {
                    ok = false;
                    break;
                }
            if (ok)
                go(i + 1);
        }
    };
    go(0);
    return n;
}

std::vector<std::pair<std::string, FiniteGroup>> small_groups() {
    std::vector<std::vector<int>> klein(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            klein[a][b] = a ^ b;
    return {{"Z2", cyclic_group(2)},
            {"Z3", cyclic_group(3)},
            {"Z4", cyclic_group(4)},
            {"Z2xZ2", FiniteGroup::from_table(klein)}};
}

std::vector<std::pair<std::string, RibbonDiagram>> load_corpus(const std::string &dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (!fs::is_directory(dir))
        throw Error("corpus directory not found: " + dir);
    for (const auto &e : fs::directory_iterator(dir))
        if (e.path().extension() == ".srd")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, RibbonDiagram>> out;
    for (const auto &f : files)
        out.emplace_back(f.stem().string(), read_srd(f.string()));
    return out;
}

namespace {

struct Row {
    std::ostringstream note;
    bool ok = true;

    void fail(const std::string &s) {
        if (!ok)
            note << "; ";
        else
            note.str("");
        ok = false;
        note << s;
    }
    void info(const std::string &s) {
        if (ok) {
            if (!note.str().empty())
                note << "; ";
            note << s;
        }
    }
};

AbelianInvariants simplified_ab(const RibbonDiagram &d) {
    return abelianization(tietze_simplify(fundamental_presentation(d)));
}

// Divisibility chain of a direct sum of cyclic groups, via prime powers.
AbelianInvariants chain_form(int free_rank, const std::vector<std::int64_t> &orders) {
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
    for (std::int64_t m : orders) {
        if (m == 0) {
            ++free_rank;
            continue;
        }
        for (std::int64_t p = 2; m > 1; ++p) {
            std::int64_t q = 1;
            while (m % p == 0) {
                m /= p;
                q *= p;
            }
            if (q > 1)
                by_prime[p].push_back(q);
        }
    }
    std::size_t len = 0;
    for (auto &[p, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        len = std::max(len, v.size());
    }
    std::vector<std::int64_t> t(len, 1);
    for (auto &[p, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i)
            t[len - 1 - i] *= v[i];
    AbelianInvariants a;
    a.free_rank = free_rank;
    for (auto x : t)
        if (x > 1)
            a.torsion.push_back(x);
    return a;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

Term trivial_term(const BoundaryStructure &bs) {
    Term t(bs.surfaces);
    for (const auto &c : bs.components)
        t[c.surface].push_back(0);
    return t;
}

CriterionResult criterion1() {
    Row row;
    RibbonDiagram d = three_annuli_chain();
    BoundaryStructure bs = boundary(d);
    std::vector<std::set<int>> touches(bs.surfaces);
    for (const auto &c : bs.crossings)
        if (c.over_surface >= 0 && c.over_surface != c.under_surface) {
            touches[c.over_surface].insert(c.under_surface);
            touches[c.under_surface].insert(c.over_surface);
        }
    int mid = -1;
    for (int s = 0; s < bs.surfaces; ++s)
        if (touches[s].size() == 2)
            mid = s;
    if (bs.surfaces != 3 || mid < 0) {
        row.fail("three_annuli_chain is not a chain of three surfaces");
        return {"1", "three-annuli invariant", false, row.note.str()};
    }
    for (int n : {3, 5}) {
        auto start = std::chrono::steady_clock::now();
        HeapPtr x = cyclic_heap(n);
        CoeffPtr a = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n));
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Cochain2> cs(3, zero_cochain(x, a));
        cs[mid == 0 ? 1 : 0] = phi_vec(idx);
        InvariantValue got = cocycle_invariant(bs, Decoration(cs));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        InvariantValue want, mirrored;
        for (int i = 0; i < n; ++i) {
            Term t(3, std::vector<int>{0, 0});
            t[mid] = {i, i};
            want.add(t, ipow(n, 3));
            t[mid] = {std::min(i, (n - i) % n), std::max(i, (n - i) % n)};
            mirrored.add(t, ipow(n, 3));
        }
        std::uint64_t count = count_colorings(bs, *x);
        std::string tag = "n=" + std::to_string(n) + ": ";
        if (count != ipow(n, 4))
            row.fail(tag + "count " + std::to_string(count) + " != n^4");
        if (secs >= 5)
            row.fail(tag + "took " + std::to_string(secs) + "s");
        if (got != want) {
            std::string how = got == mirrored ? "computed n^3 sum_i (g^i ⊗ g^-i) ⊗ e^⊗4"
                                              : "computed " + std::to_string(got.terms.size()) + " terms";
            row.fail(tag + "expected n^3 sum_i (g^i)^⊗2 ⊗ e^⊗4, " + how);
        }
    }
    row.info("n=3,5 match term for term");
    return {"1", "three-annuli invariant", row.ok, row.note.str()};
}

CriterionResult criterion2() {
    Row row;
    std::mt19937 rng(7);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 2}}) {
        RibbonDiagram d = trivial_band_closure(m, n);
        BoundaryStructure bs = boundary(d);
        std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ") ";
        AbelianInvariants ab = simplified_ab(d);
        if (ab != AbelianInvariants{m + n + 1, {}})
            row.fail(tag + "abelianization " + ab.to_string());
        if (bs.surfaces != 1 || static_cast<int>(bs.components.size()) != m + 1) {
            row.fail(tag + "expected one surface with m+1 boundary components");
            continue;
        }
        for (int q : {2, 3}) {
            HeapPtr x = cyclic_heap(q);
            CoeffPtr a = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(q));
            std::uint64_t want_count = ipow(q, m + n + 1);
            std::uint64_t count = count_colorings(bs, *x);
            if (count != want_count)
                row.fail(tag + "|X|=" + std::to_string(q) + " count " + std::to_string(count));
            std::vector<int> idx(q), f(q);
            std::iota(idx.begin(), idx.end(), 0);
            for (int &v : f)
                v = static_cast<int>(rng() % q);
            std::vector<Cochain2> decs{zero_cochain(x, a), phi_vec(idx), coboundary(x, a, f)};
            if (q == 3)
                decs.push_back(ring_cocycle(3, 2, 1));
            InvariantValue want;
            want.add(trivial_term(bs), want_count);
            for (const auto &c : decs)
                if (cocycle_invariant(bs, Decoration({c})) != want)
                    row.fail(tag + "|X|=" + std::to_string(q) + " invariant differs from |X|^(m+n+1) e^⊗(m+1)");
        }
    }
    row.info("3 closures × |X|∈{2,3} × 3-4 decorations");
    return {"2", "trivial bands", row.ok, row.note.str()};
}

// Elements of g of order dividing m.
std::uint64_t roots(const FiniteGroup &g, int m) {
    std::uint64_t n = 0;
    for (int x = 0; x < g.order; ++x) {
        int p = g.identity;
        for (int i = 0; i < m; ++i)
            p = g.mul(p, x);
        n += p == g.identity;
    }
    return n;
}

CriterionResult criterion3() {
    Row row;
    for (int m : {2, 3, 4}) {
        AbelianInvariants ab = simplified_ab(looped_band(m));
        if (ab != chain_form(1, {m}))
            row.fail("looped_band(" + std::to_string(m) + ") abelianizes to " + ab.to_string());
    }
    struct Multi {
        std::vector<int> twists;
        int k;
    };
    std::vector<Multi> multi{{{2, 3}, 1}, {{2, 4}, 0}, {{2}, 0}, {{3}, 0}, {{2, 2}, 0}, {{2, 3, 4}, 0}};
    int sigma_ok = 0, pi_ok = 0, cases = 0;
    auto groups = small_groups();
    groups.emplace_back("D3", dihedral_group(3));
    for (const auto &mh : multi) {
        RibbonDiagram d = punctured_disk(mh.twists, mh.k);
        std::string tag = "punctured_disk(";
        for (std::size_t i = 0; i < mh.twists.size(); ++i)
            tag += (i ? "," : "") + std::to_string(mh.twists[i]);
        tag += ";" + std::to_string(mh.k) + ") ";
        if (mh.twists.size() == 2 && (mh.k == 1 || mh.twists[1] == 4)) {
            std::vector<std::int64_t> ord(mh.twists.begin(), mh.twists.end());
            AbelianInvariants ab = simplified_ab(d);
            if (ab != chain_form(mh.k + 1, ord))
                row.fail(tag + "abelianizes to " + ab.to_string());
        }
        GroupPresentation raw = fundamental_presentation(d);
        for (const auto &[name, g] : groups) {
            std::uint64_t brute = count_homs_bruteforce(raw, g);
            std::uint64_t count = count_colorings(d, FiniteHeap::of_group(g));
            if (brute != count)
                row.fail(tag + name + ": count " + std::to_string(count) + " != brute force " + std::to_string(brute));
            std::uint64_t sigma = 0, pi = 1;
            for (int t : mh.twists) {
                sigma += roots(g, t);
                pi *= roots(g, t);
            }
            sigma *= g.order;
            pi *= ipow(g.order, mh.k + 1);
            ++cases;
            sigma_ok += sigma == brute;
            pi_ok += pi == brute;
        }
    }
    row.info("multi-handle counts = brute force in " + std::to_string(cases) + " cases; |X|^(k+1)·prod d_j matches " +
             std::to_string(pi_ok) + ", |X|·sum d_j matches " + std::to_string(sigma_ok));
    return {"3", "looped bands", row.ok, row.note.str()};
}

CriterionResult criterion4() {
    Row row;
    for (int k : {1, 2, 3}) {
        RibbonDiagram d = torus_T1(k);
        AbelianInvariants ab = simplified_ab(d);
        AbelianInvariants want = chain_form(1, {k + 1, k});
        std::string tag = "T1(" + std::to_string(k) + ") ";
        if (ab != want)
            row.fail(tag + "abelianizes to " + ab.to_string() + ", expected " + want.to_string());
        TopologySummary s = validate(d);
        if (s.nu() != 1 || s.total_genus() != 1 || s.total_boundaries() != 1)
            row.fail(tag + "(nu,g,b) != (1,1,1)");
    }
    row.info("k=1,2,3");
    return {"4", "torus T1(k)", row.ok, row.note.str()};
}

bool additive_sequence(const std::vector<int> &a, int n) {
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (a[(k + l) % n] != (a[k] + a[l]) % n)
                return false;
    return true;
}

CriterionResult criterion5() {
    Row row;
    for (int dihedral = 0; dihedral < 2; ++dihedral) {
        int vectors = 0, agree = 0;
        for (int n = 2; n <= 5; ++n) {
            std::vector<int> a(n, 0);
            for (;;) {
                Cochain2 c = dihedral ? psi_vec(a) : phi_vec(a);
                ++vectors;
                agree += check_cocycle_conditions(c).is_ra() == additive_sequence(a, n);
                int i = 1;
                while (i < n && ++a[i] == n)
                    a[i++] = 0;
                if (i == n)
                    break;
            }
        }
        std::string what = dihedral ? "psi_a on D_n" : "phi_a on Z_n";
        if (agree != vectors)
            row.fail("(a) " + what + ": RA iff additive sequence holds for " + std::to_string(agree) + "/" +
                     std::to_string(vectors) + " vectors");
        else
            row.info("(a) " + what + " " + std::to_string(vectors) + " vectors");
    }
    for (int n = 2; n <= 8; ++n)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (check_cocycle_conditions(ring_cocycle(n, a, b)).is_ra() != (a == (2 * b) % n))
                    row.fail("(b) n=" + std::to_string(n) + " (a,b)=(" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
    for (int n = 2; n <= 8; ++n)
        for (int b = 0; b < n; ++b)
            for (int e = 0; e < n; ++e) {
                bool md = is_mutually_distributive(ring_cocycle(n, 2 * b % n, b), ring_cocycle(n, 2 * e % n, e));
                if (md != ((2 * (b - e)) % n == 0))
                    row.fail("(c) n=" + std::to_string(n) + " b=" + std::to_string(b) + " d=" + std::to_string(e));
            }
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            auto p = check_cocycle_conditions(phi_i(n, i));
            auto q = check_cocycle_conditions(psi_i_dihedral(n, i));
            if (!p.is_cocycle() || !p.is_nondegenerate() || !p.is_separable())
                row.fail("(d) phi_" + std::to_string(i) + " on Z" + std::to_string(n));
            if (!q.is_cocycle() || !q.is_nondegenerate())
                row.fail("(d) psi_" + std::to_string(i) + " on D" + std::to_string(n));
        }
    row.info("(b),(c) n<=8, (d) n<=5");
    return {"5", "cocycle lemmas", row.ok, row.note.str()};
}

CriterionResult criterion6(const std::vector<std::pair<std::string, RibbonDiagram>> &corpus) {
    Row row;
    std::mt19937 rng(20);
    CoeffPtr a = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(3));
    int checks = 0;
    for (HeapPtr x : {cyclic_heap(3), dihedral_heap(3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> f(x->size());
            for (int &v : f)
                v = static_cast<int>(rng() % 3);
            Cochain2 df = coboundary(x, a, f);
            for (const auto &[name, d] : corpus) {
                BoundaryStructure bs = boundary(d);
                InvariantValue want;
                want.add(trivial_term(bs), count_colorings(bs, *x));
                ++checks;
                if (cocycle_invariant(bs, Decoration(std::vector<Cochain2>(bs.surfaces, df))) != want)
                    row.fail(name + " |X|=" + std::to_string(x->size()) + " trial " + std::to_string(trial));
            }
        }
    }
    row.info(std::to_string(checks) + " invariants");
    return {"6", "coboundary triviality", row.ok, row.note.str()};
}

struct Fingerprint {
    TopologySummary summary;
    std::vector<std::uint64_t> counts;
    std::vector<InvariantValue> invariants;
    bool operator==(const Fingerprint &) const = default;
};

Fingerprint fingerprint(const RibbonDiagram &d, const std::vector<FiniteHeap> &heaps) {
    Fingerprint fp;
    fp.summary = validate(d);
    BoundaryStructure bs = boundary(d);
    for (const auto &h : heaps)
        fp.counts.push_back(count_colorings(bs, h));
    CoeffPtr a = std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(3));
    HeapPtr z3 = cyclic_heap(3);
    HeapPtr d3 = dihedral_heap(3);
    fp.invariants.push_back(cocycle_invariant(bs, Decoration(std::vector<Cochain2>(bs.surfaces, phi_vec({0, 1, 2})))));
    fp.invariants.push_back(
        cocycle_invariant(bs, Decoration(std::vector<Cochain2>(bs.surfaces, ring_cocycle(3, 2, 1)))));
    fp.invariants.push_back(cocycle_invariant(
        bs, Decoration(std::vector<Cochain2>(bs.surfaces, coboundary(d3, a, {0, 1, 2, 0, 2, 1})))));
    return fp;
}

CriterionResult criterion7(const std::vector<std::pair<std::string, RibbonDiagram>> &corpus) {
    Row row;
    auto start = std::chrono::steady_clock::now();
    std::vector<FiniteHeap> heaps;
    for (const auto &[name, g] : small_groups())
        heaps.push_back(FiniteHeap::of_group(g));
    int runs = 0;
    std::map<std::string, int> used;
    for (const auto &[name, d] : corpus) {
        Fingerprint before = fingerprint(d, heaps);
        for (std::uint64_t seed : {1, 2, 3}) {
            FuzzResult r = fuzz(d, seed, 100);
            ++runs;
            for (const auto &line : r.trace)
                ++used[line.substr(0, line.find(' '))];
            if (!is_planar(r.diagram))
                row.fail(name + " seed " + std::to_string(seed) + ": result not planar");
            if (fingerprint(r.diagram, heaps) != before)
                row.fail(name + " seed " + std::to_string(seed) + ": fingerprint changed");
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60)
        row.fail("took " + std::to_string(secs) + "s");
    std::string kinds;
    for (const auto &[k, c] : used)
        kinds += " " + k + ":" + std::to_string(c);
    row.info(std::to_string(runs) + " runs ×100 moves;" + kinds);
    return {"7", "move-invariance fuzz", row.ok, row.note.str()};
}

CriterionResult criterion8() {
    Row row;
    RibbonDiagram d = torus_T1(1);
    std::vector<PortRef> starts;
    for (const auto &e : edges(d))
        if (e.loop < 0 && (d.nodes[e.a.node].kind == NodeKind::Crossing || d.nodes[e.b.node].kind == NodeKind::Crossing))
            starts.push_back(e.a);
    for (PortRef p : starts) {
        auto es = edges(d);
        int idx = -1;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i].loop < 0 && (es[i].a == p || es[i].b == p))
                idx = static_cast<int>(i);
        if (idx < 0)
            throw Error("stabilization lost an edge");
        d = stabilize(d, idx);
    }
    GroupPresentation s = tietze_simplify(fundamental_presentation(d));
    if (!s.relators.empty())
        row.fail(std::to_string(s.relators.size()) + " relators remain after Tietze");
    for (int q : {2, 3}) {
        std::uint64_t c = count_colorings(d, *cyclic_heap(q));
        if (c != ipow(q, s.rank()))
            row.fail("|X|=" + std::to_string(q) + " count " + std::to_string(c) + " != |X|^" + std::to_string(s.rank()));
    }
    if (!is_planar(d))
        row.fail("stabilized diagram not planar");
    row.info(std::to_string(starts.size()) + " crossing edges stabilized, free of rank " + std::to_string(s.rank()));
    return {"8", "stabilization", row.ok, row.note.str()};
}

CriterionResult criterion9() {
    Row row;
    std::vector<std::string> texts{"gens: a\nrel: a a a\n", "gens: a b\nrel: a b a B A B\n",
                                   "gens: a b\nrel: a b A B\n", "gens: a b\nrel: a b a b\n",
                                   "gens: a b\nrel: a a\nrel: b b b\n"};
    for (const auto &t : texts) {
        GroupPresentation p = parse_presentation(t);
        Realization r = realize_group(p);
        std::string tag = "<" + p.to_text() + "> ";
        std::replace(tag.begin(), tag.end(), '\n', ' ');
        int k = p.rank() + static_cast<int>(p.relators.size()) + 1;
        if (r.k != k)
            row.fail(tag + "k=" + std::to_string(r.k));
        AbelianInvariants g = abelianization(p);
        AbelianInvariants want{k + g.free_rank, g.torsion};
        AbelianInvariants got = simplified_ab(r.diagram);
        if (got != want)
            row.fail(tag + "abelianizes to " + got.to_string() + ", expected " + want.to_string());
        if (!is_planar(r.diagram))
            row.fail(tag + "not planar");
    }
    AbelianInvariants a3 = simplified_ab(realize_group(parse_presentation(texts[0])).diagram);
    if (a3 != AbelianInvariants{3, {3}})
        row.fail("<a | a^3> abelianizes to " + a3.to_string());
    row.info(std::to_string(texts.size()) + " presentations");
    return {"9", "realization", row.ok, row.note.str()};
}

CriterionResult criterion10(const std::vector<std::pair<std::string, RibbonDiagram>> &corpus) {
    Row row;
    int checks = 0;
    for (const auto &[name, d] : corpus) {
        BoundaryStructure bs = boundary(d);
        GroupPresentation raw = fundamental_presentation(bs);
        for (const auto &[gname, g] : small_groups()) {
            std::uint64_t brute = count_homs_bruteforce(raw, g);
            std::uint64_t count = count_colorings(bs, FiniteHeap::of_group(g));
            ++checks;
            if (brute != count)
                row.fail(name + " " + gname + ": " + std::to_string(count) + " != " + std::to_string(brute));
        }
    }
    row.info(std::to_string(checks) + " (diagram, group) pairs");
    return {"10", "cross-oracle", row.ok, row.note.str()};
}

} // namespace

CriterionResult run_criterion(int n, const std::string &corpus_dir) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    auto corpus = [&] { return load_corpus(corpus_dir); };
    switch (n) {
    case 1: r = criterion1(); break;
    case 2: r = criterion2(); break;
    case 3: r = criterion3(); break;
    case 4: r = criterion4(); break;
    case 5: r = criterion5(); break;
    case 6: r = criterion6(corpus()); break;
    case 7: r = criterion7(corpus()); break;
    case 8: r = criterion8(); break;
    case 9: r = criterion9(); break;
    case 10: r = criterion10(corpus()); break;
    default: throw Error("no criterion " + std::to_string(n));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const std::string &corpus_dir) {
    std::vector<CriterionResult> out;
    for (int n = 1; n <= 10; ++n)
        out.push_back(run_criterion(n, corpus_dir));
    return out;
}

std::string format_row(const CriterionResult &r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << (r.id.size() < 2 ? "  " : " ") << r.title << "  ("
       << r.detail;
    os.precision(2);
    os << std::fixed << ", " << r.seconds << "s)";
    return os.str();
}

} // namespace sr
