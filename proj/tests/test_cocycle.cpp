#include "sr/cocycle.hpp"
#include "sr/error.hpp"

#include "doctest.h"

#include <random>

using namespace sr;

namespace {

CoeffPtr zn(int n) { return std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n)); }

// Hand-rolled generator: uniform values in A for every heap element.
std::vector<int> random_f(std::mt19937 &rng, int size, int order) {
    std::vector<int> f(size);
    for (int &v : f)
        v = static_cast<int>(rng() % order);
    return f;
}

Cochain2 random_table(std::mt19937 &rng, const HeapPtr &x, const CoeffPtr &a) {
    Cochain2 c(x, a);
    for (int i = 0; i < x->size(); ++i)
        for (int j = 0; j < x->size(); ++j)
            for (int k = 0; k < x->size(); ++k)
                c.set(i, j, k, static_cast<int>(rng() % a->order()));
    return c;
}

// Brute-force evaluation of the 2-cocycle condition.
bool cocycle_oracle(const Cochain2 &p) {
    const auto &T = p.heap();
    const auto &A = p.coeffs();
    int n = p.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        int l = A.add(p(x, y, z), p(T(x, y, z), u, v));
                        int r = A.add(p(x, u, v), p(T(x, u, v), T(y, u, v), T(z, u, v)));
                        if (l != r)
                            return false;
                    }
    return true;
}

bool additive_sequence(const std::vector<int> &a) {
    int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (a[(k + l) % n] != (a[k] + a[l]) % n)
                return false;
    return true;
}

} // namespace

TEST_CASE("abelian coefficient groups") {
    AbelianGroup a({2, 3});
    CHECK(a.order() == 6);
    CHECK(a.decode(a.encode({1, 2})) == std::vector<int>{1, 2});
    CHECK(a.add(a.encode({1, 2}), a.encode({1, 2})) == a.encode({0, 1}));
    CHECK(a.neg(a.encode({1, 1})) == a.encode({1, 2}));
    CHECK(AbelianGroup::cyclic(3).name(0) == "e");
    CHECK(AbelianGroup::cyclic(3).name(1) == "g");
}

TEST_CASE("is_cocycle examples") {
    CHECK(is_cocycle(phi_i(3, 1)));
    CHECK(is_cocycle(zero_cochain(cyclic_heap(3), zn(3))));
    std::mt19937 rng(3);
    int nonzero = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Cochain2 c = random_table(rng, cyclic_heap(3), zn(3));
        if (c.is_zero())
            continue;
        ++nonzero;
        CHECK(is_cocycle(c) == cocycle_oracle(c));
        CHECK_FALSE(is_cocycle(c));
    }
    CHECK(nonzero > 0);
}

TEST_CASE("coboundary examples") {
    CHECK(coboundary(cyclic_heap(4), zn(3), {2, 2, 2, 2}).is_zero());
    Cochain2 d = coboundary(cyclic_heap(2), zn(2), {0, 1});
    CHECK(d(0, 0, 1) == zn(2)->neg(1));
    CHECK_THROWS_AS(coboundary(cyclic_heap(2), zn(2), {0}), Error);
}

TEST_CASE("phi_i and psi_i values") {
    Cochain2 p = phi_i(3, 1);
    for (int x = 0; x < 3; ++x) {
        CHECK(p(x, 1, 2) == 1);
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                CHECK(p(x, y, z) == ((z - y + 3) % 3 == 1 ? 1 : 0));
    }
    Cochain2 p2 = phi_i(5, 2);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z)
                CHECK(p2(x, y, z) == (z == (y + 2) % 5 ? 1 : 0));
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    CHECK(phi_i(n, i)(x, y, y) == 0);
    CHECK_THROWS_AS(phi_i(3, 0), Error);
    CHECK_THROWS_AS(phi_i(3, 3), Error);

    // D_3 indices: ζ^j = j, aζ^j = 3 + j.
    Cochain2 q = psi_i_dihedral(3, 1);
    for (int x = 0; x < 6; ++x) {
        CHECK(q(x, 3 + 2, 3 + 1) == 1);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                CHECK(q(x, j, 3 + k) == 0);
                CHECK(q(x, 3 + k, j) == 0);
            }
    }
    // indicator oracle for psi_i
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            Cochain2 s = psi_i_dihedral(n, i);
            for (int x = 0; x < 2 * n; ++x)
                for (int y = 0; y < 2 * n; ++y)
                    for (int z = 0; z < 2 * n; ++z) {
                        bool hit = false;
                        for (int j = 0; j < n; ++j) {
                            hit = hit || (y == j && z == (j + i) % n);
                            hit = hit || (y == n + (n - j) % n && z == n + ((2 * n - j - i) % n));
                        }
                        CHECK(s(x, y, z) == (hit ? 1 : 0));
                    }
        }
    CHECK(is_cocycle(psi_i_dihedral(4, 2)));
}

TEST_CASE("phi_vec and ring cocycle examples") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i)
            a[i] = i;
        auto r = check_cocycle_conditions(phi_vec(a));
        CHECK(r.is_reversible());
        CHECK(r.is_additive());
        CHECK(r.is_separable());
        CHECK(phi_vec(std::vector<int>(n, 0)).is_zero());
    }
    CHECK_FALSE(check_cocycle_conditions(phi_vec({0, 1, 0, 1})).is_additive());
    CHECK_THROWS_AS(phi_vec({1, 0}), Error);

    for (int n = 2; n <= 7; ++n)
        for (int b = 0; b < n; ++b) {
            CHECK(check_cocycle_conditions(ring_cocycle(n, 2 * b % n, b)).is_ra());
            Cochain2 c = ring_cocycle(n, 1, b);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    CHECK(c(x, y, y) == 0);
        }
    auto r = check_cocycle_conditions(ring_cocycle(5, 1, 0));
    CHECK_FALSE(r.is_additive());
    // direct search on psi(x,y,z) = x(z-y) mod 5
    auto psi = [](int x, int y, int z) { return (x * (((z - y) % 5 + 5) % 5)) % 5; };
    std::vector<int> first;
    for (int w = 0; w < 5 && first.empty(); ++w)
        for (int x = 0; x < 5 && first.empty(); ++x)
            for (int y = 0; y < 5 && first.empty(); ++y)
                for (int z = 0; z < 5 && first.empty(); ++z) {
                    int t = ((w - x + y) % 5 + 5) % 5;
                    if ((psi(w, x, y) + psi(t, y, z)) % 5 != psi(w, x, z))
                        first = {w, x, y, z};
                }
    CHECK(r.additive.witness == first);
    CHECK(first == std::vector<int>{0, 0, 1, 0});
    // the tuple (0,0,1,2) is a violation as well, just not the first one
    CHECK((psi(0, 0, 1) + psi(1, 1, 2)) % 5 != psi(0, 0, 2));
    CHECK_FALSE(check_cocycle_conditions(ring_cocycle(5, 1, 1)).is_ra());
}

TEST_CASE("zero cochain has every flag") {
    auto r = check_cocycle_conditions(zero_cochain(dihedral_heap(3), zn(4)));
    CHECK(r.is_cocycle());
    CHECK(r.is_nondegenerate());
    CHECK(r.is_reversible());
    CHECK(r.is_additive());
    CHECK(r.is_separable());
}

TEST_CASE("mutual distributivity examples") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i)
            a[i] = i;
        Cochain2 phi = phi_vec(a);
        CHECK(is_mutually_distributive(phi, zero_cochain(phi.heap_ptr(), phi.coeff_ptr())));
        CHECK(is_mutually_distributive(phi, phi));
    }
    for (int n = 2; n <= 8; ++n)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                CHECK(is_mutually_distributive(ring_cocycle(n, 2 * b % n, b), ring_cocycle(n, 2 * d % n, d)) ==
                      ((2 * (b - d)) % n == 0));
    CHECK(is_mutually_distributive(psi_i_dihedral(3, 1), psi_i_dihedral(3, 1)));
    CHECK_THROWS_AS(is_mutually_distributive(phi_i(3, 1), phi_i(4, 1)), Error);
}

TEST_CASE("extension TSD") {
    Cochain2 zero = zero_cochain(cyclic_heap(2), zn(2));
    CHECK(is_tsd(extension_tsd(zero)));
    Cochain2 d = coboundary(cyclic_heap(2), zn(2), {0, 1});
    REQUIRE_FALSE(d.is_zero());
    CHECK(is_tsd(extension_tsd(d)));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain2 c = random_table(rng, cyclic_heap(2), zn(2));
        CHECK(is_tsd(extension_tsd(c)) == cocycle_oracle(c));
        auto rc = check_cocycle_conditions(c);
        auto ro = check_op_conditions(extension_tsd(c));
        CHECK(ro.reversibility.ok == rc.is_reversible());
        CHECK(ro.additivity.ok == rc.is_additive());
    }
    Cochain2 bad(cyclic_heap(3), zn(2));
    bad.set(0, 1, 2, 1);
    CHECK_FALSE(is_tsd(extension_tsd(bad)));
}

TEST_CASE("property: coboundaries are RA cocycles") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        HeapPtr x = trial % 2 ? dihedral_heap(2 + trial % 3) : cyclic_heap(2 + trial % 5);
        CoeffPtr a = zn(2 + trial % 4);
        auto r = check_cocycle_conditions(coboundary(x, a, random_f(rng, x->size(), a->order())));
        CHECK(r.is_cocycle());
        CHECK(r.is_reversible());
        CHECK(r.is_additive());
    }
}

TEST_CASE("property: linear combinations keep reversibility and additivity") {
    std::mt19937 rng(23);
    for (int n = 2; n <= 6; ++n) {
        std::vector<Cochain2> ra;
        for (int b = 0; b < n; ++b)
            ra.push_back(ring_cocycle(n, 2 * b % n, b));
        for (int k = 0; k < 3; ++k)
            ra.push_back(coboundary(cyclic_heap(n), zn(n), random_f(rng, n, n)));
        for (int trial = 0; trial < 10; ++trial) {
            Cochain2 sum = zero_cochain(cyclic_heap(n), zn(n));
            for (const auto &c : ra)
                sum = sum + c.scaled(static_cast<int>(rng() % n));
            auto r = check_cocycle_conditions(sum);
            CHECK(r.is_reversible());
            CHECK(r.is_additive());
        }
    }
}

TEST_CASE("property: nondegenerate and additive implies reversible") {
    std::mt19937 rng(29);
    int seen = 0;
    for (int n = 2; n <= 6; ++n)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Cochain2 c = ring_cocycle(n, a, b) + coboundary(cyclic_heap(n), zn(n), random_f(rng, n, n));
                auto r = check_cocycle_conditions(c);
                if (r.is_nondegenerate() && r.is_additive()) {
                    ++seen;
                    CHECK(r.is_reversible());
                }
            }
    CHECK(seen > 0);
}

TEST_CASE("property: phi_vec RA flags match the additive-sequence predicate") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> a(n, 0);
        for (;;) {
            CHECK(check_cocycle_conditions(phi_vec(a)).is_ra() == additive_sequence(a));
            int i = 1;
            while (i < n && ++a[i] == n)
                a[i++] = 0;
            if (i == n)
                break;
        }
    }
}

TEST_CASE("property: separable phi_i are pairwise mutually distributive") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            REQUIRE(check_cocycle_conditions(phi_i(n, i)).is_separable());
            for (int j = 1; j < n; ++j)
                CHECK(is_mutually_distributive(phi_i(n, i), phi_i(n, j)));
        }
}

TEST_CASE("psi_vec on D_n matches the literal definition") {
    // The indicator sums never pair a rotation with a reflection, which breaks additivity for a != 0.
    for (int n = 2; n <= 5; ++n) {
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i)
            a[i] = i;
        auto r = check_cocycle_conditions(psi_vec(a));
        CHECK(r.is_cocycle());
        CHECK(r.is_reversible());
        CHECK_FALSE(r.is_additive());
        CHECK(r.additive.witness.size() == 4);
    }
}
