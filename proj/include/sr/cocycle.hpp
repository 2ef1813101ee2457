#pragma once

#include "sr/heap.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sr {

// Z_{d1} + ... + Z_{dr}, elements encoded densely in mixed radix (first factor slowest).
class AbelianGroup {
public:
    AbelianGroup() : AbelianGroup(std::vector<int>{}) {}
    explicit AbelianGroup(std::vector<int> factors);
    static AbelianGroup cyclic(int n) { return AbelianGroup({n}); }

    int order() const { return order_; }
    const std::vector<int> &factors() const { return factors_; }
    int zero() const { return 0; }
    int add(int a, int b) const { return add_[a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int scale(int k, int a) const;
    int encode(const std::vector<int> &coords) const;
    std::vector<int> decode(int a) const;
    // Multiplicative names: e, g, g^2, ... or g1^a g2^b for several factors.
    std::string name(int a) const;

    bool operator==(const AbelianGroup &o) const { return factors_ == o.factors_; }

private:
    std::vector<int> factors_;
    int order_ = 1;
    std::vector<int> add_;
    std::vector<int> neg_;
};

using HeapPtr = std::shared_ptr<const FiniteHeap>;
using CoeffPtr = std::shared_ptr<const AbelianGroup>;

// Dense 2-cochain X^3 -> A.
class Cochain2 {
public:
    Cochain2(HeapPtr heap, CoeffPtr coeffs);
    Cochain2(HeapPtr heap, CoeffPtr coeffs, std::vector<int> table);

    const FiniteHeap &heap() const { return *heap_; }
    const AbelianGroup &coeffs() const { return *coeffs_; }
    const HeapPtr &heap_ptr() const { return heap_; }
    const CoeffPtr &coeff_ptr() const { return coeffs_; }
    int size() const { return heap_->size(); }

    int operator()(int x, int y, int z) const { return table_[(x * n_ + y) * n_ + z]; }
    void set(int x, int y, int z, int a) { table_[(x * n_ + y) * n_ + z] = a; }
    const std::vector<int> &table() const { return table_; }

    Cochain2 operator+(const Cochain2 &o) const;
    Cochain2 scaled(int k) const;
    bool is_zero() const;
    bool operator==(const Cochain2 &o) const { return table_ == o.table_; }

private:
    HeapPtr heap_;
    CoeffPtr coeffs_;
    int n_;
    std::vector<int> table_;
};

struct CocycleReport {
    Check cocycle;
    Check nondegenerate;
    Check reversible;
    Check additive;
    Check separable;

    bool is_cocycle() const { return cocycle.ok; }
    bool is_nondegenerate() const { return nondegenerate.ok; }
    bool is_reversible() const { return reversible.ok; }
    bool is_additive() const { return additive.ok; }
    bool is_separable() const { return separable.ok; }
    bool is_ra() const { return reversible.ok && additive.ok; }
};

Check cocycle_check(const Cochain2 &psi);
bool is_cocycle(const Cochain2 &psi);
CocycleReport check_cocycle_conditions(const Cochain2 &psi);
Check mutual_distributivity_check(const Cochain2 &a, const Cochain2 &b);
bool is_mutually_distributive(const Cochain2 &a, const Cochain2 &b);

// δf(x,y,z) = f(x) - f(T(x,y,z)).
Cochain2 coboundary(HeapPtr heap, CoeffPtr coeffs, const std::vector<int> &f);

HeapPtr cyclic_heap(int n);
HeapPtr dihedral_heap(int n);

Cochain2 zero_cochain(HeapPtr heap, CoeffPtr coeffs);
// φ_i on Z_n with A = Z_n.
Cochain2 phi_i(int n, int i);
// ψ_i on D_n with A = Z_n.
Cochain2 psi_i_dihedral(int n, int i);
// Σ a_i φ_i on Z_n (a_0 = 0).
Cochain2 phi_vec(const std::vector<int> &a);
// Σ a_i ψ_i on D_n (a_0 = 0).
Cochain2 psi_vec(const std::vector<int> &a);
// (a x + b (z - y)) (z - y) mod n on the additive heap Z_n.
Cochain2 ring_cocycle(int n, int a, int b);

// T^((x,a),(y,b),(z,c)) = (T(x,y,z), a + ψ(x,y,z)) on X x A, pairs encoded as x*|A| + a.
TernaryOp extension_tsd(const Cochain2 &psi);

} // namespace sr
