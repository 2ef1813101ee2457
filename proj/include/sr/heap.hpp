#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sr {

// Finite group on dense indices 0..order-1.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table; // order*order
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::string> names;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
    const std::string &name(int a) const { return names[a]; }

    // Builds from a full multiplication table; throws sr::Error unless it is a group.
    static FiniteGroup from_table(std::vector<std::vector<int>> rows);
};

FiniteGroup cyclic_group(int n);
// Elements 0..n-1 are ζ^j, n..2n-1 are aζ^j, with aζa = ζ^-1.
FiniteGroup dihedral_group(int n);

struct TernaryOp {
    int size = 0;
    std::vector<int> table; // size^3

    int operator()(int x, int y, int z) const { return table[(x * size + y) * size + z]; }
    int &at(int x, int y, int z) { return table[(x * size + y) * size + z]; }

    static TernaryOp make(int n) { return TernaryOp{n, std::vector<int>(std::size_t(n) * n * n, 0)}; }
};

// Result of an exhaustive check: the first lexicographic counterexample if any.
struct Check {
    bool ok = true;
    std::vector<int> witness;

    explicit operator bool() const { return ok; }
};

Check heap_check(const TernaryOp &op);
Check tsd_check(const TernaryOp &op);
bool is_heap(const TernaryOp &op);
bool is_tsd(const TernaryOp &op);

struct OpReport {
    Check idempotency;   // T(w,x,x) = w
    Check reversibility; // T(T(w,x,y),y,x) = w
    Check additivity;    // T(T(w,x,y),y,z) = T(w,x,z)
};

OpReport check_op_conditions(const TernaryOp &op);

// Affine op T(x,y,z) = t x + s y + (1-t-s) z over Z_n.
TernaryOp affine_op(int n, int t, int s);

class FiniteHeap {
public:
    // Throws sr::Error when op is not a heap.
    explicit FiniteHeap(TernaryOp op);
    static FiniteHeap of_group(FiniteGroup g);

    int size() const { return op_.size; }
    int operator()(int x, int y, int z) const { return op_(x, y, z); }
    const TernaryOp &op() const { return op_; }
    const std::optional<FiniteGroup> &group() const { return group_; }
    std::string name(int x) const;

private:
    FiniteHeap(TernaryOp op, FiniteGroup g);
    TernaryOp op_;
    std::optional<FiniteGroup> group_;
};

FiniteHeap group_heap(const FiniteGroup &g);

// x*y = T(x,e,y); recovers the group of a heap at base point e.
FiniteGroup heap_to_group(const TernaryOp &op, int e);

} // namespace sr
