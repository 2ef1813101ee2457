#include "sr/heap.hpp"

#include "sr/error.hpp"

namespace sr {

namespace {

std::string power_name(const std::string &base, int j) {
    if (j == 0)
        return "";
    if (j == 1)
        return base;
    return base + "^" + std::to_string(j);
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0)
        throw Error("group table is empty");
    FiniteGroup g;
    g.order = n;
    g.table.resize(std::size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(rows[a].size()) != n)
            throw Error("group table row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b) {
            int c = rows[a][b];
            if (c < 0 || c >= n)
                throw Error("group table entry out of range");
            g.table[a * n + b] = c;
        }
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = g.mul(a, b) == b && g.mul(b, a) == b;
        if (ok)
            e = a;
    }
    if (e < 0)
        throw Error("group table has no identity");
    g.identity = e;
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(b, a) == e && g.mul(a, b) == e)
                g.inverse[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse[a] < 0)
            throw Error("group table element " + std::to_string(a) + " has no inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw Error("group table is not associative");
    for (int a = 0; a < n; ++a)
        g.names.push_back("g" + std::to_string(a));
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1)
        throw Error("invalid group order " + std::to_string(n));
    FiniteGroup g;
    g.order = n;
    g.table.resize(std::size_t(n) * n);
    g.inverse.resize(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            g.table[a * n + b] = (a + b) % n;
        g.inverse[a] = (n - a) % n;
        g.names.push_back(a == 0 ? "1" : power_name("ζ", a));
    }
    return g;
}

FiniteGroup dihedral_group(int n) {
    if (n < 1)
        throw Error("invalid group order " + std::to_string(n));
    const int m = 2 * n;
    FiniteGroup g;
    g.order = m;
    g.table.resize(std::size_t(m) * m);
    auto md = [n](int k) { return ((k % n) + n) % n; };
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            bool ra = a >= n, rb = b >= n;
            int i = a % n, j = b % n;
            int c;
            if (!ra && !rb)
                c = md(i + j);
            else if (!ra && rb)
                c = n + md(j - i); // ζ^i aζ^j = aζ^{j-i}
            else if (ra && !rb)
                c = n + md(i + j);
            else
                c = md(j - i); // aζ^i aζ^j = ζ^{j-i}
            g.table[a * m + b] = c;
        }
    }
    g.inverse.resize(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (g.mul(a, b) == 0)
                g.inverse[a] = b;
    for (int j = 0; j < n; ++j)
        g.names.push_back(j == 0 ? "1" : power_name("ζ", j));
    for (int j = 0; j < n; ++j)
        g.names.push_back("a" + power_name("ζ", j));
    return g;
}

Check heap_check(const TernaryOp &op) {
    const int n = op.size;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (op(x, x, y) != y || op(x, y, y) != x)
                return {false, {x, y}};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int abc = op(a, b, c);
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                        int l = op(abc, d, e);
                        if (l != op(a, op(d, c, b), e) || l != op(a, b, op(c, d, e)))
                            return {false, {a, b, c, d, e}};
                    }
            }
    return {};
}

Check tsd_check(const TernaryOp &op) {
    const int n = op.size;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int xyz = op(x, y, z);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (op(xyz, u, v) != op(op(x, u, v), op(y, u, v), op(z, u, v)))
                            return {false, {x, y, z, u, v}};
            }
    return {};
}

bool is_heap(const TernaryOp &op) { return heap_check(op).ok; }
bool is_tsd(const TernaryOp &op) { return tsd_check(op).ok; }

OpReport check_op_conditions(const TernaryOp &op) {
    const int n = op.size;
    OpReport r;
    for (int w = 0; w < n && r.idempotency.ok; ++w)
        for (int x = 0; x < n; ++x)
            if (op(w, x, x) != w) {
                r.idempotency = {false, {w, x}};
                break;
            }
    for (int w = 0; w < n && r.reversibility.ok; ++w)
        for (int x = 0; x < n && r.reversibility.ok; ++x)
            for (int y = 0; y < n; ++y)
                if (op(op(w, x, y), y, x) != w) {
                    r.reversibility = {false, {w, x, y}};
                    break;
                }
    for (int w = 0; w < n && r.additivity.ok; ++w)
        for (int x = 0; x < n && r.additivity.ok; ++x)
            for (int y = 0; y < n && r.additivity.ok; ++y)
                for (int z = 0; z < n; ++z)
                    if (op(op(w, x, y), y, z) != op(w, x, z)) {
                        r.additivity = {false, {w, x, y, z}};
                        break;
                    }
    return r;
}

TernaryOp affine_op(int n, int t, int s) {
    if (n < 1)
        throw Error("invalid modulus");
    TernaryOp op = TernaryOp::make(n);
    auto md = [n](long k) { return int(((k % n) + n) % n); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                op.at(x, y, z) = md(long(t) * x + long(s) * y + long(1 - t - s) * z);
    return op;
}

FiniteHeap::FiniteHeap(TernaryOp op) : op_(std::move(op)) {
    Check c = heap_check(op_);
    if (!c.ok)
        throw Error("ternary operation is not a heap");
}

FiniteHeap::FiniteHeap(TernaryOp op, FiniteGroup g) : op_(std::move(op)), group_(std::move(g)) {
    Check c = heap_check(op_);
    if (!c.ok)
        throw Error("group heap failed the heap axioms");
}

FiniteHeap FiniteHeap::of_group(FiniteGroup g) {
    TernaryOp op = TernaryOp::make(g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int xy = g.mul(x, g.inv(y));
            for (int z = 0; z < g.order; ++z)
                op.at(x, y, z) = g.mul(xy, z);
        }
    return FiniteHeap(std::move(op), std::move(g));
}

std::string FiniteHeap::name(int x) const {
    if (group_)
        return group_->name(x);
    return std::to_string(x);
}

FiniteHeap group_heap(const FiniteGroup &g) { return FiniteHeap::of_group(g); }

FiniteGroup heap_to_group(const TernaryOp &op, int e) {
    std::vector<std::vector<int>> rows(op.size, std::vector<int>(op.size));
    for (int x = 0; x < op.size; ++x)
        for (int y = 0; y < op.size; ++y)
            rows[x][y] = op(x, e, y);
    return FiniteGroup::from_table(std::move(rows));
}

} // namespace sr
