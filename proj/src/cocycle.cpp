#include "sr/cocycle.hpp"

#include "sr/error.hpp"

namespace sr {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int d : factors_) {
        if (d < 1)
            throw Error("invalid cyclic factor " + std::to_string(d));
        order_ *= d;
    }
    add_.resize(std::size_t(order_) * order_);
    neg_.resize(order_);
    for (int a = 0; a < order_; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(ca.size());
        for (std::size_t k = 0; k < ca.size(); ++k)
            cn[k] = (factors_[k] - ca[k]) % factors_[k];
        neg_[a] = encode(cn);
        for (int b = 0; b < order_; ++b) {
            auto cb = decode(b);
            for (std::size_t k = 0; k < ca.size(); ++k)
                cb[k] = (ca[k] + cb[k]) % factors_[k];
            add_[a * order_ + b] = encode(cb);
        }
    }
}

int AbelianGroup::scale(int k, int a) const {
    auto c = decode(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        long v = (long(k) * c[i]) % factors_[i];
        c[i] = int(v < 0 ? v + factors_[i] : v);
    }
    return encode(c);
}

int AbelianGroup::encode(const std::vector<int> &coords) const {
    int a = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        int c = coords[k] % factors_[k];
        if (c < 0)
            c += factors_[k];
        a = a * factors_[k] + c;
    }
    return a;
}

std::vector<int> AbelianGroup::decode(int a) const {
    std::vector<int> c(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        c[k] = a % factors_[k];
        a /= factors_[k];
    }
    return c;
}

std::string AbelianGroup::name(int a) const {
    if (a == 0)
        return "e";
    auto c = decode(a);
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0)
            continue;
        if (!s.empty())
            s += " ";
        s += factors_.size() == 1 ? "g" : "g" + std::to_string(k + 1);
        if (c[k] != 1)
            s += "^" + std::to_string(c[k]);
    }
    return s;
}

Cochain2::Cochain2(HeapPtr heap, CoeffPtr coeffs)
    : heap_(std::move(heap)), coeffs_(std::move(coeffs)), n_(heap_->size()),
      table_(std::size_t(n_) * n_ * n_, 0) {}

Cochain2::Cochain2(HeapPtr heap, CoeffPtr coeffs, std::vector<int> table)
    : heap_(std::move(heap)), coeffs_(std::move(coeffs)), n_(heap_->size()), table_(std::move(table)) {
    if (table_.size() != std::size_t(n_) * n_ * n_)
        throw Error("cochain table has wrong size");
    for (int a : table_)
        if (a < 0 || a >= coeffs_->order())
            throw Error("cochain value outside the coefficient group");
}

Cochain2 Cochain2::operator+(const Cochain2 &o) const {
    if (!(o.coeffs() == coeffs()) || o.size() != size())
        throw Error("cochain carrier or coefficient mismatch");
    Cochain2 r(heap_, coeffs_);
    for (std::size_t i = 0; i < table_.size(); ++i)
        r.table_[i] = coeffs_->add(table_[i], o.table_[i]);
    return r;
}

Cochain2 Cochain2::scaled(int k) const {
    Cochain2 r(heap_, coeffs_);
    for (std::size_t i = 0; i < table_.size(); ++i)
        r.table_[i] = coeffs_->scale(k, table_[i]);
    return r;
}

bool Cochain2::is_zero() const {
    for (int a : table_)
        if (a != 0)
            return false;
    return true;
}

Check cocycle_check(const Cochain2 &psi) {
    const auto &T = psi.heap();
    const auto &A = psi.coeffs();
    const int n = psi.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int xyz = T(x, y, z);
                const int p = psi(x, y, z);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        int lhs = A.add(p, psi(xyz, u, v));
                        int rhs = A.add(psi(T(x, u, v), T(y, u, v), T(z, u, v)), psi(x, u, v));
                        if (lhs != rhs)
                            return {false, {x, y, z, u, v}};
                    }
            }
    return {};
}

bool is_cocycle(const Cochain2 &psi) { return cocycle_check(psi).ok; }

CocycleReport check_cocycle_conditions(const Cochain2 &psi) {
    const auto &T = psi.heap();
    const auto &A = psi.coeffs();
    const int n = psi.size();
    CocycleReport r;
    r.cocycle = cocycle_check(psi);
    for (int x = 0; x < n && r.nondegenerate.ok; ++x)
        for (int y = 0; y < n; ++y)
            if (psi(x, y, y) != 0) {
                r.nondegenerate = {false, {x, y}};
                break;
            }
    for (int w = 0; w < n && r.reversible.ok; ++w)
        for (int x = 0; x < n && r.reversible.ok; ++x)
            for (int y = 0; y < n; ++y)
                if (A.add(psi(w, x, y), psi(T(w, x, y), y, x)) != 0) {
                    r.reversible = {false, {w, x, y}};
                    break;
                }
    for (int w = 0; w < n && r.additive.ok; ++w)
        for (int x = 0; x < n && r.additive.ok; ++x)
            for (int y = 0; y < n && r.additive.ok; ++y)
                for (int z = 0; z < n; ++z)
                    if (A.add(psi(w, x, y), psi(T(w, x, y), y, z)) != psi(w, x, z)) {
                        r.additive = {false, {w, x, y, z}};
                        break;
                    }
    r.separable = mutual_distributivity_check(psi, zero_cochain(psi.heap_ptr(), psi.coeff_ptr()));
    return r;
}

Check mutual_distributivity_check(const Cochain2 &a, const Cochain2 &b) {
    if (a.heap().op().table != b.heap().op().table)
        throw Error("cochains live on different heaps");
    if (!(a.coeffs() == b.coeffs()))
        throw Error("cochains have different coefficient groups");
    const auto &T = a.heap();
    const auto &A = a.coeffs();
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int xyz = T(x, y, z);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        const int tx = T(x, u, v), ty = T(y, u, v), tz = T(z, u, v);
                        if (A.add(a(x, y, z), b(xyz, u, v)) != A.add(b(x, u, v), a(tx, ty, tz)) ||
                            A.add(b(x, y, z), a(xyz, u, v)) != A.add(a(x, u, v), b(tx, ty, tz)))
                            return {false, {x, y, z, u, v}};
                    }
            }
    return {};
}

bool is_mutually_distributive(const Cochain2 &a, const Cochain2 &b) {
    return mutual_distributivity_check(a, b).ok;
}

Cochain2 coboundary(HeapPtr heap, CoeffPtr coeffs, const std::vector<int> &f) {
    if (static_cast<int>(f.size()) != heap->size())
        throw Error("coboundary function has wrong length");
    Cochain2 r(heap, coeffs);
    const auto &T = *heap;
    const int n = heap->size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                r.set(x, y, z, coeffs->sub(f[x], f[T(x, y, z)]));
    return r;
}

HeapPtr cyclic_heap(int n) { return std::make_shared<const FiniteHeap>(group_heap(cyclic_group(n))); }
HeapPtr dihedral_heap(int n) { return std::make_shared<const FiniteHeap>(group_heap(dihedral_group(n))); }

Cochain2 zero_cochain(HeapPtr heap, CoeffPtr coeffs) { return Cochain2(std::move(heap), std::move(coeffs)); }

namespace {

void check_index(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1)
        throw Error("cocycle index " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
}

int md(long k, int n) { return int(((k % n) + n) % n); }

} // namespace

Cochain2 phi_i(int n, int i) {
    check_index(n, i);
    std::vector<int> a(n, 0);
    a[i] = 1;
    return phi_vec(a);
}

Cochain2 psi_i_dihedral(int n, int i) {
    check_index(n, i);
    std::vector<int> a(n, 0);
    a[i] = 1;
    return psi_vec(a);
}

Cochain2 phi_vec(const std::vector<int> &a) {
    const int n = static_cast<int>(a.size());
    if (n < 1)
        throw Error("coefficient vector is empty");
    if (md(a[0], n) != 0)
        throw Error("coefficient vector must have a_0 = 0");
    Cochain2 r(cyclic_heap(n), std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                r.set(x, y, z, md(a[md(z - y, n)], n));
    return r;
}

Cochain2 psi_vec(const std::vector<int> &a) {
    const int n = static_cast<int>(a.size());
    if (n < 1)
        throw Error("coefficient vector is empty");
    if (md(a[0], n) != 0)
        throw Error("coefficient vector must have a_0 = 0");
    Cochain2 r(dihedral_heap(n), std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n)));
    const int m = 2 * n;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z) {
                bool ry = y >= n, rz = z >= n;
                int val = 0;
                if (!ry && !rz)
                    val = a[md(z - y, n)]; // (ζ^j, ζ^{j+i})
                else if (ry && rz)
                    val = a[md((y - n) - (z - n), n)]; // (aζ^{-j}, aζ^{-j-i})
                r.set(x, y, z, md(val, n));
            }
    return r;
}

Cochain2 ring_cocycle(int n, int a, int b) {
    if (n < 1)
        throw Error("invalid modulus");
    Cochain2 r(cyclic_heap(n), std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                long d = z - y;
                r.set(x, y, z, md((long(a) * x + long(b) * d) * d, n));
            }
    return r;
}

TernaryOp extension_tsd(const Cochain2 &psi) {
    const int nx = psi.size();
    const int na = psi.coeffs().order();
    const long m = long(nx) * na;
    if (m > 64)
        throw Error("extension carrier too large for a dense table");
    const auto &T = psi.heap();
    const auto &A = psi.coeffs();
    TernaryOp op = TernaryOp::make(int(m));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            for (int r = 0; r < m; ++r) {
                int x = p / na, a = p % na, y = q / na, z = r / na;
                op.at(p, q, r) = T(x, y, z) * na + A.add(a, psi(x, y, z));
            }
    return op;
}

} // namespace sr
