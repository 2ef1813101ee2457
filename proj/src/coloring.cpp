#include "sr/coloring.hpp"

#include "sr/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sr {

namespace {

// z = T(x,u,v) for one crossing relation.
struct Quad {
    std::array<int, 4> var; // x, u, v, z
};

struct Solver {
    const FiniteHeap &heap;
    std::vector<Quad> quads;
    std::vector<std::vector<int>> quads_of;
    std::vector<int> order;
    std::vector<int> value;
    std::vector<int> trail;
    const std::function<bool(const Coloring &)> &visit;
    bool stop = false;

    Solver(const BoundaryStructure &bs, const FiniteHeap &h, const std::function<bool(const Coloring &)> &f)
        : heap(h), quads_of(bs.arc_count), value(bs.arc_count, -1), visit(f) {
        for (const auto &c : bs.crossings) {
            quads.push_back({{c.x, c.u, c.v, c.z}});
            quads.push_back({{c.y, c.u, c.v, c.w}});
        }
        std::vector<int> incidence(bs.arc_count, 0);
        for (int q = 0; q < static_cast<int>(quads.size()); ++q)
            for (int k = 0; k < 4; ++k) {
                int a = quads[q].var[k];
                incidence[a]++;
                if (quads_of[a].empty() || quads_of[a].back() != q)
                    quads_of[a].push_back(q);
            }
        order.resize(bs.arc_count);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return incidence[a] > incidence[b]; });
    }

    // Value of slot k forced by the other three.
    int solve(const Quad &q, int k) const {
        int x = value[q.var[0]], u = value[q.var[1]], v = value[q.var[2]], z = value[q.var[3]];
        switch (k) {
        case 0:
            return heap(z, v, u);
        case 1:
            return heap(v, z, x);
        case 2:
            return heap(u, x, z);
        default:
            return heap(x, u, v);
        }
    }

    bool assign(int a, int val) {
        std::vector<int> queue{a};
        value[a] = val;
        trail.push_back(a);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (int qi : quads_of[queue[h]]) {
                const Quad &q = quads[qi];
                int unknown = -1, count = 0;
                for (int k = 0; k < 4; ++k)
                    if (value[q.var[k]] < 0) {
                        unknown = k;
                        ++count;
                    }
                if (count == 0) {
                    if (heap(value[q.var[0]], value[q.var[1]], value[q.var[2]]) != value[q.var[3]])
                        return false;
                } else if (count == 1) {
                    int b = q.var[unknown];
                    int forced = solve(q, unknown);
                    // b may occur twice in q; recheck after assignment.
                    value[b] = forced;
                    trail.push_back(b);
                    queue.push_back(b);
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            value[trail.back()] = -1;
            trail.pop_back();
        }
    }

    // Unassigned arc sharing the most known neighbours in its relations, so that assigning it
    // forces as much as possible; static incidence order breaks ties.
    int pick() const {
        int best = -1, best_score = -1;
        for (int a : order) {
            if (value[a] >= 0)
                continue;
            int score = 0;
            for (int qi : quads_of[a])
                for (int v : quads[qi].var)
                    if (value[v] >= 0)
                        score += 4;
            score += 1;
            if (score > best_score) {
                best_score = score;
                best = a;
            }
        }
        return best;
    }

    void run() {
        if (stop)
            return;
        int a = pick();
        if (a < 0) {
            if (!visit(value))
                stop = true;
            return;
        }
        for (int val = 0; val < heap.size() && !stop; ++val) {
            std::size_t mark = trail.size();
            if (assign(a, val))
                run();
            undo(mark);
        }
    }
};

} // namespace

void for_each_coloring(const BoundaryStructure &bs, const FiniteHeap &x,
                       const std::function<bool(const Coloring &)> &visit) {
    Solver s(bs, x, visit);
    s.run();
}

std::vector<Coloring> enumerate_colorings(const RibbonDiagram &d, const FiniteHeap &x) {
    std::vector<Coloring> out;
    for_each_coloring(boundary(d), x, [&](const Coloring &c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::uint64_t count_colorings(const BoundaryStructure &bs, const FiniteHeap &x) {
    std::uint64_t n = 0;
    for_each_coloring(bs, x, [&](const Coloring &) {
        ++n;
        return true;
    });
    return n;
}

std::uint64_t count_colorings(const RibbonDiagram &d, const FiniteHeap &x) { return count_colorings(boundary(d), x); }

bool is_coloring(const BoundaryStructure &bs, const FiniteHeap &x, const Coloring &c) {
    if (static_cast<int>(c.size()) != bs.arc_count)
        return false;
    for (int v : c)
        if (v < 0 || v >= x.size())
            return false;
    for (const auto &k : bs.crossings)
        if (x(c[k.x], c[k.u], c[k.v]) != c[k.z] || x(c[k.y], c[k.u], c[k.v]) != c[k.w])
            return false;
    return true;
}

std::string admissibility_error(const std::vector<Cochain2> &cocycles) {
    if (cocycles.empty())
        return "decoration is empty";
    const auto &first = cocycles.front();
    for (std::size_t i = 0; i < cocycles.size(); ++i) {
        const auto &p = cocycles[i];
        std::string tag = "cocycle " + std::to_string(i + 1);
        if (p.heap().op().table != first.heap().op().table)
            return tag + " is on a different heap";
        if (!(p.coeffs() == first.coeffs()))
            return tag + " has a different coefficient group";
        auto rep = check_cocycle_conditions(p);
        if (!rep.is_cocycle())
            return tag + " fails the cocycle condition";
        if (!rep.is_reversible())
            return tag + " is not reversible";
        if (!rep.is_additive())
            return tag + " is not additive";
    }
    for (std::size_t i = 0; i < cocycles.size(); ++i)
        for (std::size_t j = i + 1; j < cocycles.size(); ++j)
            if (!is_mutually_distributive(cocycles[i], cocycles[j]))
                return "cocycles " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                       " are not mutually distributive";
    return {};
}

Decoration::Decoration(std::vector<Cochain2> cocycles) : cocycles_(std::move(cocycles)) {
    std::string err = admissibility_error(cocycles_);
    if (!err.empty())
        throw Error("inadmissible decoration: " + err);
}

int boltzmann(const BoundaryStructure &bs, const Coloring &c, int component, const Decoration &dec) {
    const auto &a = dec.coeffs();
    int w = a.zero();
    for (const auto &ev : bs.components[component].events) {
        const auto &k = bs.crossings[bs.crossing_index[ev.crossing]];
        const auto &psi = dec[k.over_surface];
        int term = ev.along_under ? psi(c[k.x], c[k.u], c[k.v]) : psi(c[k.w], c[k.v], c[k.u]);
        w = a.add(w, term);
    }
    return w;
}

Term coloring_term(const BoundaryStructure &bs, const Coloring &c, const Decoration &dec) {
    Term t(bs.surfaces);
    for (int b = 0; b < static_cast<int>(bs.components.size()); ++b)
        t[bs.components[b].surface].push_back(boltzmann(bs, c, b, dec));
    for (auto &f : t)
        std::sort(f.begin(), f.end());
    return t;
}

InvariantValue cocycle_invariant(const BoundaryStructure &bs, const Decoration &dec) {
    if (static_cast<int>(dec.size()) != bs.surfaces)
        throw Error("decoration has " + std::to_string(dec.size()) + " cocycles but the diagram has " +
                    std::to_string(bs.surfaces) + " components");
    InvariantValue v;
    for_each_coloring(bs, dec.heap(), [&](const Coloring &c) {
        v.add(coloring_term(bs, c, dec));
        return true;
    });
    return v;
}

InvariantValue cocycle_invariant(const RibbonDiagram &d, const Decoration &dec) {
    return cocycle_invariant(boundary(d), dec);
}

std::uint64_t InvariantValue::total() const {
    std::uint64_t n = 0;
    for (const auto &[t, m] : terms)
        n += m;
    return n;
}

std::string InvariantValue::to_string(const AbelianGroup &a) const {
    std::ostringstream os;
    for (const auto &[t, m] : terms) {
        os << m << " ×";
        for (std::size_t s = 0; s < t.size(); ++s) {
            os << " [S" << s + 1 << ": (";
            for (std::size_t k = 0; k < t[s].size(); ++k)
                os << (k ? "," : "") << a.name(t[s][k]);
            os << ")]";
        }
        os << "\n";
    }
    return os.str();
}

std::string InvariantValue::to_json_lines(const AbelianGroup &a) const {
    std::string out;
    for (const auto &[t, m] : terms) {
        nlohmann::ordered_json term = nlohmann::ordered_json::object();
        for (std::size_t s = 0; s < t.size(); ++s) {
            auto arr = nlohmann::ordered_json::array();
            for (int e : t[s])
                arr.push_back(a.name(e));
            term["S" + std::to_string(s + 1)] = arr;
        }
        nlohmann::ordered_json line;
        line["term"] = term;
        line["mult"] = m;
        out += line.dump() + "\n";
    }
    return out;
}

} // namespace sr
