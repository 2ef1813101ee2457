#include "sr/presentation.hpp"

#include "sr/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <gmpxx.h>

namespace sr {

Word free_reduce(const Word &w) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word &w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + i, r.begin() + j);
}

Word inverse(const Word &w) {
    Word r(w.rbegin(), w.rend());
    for (int &l : r)
        l = -l;
    return r;
}

std::string default_generator_name(int i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26)
        s += std::to_string(i / 26);
    return s;
}

std::string GroupPresentation::word_string(const Word &w) const {
    std::string s;
    for (int l : w) {
        if (!s.empty())
            s += ' ';
        std::string g = generators[std::abs(l) - 1];
        if (l < 0)
            g[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(g[0])));
        s += g;
    }
    return s;
}

std::string GroupPresentation::to_text() const {
    std::string s = "gens:";
    for (const auto &g : generators)
        s += " " + g;
    s += "\n";
    for (const auto &r : relators) {
        std::string ws = word_string(r);
        s += ws.empty() ? "rel:\n" : "rel: " + ws + "\n";
    }
    return s;
}

GroupPresentation parse_presentation(const std::string &text) {
    GroupPresentation p;
    std::map<std::string, int> index;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_gens = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'gens:' or 'rel:'", lineno, static_cast<int>(first) + 1);
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
            key.pop_back();
        const std::string body = line.substr(colon + 1);
        auto scan = [&](auto &&emit) {
            std::size_t i = 0;
            while (i < body.size()) {
                char c = body[i];
                if (std::isspace(static_cast<unsigned char>(c))) {
                    ++i;
                    continue;
                }
                int col = static_cast<int>(colon + 2 + i);
                if (!std::isalpha(static_cast<unsigned char>(c)))
                    throw ParseError(std::string("unexpected character '") + c + "'", lineno, col);
                std::size_t j = i + 1;
                while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
                    ++j;
                emit(body.substr(i, j - i), col);
                i = j;
            }
        };
        if (key == "gens") {
            if (have_gens)
                throw ParseError("duplicate 'gens:' line", lineno, static_cast<int>(first) + 1);
            have_gens = true;
            scan([&](std::string tok, int col) {
                if (std::isupper(static_cast<unsigned char>(tok[0])))
                    throw ParseError("generator names must start lowercase", lineno, col);
                if (index.count(tok))
                    throw ParseError("duplicate generator '" + tok + "'", lineno, col);
                index[tok] = static_cast<int>(p.generators.size());
                p.generators.push_back(tok);
            });
        } else if (key == "rel") {
            if (!have_gens)
                throw ParseError("'rel:' before 'gens:'", lineno, static_cast<int>(first) + 1);
            Word w;
            scan([&](std::string tok, int col) {
                bool inv = std::isupper(static_cast<unsigned char>(tok[0]));
                tok[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
                auto it = index.find(tok);
                if (it == index.end())
                    throw ParseError("unknown generator '" + tok + "'", lineno, col);
                w.push_back(inv ? -(it->second + 1) : it->second + 1);
            });
            p.relators.push_back(std::move(w));
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, static_cast<int>(first) + 1);
        }
    }
    if (!have_gens)
        throw ParseError("missing 'gens:' line", lineno + 1, 1);
    return p;
}

GroupPresentation read_presentation(const std::string &path) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

GroupPresentation fundamental_presentation(const BoundaryStructure &bs) {
    GroupPresentation p;
    for (int i = 0; i < bs.arc_count; ++i)
        p.generators.push_back(default_generator_name(i));
    for (const auto &c : bs.crossings) {
        p.relators.push_back({c.z + 1, -(c.v + 1), c.u + 1, -(c.x + 1)});
        p.relators.push_back({c.w + 1, -(c.v + 1), c.u + 1, -(c.y + 1)});
    }
    return p;
}

GroupPresentation fundamental_presentation(const RibbonDiagram &d) {
    return fundamental_presentation(boundary(d));
}

namespace {

// Smallest rotation of w or its inverse; identifies relators up to conjugacy and inversion.
Word canonical_relator(const Word &w) {
    Word best = w;
    for (const Word &base : {w, inverse(w)})
        for (std::size_t k = 0; k < base.size(); ++k) {
            Word r(base.begin() + k, base.end());
            r.insert(r.end(), base.begin(), base.begin() + k);
            if (r < best)
                best = r;
        }
    return best;
}

void normalise(GroupPresentation &p) {
    std::set<Word> seen;
    std::vector<Word> out;
    for (const auto &r : p.relators) {
        Word c = cyclic_reduce(r);
        if (c.empty())
            continue;
        if (seen.insert(canonical_relator(c)).second)
            out.push_back(c);
    }
    p.relators = std::move(out);
}

bool alternating(const Word &w) {
    if (w.size() % 2)
        return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (((w[i] > 0) == (w[0] > 0)) != (i % 2 == 0))
            return false;
    return true;
}

// Relators made of x y^-1 pairs: put g = g' b for one base b per linked block of generators, b drops out.
void rebase(GroupPresentation &p) {
    if (p.relators.empty())
        return;
    for (const auto &r : p.relators)
        if (!alternating(r))
            return;
    const int n = p.rank();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto &r : p.relators)
        for (int l : r)
            parent[find(std::abs(l) - 1)] = find(std::abs(r[0]) - 1);
    std::vector<int> base(n, -1);
    for (int g = 0; g < n; ++g)
        if (base[find(g)] < 0)
            base[find(g)] = g + 1;
    for (auto &r : p.relators) {
        Word nw;
        for (int l : r) {
            int g = std::abs(l), b = base[find(g - 1)];
            if (g == b)
                nw.push_back(l);
            else if (l > 0)
                nw.insert(nw.end(), {g, b});
            else
                nw.insert(nw.end(), {-b, -g});
        }
        r = free_reduce(nw);
    }
}

} // namespace

GroupPresentation tietze_simplify(const GroupPresentation &input, int budget) {
    GroupPresentation p = input;
    if (budget < 0)
        budget = 10 * std::max(1, p.rank());
    rebase(p);
    normalise(p);
    for (int pass = 0; pass < budget; ++pass) {
        int best_rel = -1, best_gen = -1;
        for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
            const Word &w = p.relators[r];
            if (best_rel >= 0 && w.size() >= p.relators[best_rel].size())
                continue;
            std::map<int, int> occ;
            for (int l : w)
                occ[std::abs(l)]++;
            for (auto [g, n] : occ)
                if (n == 1) {
                    best_rel = r;
                    best_gen = g;
                    break;
                }
        }
        if (best_rel < 0)
            break;
        Word w = p.relators[best_rel];
        std::size_t pos = 0;
        while (std::abs(w[pos]) != best_gen)
            ++pos;
        std::rotate(w.begin(), w.begin() + pos, w.end());
        const int eps = w[0] > 0 ? 1 : -1;
        Word rest(w.begin() + 1, w.end());
        // g^eps rest = 1
        Word value = eps > 0 ? inverse(rest) : rest;
        Word value_inv = inverse(value);
        std::vector<Word> rels;
        for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
            if (r == best_rel)
                continue;
            Word nw;
            for (int l : p.relators[r]) {
                if (l == best_gen)
                    nw.insert(nw.end(), value.begin(), value.end());
                else if (l == -best_gen)
                    nw.insert(nw.end(), value_inv.begin(), value_inv.end());
                else
                    nw.push_back(l);
            }
            for (int &l : nw) {
                int a = std::abs(l);
                if (a > best_gen)
                    l = l > 0 ? l - 1 : l + 1;
            }
            rels.push_back(std::move(nw));
        }
        p.generators.erase(p.generators.begin() + (best_gen - 1));
        p.relators = std::move(rels);
        normalise(p);
    }
    return p;
}

std::string AbelianInvariants::to_string() const {
    std::string s;
    if (free_rank > 0)
        s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (auto t : torsion) {
        if (!s.empty())
            s += " + ";
        s += "Z" + std::to_string(t);
    }
    return s.empty() ? "0" : s;
}

FreeSplit split_free_factor(const GroupPresentation &p) {
    std::vector<char> used(p.generators.size(), 0);
    for (const auto &r : p.relators)
        for (int l : r)
            used[std::abs(l) - 1] = 1;
    FreeSplit fs;
    std::vector<int> remap(p.generators.size(), -1);
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        if (!used[g]) {
            ++fs.count;
            continue;
        }
        remap[g] = static_cast<int>(fs.reduced.generators.size());
        fs.reduced.generators.push_back(p.generators[g]);
    }
    for (const auto &r : p.relators) {
        Word nw;
        for (int l : r) {
            int g = remap[std::abs(l) - 1] + 1;
            nw.push_back(l > 0 ? g : -g);
        }
        fs.reduced.relators.push_back(std::move(nw));
    }
    return fs;
}

} // namespace sr

namespace sr {

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

// Diagonal of the Smith normal form; pivots chosen by minimal absolute value.
std::vector<mpz_class> smith_diagonal(Matrix m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                return diag;
            std::swap(m[t], m[pr]);
            for (auto &row : m)
                std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                mpz_class q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                mpz_class q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                m[t][j] += m[bad][j];
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

} // namespace

AbelianInvariants abelianization(const GroupPresentation &p) {
    const std::size_t cols = p.generators.size();
    Matrix m;
    for (const auto &r : p.relators) {
        std::vector<mpz_class> row(cols, 0);
        for (int l : r)
            row[std::abs(l) - 1] += l > 0 ? 1 : -1;
        if (std::any_of(row.begin(), row.end(), [](const mpz_class &x) { return x != 0; }))
            m.push_back(std::move(row));
    }
    auto diag = smith_diagonal(std::move(m), cols);
    AbelianInvariants ab;
    ab.free_rank = static_cast<int>(cols - diag.size());
    for (const auto &d : diag) {
        if (d == 1)
            continue;
        if (!d.fits_slong_p())
            throw Error("torsion coefficient " + d.get_str() + " exceeds 64 bits");
        ab.torsion.push_back(d.get_si());
    }
    return ab;
}

} // namespace sr
