#include "sr/specs.hpp"

#include "sr/builders.hpp"
#include "sr/error.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sr {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

int to_int(const std::string &spec, const std::string &tok) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (tok.empty() || used != tok.size()) {
        auto col = spec.find(tok);
        throw ParseError("expected an integer, got '" + tok + "' in '" + spec + "'", 1,
                         col == std::string::npos ? 0 : static_cast<int>(col) + 1);
    }
    return v;
}

std::vector<int> to_ints(const std::string &spec, const std::string &list) {
    std::vector<int> out;
    for (const auto &t : split(list, ','))
        out.push_back(to_int(spec, t));
    return out;
}

// Whitespace-separated integers with # comments.
std::vector<int> read_numbers(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::vector<int> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != tok.size())
                throw ParseError("expected an integer, got '" + tok + "'", lineno,
                                 static_cast<int>(line.find(tok)) + 1);
            out.push_back(v);
        }
    }
    return out;
}

[[noreturn]] void bad_spec(const std::string &what, const std::string &spec) {
    throw ParseError("unknown " + what + " spec '" + spec + "'", 1, 1);
}

std::pair<std::string, std::string> head(const std::string &spec) {
    auto c = spec.find(':');
    if (c == std::string::npos)
        return {spec, ""};
    return {spec.substr(0, c), spec.substr(c + 1)};
}

} // namespace

HeapPtr parse_heap_spec(const std::string &spec) {
    auto [h, rest] = head(spec);
    if (h == "cyclic" || h == "dihedral") {
        int n = to_int(spec, rest);
        if (n < 1)
            throw ParseError("group order must be positive in '" + spec + "'", 1, static_cast<int>(h.size()) + 2);
        return h == "cyclic" ? cyclic_heap(n) : dihedral_heap(n);
    }
    if (!std::filesystem::is_regular_file(spec))
        bad_spec("heap", spec);
    auto v = read_numbers(spec);
    int n = 0;
    while (n * n < static_cast<int>(v.size()))
        ++n;
    if (n * n != static_cast<int>(v.size()) || n == 0)
        throw ParseError("group table in " + spec + " is not square", 1);
    std::vector<std::vector<int>> rows(n);
    for (int i = 0; i < n; ++i)
        rows[i].assign(v.begin() + i * n, v.begin() + (i + 1) * n);
    return std::make_shared<const FiniteHeap>(group_heap(FiniteGroup::from_table(rows)));
}

CoeffPtr parse_coeff_spec(const std::string &spec) {
    auto [h, rest] = head(spec);
    if (h == "cyclic")
        return std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(to_int(spec, rest)));
    if (h == "abelian")
        return std::make_shared<const AbelianGroup>(AbelianGroup(to_ints(spec, rest)));
    bad_spec("coefficient", spec);
}

Cochain2 parse_cocycle_spec(const std::string &spec, const HeapPtr &heap, const CoeffPtr &coeffs) {
    auto [h, rest] = head(spec);
    auto need = [&] {
        if (!heap || !coeffs)
            throw Error("cocycle '" + spec + "' needs --heap and --coeff");
    };
    if (h == "zero") {
        need();
        return zero_cochain(heap, coeffs);
    }
    if (h == "phi" || h == "psiD") {
        auto parts = split(rest, ':');
        if (parts.size() != 2)
            throw ParseError("expected " + h + ":n:i in '" + spec + "'", 1, 1);
        int n = to_int(spec, parts[0]), i = to_int(spec, parts[1]);
        return h == "phi" ? phi_i(n, i) : psi_i_dihedral(n, i);
    }
    if (h == "phivec" || h == "psivec") {
        // phivec:a0,... or phivec:n:a0,...
        auto parts = split(rest, ':');
        if (parts.size() > 2)
            throw ParseError("expected " + h + ":n:a0,... in '" + spec + "'", 1, 1);
        auto a = to_ints(spec, parts.back());
        if (parts.size() == 2 && to_int(spec, parts[0]) != static_cast<int>(a.size()))
            throw ParseError("vector length does not match n in '" + spec + "'", 1, static_cast<int>(h.size()) + 2);
        return h == "phivec" ? phi_vec(a) : psi_vec(a);
    }
    if (h == "ring") {
        auto parts = split(rest, ':');
        if (parts.size() != 2)
            throw ParseError("expected ring:n:a,b in '" + spec + "'", 1, 1);
        auto ab = to_ints(spec, parts[1]);
        if (ab.size() != 2)
            throw ParseError("expected two ring coefficients in '" + spec + "'", 1, 1);
        return ring_cocycle(to_int(spec, parts[0]), ab[0], ab[1]);
    }
    if (h == "cobdy") {
        need();
        auto f = to_ints(spec, rest);
        if (static_cast<int>(f.size()) != heap->size())
            throw ParseError("cobdy needs one value per heap element in '" + spec + "'", 1, 7);
        return coboundary(heap, coeffs, f);
    }
    if (!std::filesystem::is_regular_file(spec))
        bad_spec("cocycle", spec);
    need();
    auto v = read_numbers(spec);
    const std::size_t n = heap->size();
    if (v.size() != n * n * n)
        throw ParseError("cocycle table in " + spec + " needs " + std::to_string(n * n * n) + " values", 1);
    for (int &a : v)
        if (a < 0 || a >= coeffs->order())
            throw Error("cocycle table entry out of range in " + spec);
    return Cochain2(heap, coeffs, v);
}

std::vector<std::string> split_cocycle_list(const std::string &list) {
    std::vector<std::string> out;
    for (const auto &t : split(list, ',')) {
        bool numeric = !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-');
        if (numeric && !out.empty())
            out.back() += "," + t;
        else
            out.push_back(t);
    }
    return out;
}

RibbonDiagram build_from_spec(const std::string &spec) {
    auto [h, rest] = head(spec);
    if (h == "annulus" && rest.empty())
        return annulus();
    if (h == "disk" && rest.empty())
        return disk();
    if (h == "rings3" && rest.empty())
        return three_annuli_chain();
    if (h == "hopf" && rest.empty())
        return hopf_annuli();
    if (h == "bands") {
        auto mn = to_ints(spec, rest);
        if (mn.size() != 2 || mn[0] < 0 || mn[1] < 0)
            throw ParseError("expected bands:m,n in '" + spec + "'", 1, 7);
        return trivial_band_closure(mn[0], mn[1]);
    }
    if (h == "looped")
        return looped_band(to_int(spec, rest));
    if (h == "torus") {
        int k = to_int(spec, rest);
        if (k < 0)
            throw ParseError("torus:k needs k >= 0", 1, 7);
        return torus_T1(k);
    }
    if (h == "loops") {
        auto semi = rest.find(';');
        if (semi == std::string::npos)
            throw ParseError("expected loops:m1,...;k in '" + spec + "'", 1, 7);
        std::string ms = rest.substr(0, semi);
        auto twists = ms.empty() ? std::vector<int>{} : to_ints(spec, ms);
        return punctured_disk(twists, to_int(spec, rest.substr(semi + 1)));
    }
    bad_spec("builder", spec);
}

RibbonDiagram load_diagram(const std::string &arg) {
    if (std::filesystem::is_regular_file(arg))
        return read_srd(arg);
    return build_from_spec(arg);
}

} // namespace sr
