#include "sr/diagram.hpp"
#include "sr/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace sr {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string &line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

const char *crossing_ports[] = {"oi", "oo", "ui", "uo"};

std::string port_name(const Node &n, int slot) {
    return n.kind == NodeKind::Vertex ? std::to_string(slot + 1) : crossing_ports[slot];
}

struct NodeDecl {
    int index;
    int line;
};

} // namespace

RibbonDiagram parse_srd(const std::string &text) {
    RibbonDiagram d;
    std::map<std::string, NodeDecl> node_ids;
    std::map<std::string, int> edge_ids;
    std::map<std::string, int> other_ids;
    struct PendingEdge {
        Token a, b;
        int line;
    };
    std::vector<PendingEdge> edges;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    auto claim = [&](const Token &t, int ln) {
        if (node_ids.count(t.text) || edge_ids.count(t.text) || other_ids.count(t.text))
            throw ParseError("duplicate id '" + t.text + "'", ln, t.column);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        if (!header) {
            if (toks.size() != 2 || toks[0].text != "srd" || toks[1].text != "1")
                throw ParseError("expected header 'srd 1'", lineno, toks[0].column);
            header = true;
            continue;
        }
        const std::string &kw = toks[0].text;
        auto need = [&](std::size_t n) {
            if (toks.size() != n) {
                int col = toks.size() > n ? toks[n].column : static_cast<int>(line.size()) + 1;
                throw ParseError("'" + kw + "' expects " + std::to_string(n - 1) + " arguments", lineno, col);
            }
        };
        if (kw == "vertex") {
            need(2);
            claim(toks[1], lineno);
            node_ids[toks[1].text] = {d.add_vertex(toks[1].text), lineno};
        } else if (kw == "crossing") {
            need(3);
            claim(toks[1], lineno);
            if (toks[2].text != "0" && toks[2].text != "1")
                throw ParseError("side_order must be 0 or 1", lineno, toks[2].column);
            node_ids[toks[1].text] = {d.add_crossing(toks[2].text == "1", toks[1].text), lineno};
        } else if (kw == "edge") {
            need(4);
            claim(toks[1], lineno);
            edge_ids[toks[1].text] = lineno;
            edges.push_back({toks[2], toks[3], lineno});
        } else if (kw == "loop") {
            need(2);
            claim(toks[1], lineno);
            other_ids[toks[1].text] = lineno;
            d.add_loop(toks[1].text);
        } else if (kw == "disk") {
            need(2);
            claim(toks[1], lineno);
            other_ids[toks[1].text] = lineno;
            d.add_disk(toks[1].text);
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno, toks[0].column);
        }
    }
    if (!header)
        throw ParseError("missing header 'srd 1'", lineno + 1, 1);

    std::map<std::pair<int, int>, int> used;
    auto resolve = [&](const Token &t, int ln) {
        auto dot = t.text.rfind('.');
        if (dot == std::string::npos)
            throw ParseError("port must be written node.port", ln, t.column);
        std::string nid = t.text.substr(0, dot), pname = t.text.substr(dot + 1);
        auto it = node_ids.find(nid);
        if (it == node_ids.end())
            throw ParseError("unknown node '" + nid + "'", ln, t.column);
        const Node &n = d.nodes[it->second.index];
        int slot = -1;
        for (int s = 0; s < n.arity(); ++s)
            if (port_name(n, s) == pname)
                slot = s;
        if (slot < 0)
            throw ParseError("node '" + nid + "' has no port '" + pname + "'", ln,
                             t.column + static_cast<int>(dot) + 1);
        auto key = std::make_pair(it->second.index, slot);
        auto u = used.find(key);
        if (u != used.end())
            throw ParseError("port " + t.text + " already used on line " + std::to_string(u->second), ln,
                             t.column);
        used[key] = ln;
        return PortRef{it->second.index, slot};
    };
    for (const auto &e : edges) {
        PortRef a = resolve(e.a, e.line);
        PortRef b = resolve(e.b, e.line);
        d.connect(a, b);
    }
    for (const auto &[id, decl] : node_ids) {
        const Node &n = d.nodes[decl.index];
        for (int s = 0; s < n.arity(); ++s)
            if (!n.link[s].valid())
                throw ParseError("port " + id + "." + port_name(n, s) + " is not connected", decl.line, 1);
    }
    return d;
}

RibbonDiagram read_srd(const std::string &path) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_srd(ss.str());
}

std::string write_srd(const RibbonDiagram &d) {
    std::ostringstream os;
    os << "srd 1\n";
    for (const auto &n : d.nodes) {
        if (n.kind == NodeKind::Vertex)
            os << "vertex " << n.id << "\n";
        else
            os << "crossing " << n.id << " " << n.side_order << "\n";
    }
    int e = 0;
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        const auto &n = d.nodes[i];
        for (int s = 0; s < n.arity(); ++s) {
            PortRef q = n.link[s];
            if (!(PortRef{i, s} < q))
                continue;
            os << "edge e" << ++e << " " << n.id << "." << port_name(n, s) << " " << d.nodes[q.node].id << "."
               << port_name(d.nodes[q.node], q.slot) << "\n";
        }
    }
    for (const auto &l : d.loops)
        os << "loop " << l << "\n";
    for (const auto &k : d.disks)
        os << "disk " << k << "\n";
    return os.str();
}

} // namespace sr
