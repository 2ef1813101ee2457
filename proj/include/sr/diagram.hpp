#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace sr {

enum class NodeKind { Vertex, Crossing };

// Crossing port slots.
enum : int { OI = 0, OO = 1, UI = 2, UO = 3 };

struct PortRef {
    int node = -1;
    int slot = -1;

    bool valid() const { return node >= 0; }
    auto operator<=>(const PortRef &) const = default;
};

struct Node {
    NodeKind kind = NodeKind::Vertex;
    std::string id;
    // Crossings only: 0 reads (u,v) as (over-left, over-right) seen along oi->oo, 1 swaps them.
    int side_order = 0;
    std::array<PortRef, 4> link{};

    int arity() const { return kind == NodeKind::Vertex ? 3 : 4; }
};

// Ribbon graph with crossings. Vertex ports 0,1,2 are counterclockwise.
// Every port is linked to exactly one partner port; the link is symmetric.
struct RibbonDiagram {
    std::vector<Node> nodes;
    std::vector<std::string> loops; // free closed ribbons
    std::vector<std::string> disks;

    int add_vertex(std::string id = {});
    int add_crossing(int side_order, std::string id = {});
    void connect(PortRef a, PortRef b);
    // Unlinks a and its partner.
    void disconnect(PortRef a);
    void add_loop(std::string id = {});
    void add_disk(std::string id = {});

    PortRef partner(PortRef p) const { return nodes[p.node].link[p.slot]; }
    int crossing_count() const;
    int vertex_count() const;
    int edge_count() const; // linked port pairs plus free loops

    // Throws sr::Error on a dangling or asymmetric link.
    void check_links() const;
    // Renumbers ids to v1.., c1.., l1.., d1.. in current order.
    void relabel();

    bool operator==(const RibbonDiagram &o) const;
};

// Edge between two ports (a < b, read a -> b), or a free loop.
struct EdgeRef {
    PortRef a, b;
    int loop = -1;
};

// Port edges in port order, then loops. Matches the e1.. numbering of write_srd.
std::vector<EdgeRef> edges(const RibbonDiagram &d);

// Crossing normalisation: reversing the over or under direction and flipping side_order
// leaves every coloring relation unchanged.
void reverse_over(RibbonDiagram &d, int crossing);
void reverse_under(RibbonDiagram &d, int crossing);

// Whether the projection (crossings as 4-valent vertices, with the cyclic port order fixed by
// side_order) is a plane graph. Builders and moves must keep this true.
bool is_planar(const RibbonDiagram &d);

// Counterclockwise successor of a slot around its node in the projection.
int ccw_next(const Node &n, int slot);
// Faces of the projection as dart cycles; dart p leaves p.node through p.slot and the face lies
// to its right.
std::vector<std::vector<PortRef>> faces(const RibbonDiagram &d);

struct ComponentSummary {
    int euler = 0;
    int boundaries = 0;
    int genus = 0;
    bool operator==(const ComponentSummary &) const = default;
};

struct TopologySummary {
    std::vector<ComponentSummary> components;

    int nu() const { return static_cast<int>(components.size()); }
    int total_boundaries() const;
    int total_genus() const;
    int total_euler() const;
    bool operator==(const TopologySummary &) const = default;
};

// Under-passage of a boundary component at a crossing.
struct BoundaryEvent {
    int crossing = -1;
    bool along_under = true; // travels ui -> uo
    int arc_before = -1;
    int arc_after = -1;
};

struct BoundaryComponent {
    int surface = -1;
    std::vector<PortRef> arrivals; // cyclic walk, starting just after an event when there is one
    std::vector<BoundaryEvent> events;
    std::vector<int> arcs; // arc ids in walk order
};

// Relation data at one crossing: z = T(x,u,v), w = T(y,u,v).
struct CrossingArcs {
    int x, y, z, w, u, v;
    int over_surface;
    int under_surface;
};

struct BoundaryStructure {
    int arc_count = 0;
    std::vector<int> arc_surface;
    std::vector<BoundaryComponent> components;
    std::vector<CrossingArcs> crossings; // indexed like nodes; vertices hold -1
    std::vector<int> crossing_index;      // node -> index into crossings or -1
    int surfaces = 0;
    std::vector<int> disk_arc; // arc generator of each disk atom
    std::vector<int> port_arc; // node*4+slot -> arc of the strand arriving there

    int arc_at(PortRef p) const { return port_arc[p.node * 4 + p.slot]; }
};

// Surface component of every port, components ordered by their smallest port, then loops, then disks.
std::vector<int> surface_components(const RibbonDiagram &d, int *count = nullptr);

BoundaryStructure boundary(const RibbonDiagram &d);
TopologySummary validate(const RibbonDiagram &d);

// .srd text format
RibbonDiagram parse_srd(const std::string &text);
RibbonDiagram read_srd(const std::string &path);
std::string write_srd(const RibbonDiagram &d);

std::ostream &operator<<(std::ostream &os, const TopologySummary &s);

} // namespace sr
