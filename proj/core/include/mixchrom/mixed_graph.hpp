#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mixchrom {

using Vertex = std::size_t;

// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge between(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    Arc reversed() const { return {head, tail}; }
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

using Element = std::variant<Edge, Arc>;

/// A graph with undirected edges and directed arcs on named vertices.
///
/// Loops and duplicate elements are rejected. A vertex pair may carry an edge
/// and one or both arcs at once; their coloring constraints then conjoin.
class MixedGraph {
public:
    MixedGraph() = default;

    Vertex add_vertex(std::string name);
    void add_edge(Vertex u, Vertex v);
    void add_arc(Vertex tail, Vertex head);
    void add_edge(std::string_view u, std::string_view v) { add_edge(vertex(u), vertex(v)); }
    void add_arc(std::string_view tail, std::string_view head) { add_arc(vertex(tail), vertex(head)); }

    std::size_t vertex_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Vertex v) const { return names_.at(v); }
    std::optional<Vertex> find(std::string_view name) const;
    // Throws GraphError for an unknown name.
    Vertex vertex(std::string_view name) const;

    const std::set<Edge>& edges() const noexcept { return edges_; }
    const std::set<Arc>& arcs() const noexcept { return arcs_; }
    bool has_edge(Vertex u, Vertex v) const { return edges_.contains(Edge::between(u, v)); }
    bool has_arc(Vertex tail, Vertex head) const { return arcs_.contains(Arc{tail, head}); }
    bool contains(const Element& element) const;

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::string> names_;
    std::set<Edge> edges_;
    std::set<Arc> arcs_;
};

std::string describe(const MixedGraph& g, const Element& element);

/// Arc-free graph on the same vertices with {u,v} present whenever u and v
/// are joined by an edge or an arc in either direction.
MixedGraph underlying(const MixedGraph& g);

/// Merges the endpoints of `element` into one vertex that takes the smaller
/// of the two indices; later vertices shift down by one. The merged name is
/// the concatenation of the two names in sorted order. Loops are dropped and
/// parallel copies merged; anti-parallel arcs survive.
MixedGraph contract(const MixedGraph& g, const Element& element);
Vertex merged_vertex(const Element& element);

MixedGraph delete_element(const MixedGraph& g, const Element& element);
MixedGraph delete_vertex(const MixedGraph& g, Vertex v);
MixedGraph reverse_arc(const MixedGraph& g, const Arc& arc);

// True iff the digraph formed by the arcs alone has a directed cycle.
bool arcs_have_cycle(const MixedGraph& g);

/// Quotient of a graph by a partition of its vertices into blocks that are
/// each connected in the underlying graph.
struct Flat {
    // Sorted blocks, ordered by smallest member.
    std::vector<std::vector<Vertex>> blocks;
    // Quotient vertex i represents blocks[i].
    MixedGraph quotient;
    // Quotient vertices whose block has two or more members, ascending.
    std::vector<Vertex> contracted;

    bool is_contracted(Vertex v) const;
    friend bool operator==(const Flat&, const Flat&) = default;
};

// Throws GraphError if `blocks` is not a partition into connected blocks.
Flat make_flat(const MixedGraph& g, std::vector<std::vector<Vertex>> blocks);

Flat trivial_flat(const MixedGraph& g);

/// Every flat once: ordered by block count descending, then by the block
/// lists compared lexicographically.
std::vector<Flat> enumerate_flats(const MixedGraph& g);

std::string describe_partition(const MixedGraph& g, const Flat& flat);

/// An acyclic assignment of directions to the edges of an arc-free graph.
struct Orientation {
    MixedGraph graph;
    // directed[i] orients the i-th edge of graph.edges() in iteration order.
    std::vector<Arc> directed;

    // Whether the edge {from, to} is directed from -> to.
    bool directs(Vertex from, Vertex to) const;
    friend bool operator==(const Orientation&, const Orientation&) = default;
};

bool is_acyclic(const Orientation& sigma);

// Throws GraphError if h has arcs. An edgeless graph yields one empty orientation.
std::vector<Orientation> enumerate_acyclic_orientations(const MixedGraph& h);

std::string describe(const Orientation& sigma);

/// Tails of quotient arcs whose endpoints sigma orients against the arc:
/// { v : v->w in A(quotient) and sigma directs {v,w} as w->v }, ascending.
std::vector<Vertex> tails(const Flat& flat, const Orientation& sigma);

} // namespace mixchrom
