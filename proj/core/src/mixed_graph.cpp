#include "mixchrom/mixed_graph.hpp"

#include "mixchrom/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mixchrom {

Vertex MixedGraph::add_vertex(std::string name) {
    if (name.empty()) {
        throw GraphError("empty vertex name");
    }
    if (find(name)) {
        throw GraphError("duplicate vertex '" + name + "'");
    }
    names_.push_back(std::move(name));
    return names_.size() - 1;
}

void MixedGraph::check_vertex(Vertex v) const {
    if (v >= names_.size()) {
        throw GraphError("vertex index " + std::to_string(v) + " out of range");
    }
}

void MixedGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw GraphError("loop edge at '" + names_[u] + "'");
    }
    if (!edges_.insert(Edge::between(u, v)).second) {
        throw GraphError("duplicate edge " + names_[u] + " " + names_[v]);
    }
}

void MixedGraph::add_arc(Vertex tail, Vertex head) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head) {
        throw GraphError("loop arc at '" + names_[tail] + "'");
    }
    if (!arcs_.insert(Arc{tail, head}).second) {
        throw GraphError("duplicate arc " + names_[tail] + " " + names_[head]);
    }
}

std::optional<Vertex> MixedGraph::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<Vertex>(it - names_.begin());
}

Vertex MixedGraph::vertex(std::string_view name) const {
    if (auto v = find(name)) {
        return *v;
    }
    throw GraphError("unknown vertex '" + std::string(name) + "'");
}

bool MixedGraph::contains(const Element& element) const {
    return std::visit(
        [this](const auto& el) {
            using T = std::decay_t<decltype(el)>;
            if constexpr (std::is_same_v<T, Edge>) {
                return edges_.contains(Edge::between(el.u, el.v));
            } else {
                return arcs_.contains(el);
            }
        },
        element);
}

std::string describe(const MixedGraph& g, const Element& element) {
    if (const auto* e = std::get_if<Edge>(&element)) {
        return g.name(e->u) + " -- " + g.name(e->v);
    }
    const auto& a = std::get<Arc>(element);
    return g.name(a.tail) + " -> " + g.name(a.head);
}

MixedGraph underlying(const MixedGraph& g) {
    MixedGraph h;
    for (const auto& name : g.names()) {
        h.add_vertex(name);
    }
    std::set<Edge> edges(g.edges());
    for (const auto& a : g.arcs()) {
        edges.insert(Edge::between(a.tail, a.head));
    }
    for (const auto& e : edges) {
        h.add_edge(e.u, e.v);
    }
    return h;
}

namespace {

// Rebuilds g on the vertices of `names`, sending parent vertex v to map[v].
// Elements whose endpoints collapse are dropped; duplicates merge.
MixedGraph rebuild(const MixedGraph& g, std::vector<std::string> names, const std::vector<Vertex>& map) {
    MixedGraph out;
    for (auto& name : names) {
        out.add_vertex(std::move(name));
    }
    std::set<Edge> edges;
    for (const auto& e : g.edges()) {
        if (map[e.u] != map[e.v]) {
            edges.insert(Edge::between(map[e.u], map[e.v]));
        }
    }
    std::set<Arc> arcs;
    for (const auto& a : g.arcs()) {
        if (map[a.tail] != map[a.head]) {
            arcs.insert(Arc{map[a.tail], map[a.head]});
        }
    }
    for (const auto& e : edges) {
        out.add_edge(e.u, e.v);
    }
    for (const auto& a : arcs) {
        out.add_arc(a.tail, a.head);
    }
    return out;
}

std::string merged_name(std::vector<std::string> parts, const std::vector<std::string>& taken) {
    std::sort(parts.begin(), parts.end());
    std::string name;
    for (const auto& p : parts) {
        name += p;
    }
    // Concatenation can collide with an unrelated vertex ("a"+"bc" vs "abc").
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
        name += '_';
    }
    return name;
}

void require(const MixedGraph& g, const Element& element) {
    if (!g.contains(element)) {
        throw GraphError(std::holds_alternative<Edge>(element) ? "no such edge" : "no such arc");
    }
}

std::pair<Vertex, Vertex> endpoints(const Element& element) {
    if (const auto* e = std::get_if<Edge>(&element)) {
        return {e->u, e->v};
    }
    const auto& a = std::get<Arc>(element);
    return {a.tail, a.head};
}

} // namespace

Vertex merged_vertex(const Element& element) {
    auto [a, b] = endpoints(element);
    return std::min(a, b);
}

MixedGraph contract(const MixedGraph& g, const Element& element) {
    require(g, element);
    auto [a, b] = endpoints(element);
    const Vertex keep = std::min(a, b);
    const Vertex drop = std::max(a, b);

    std::vector<std::string> others;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != a && v != b) {
            others.push_back(g.name(v));
        }
    }
    std::vector<std::string> names;
    std::vector<Vertex> map(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == drop) {
            map[v] = keep;
            continue;
        }
        map[v] = names.size();
        names.push_back(v == keep ? merged_name({g.name(a), g.name(b)}, others) : g.name(v));
    }
    return rebuild(g, std::move(names), map);
}

MixedGraph delete_element(const MixedGraph& g, const Element& element) {
    require(g, element);
    const Element target = std::holds_alternative<Edge>(element)
                               ? Element(Edge::between(std::get<Edge>(element).u, std::get<Edge>(element).v))
                               : element;
    MixedGraph out;
    for (const auto& name : g.names()) {
        out.add_vertex(name);
    }
    for (const auto& e : g.edges()) {
        if (Element(e) != target) {
            out.add_edge(e.u, e.v);
        }
    }
    for (const auto& arc : g.arcs()) {
        if (Element(arc) != target) {
            out.add_arc(arc.tail, arc.head);
        }
    }
    return out;
}

MixedGraph delete_vertex(const MixedGraph& g, Vertex v) {
    if (v >= g.vertex_count()) {
        throw GraphError("no such vertex");
    }
    MixedGraph out;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (w != v) {
            out.add_vertex(g.name(w));
        }
    }
    auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
    for (const auto& e : g.edges()) {
        if (e.u != v && e.v != v) {
            out.add_edge(shift(e.u), shift(e.v));
        }
    }
    for (const auto& a : g.arcs()) {
        if (a.tail != v && a.head != v) {
            out.add_arc(shift(a.tail), shift(a.head));
        }
    }
    return out;
}

MixedGraph reverse_arc(const MixedGraph& g, const Arc& arc) {
    MixedGraph out = delete_element(g, arc);
    if (!out.has_arc(arc.head, arc.tail)) {
        out.add_arc(arc.head, arc.tail);
    }
    return out;
}

namespace {

bool has_cycle(std::size_t n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<Vertex>> out(n);
    std::vector<std::size_t> in_degree(n, 0);
    for (const auto& a : arcs) {
        out[a.tail].push_back(a.head);
        ++in_degree[a.head];
    }
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        if (in_degree[v] == 0) {
            stack.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++removed;
        for (Vertex w : out[v]) {
            if (--in_degree[w] == 0) {
                stack.push_back(w);
            }
        }
    }
    return removed != n;
}

} // namespace

bool arcs_have_cycle(const MixedGraph& g) {
    return has_cycle(g.vertex_count(), std::vector<Arc>(g.arcs().begin(), g.arcs().end()));
}

bool Flat::is_contracted(Vertex v) const {
    return std::binary_search(contracted.begin(), contracted.end(), v);
}

namespace {

bool connected_in(const std::vector<std::vector<Vertex>>& adjacency, const std::vector<Vertex>& block) {
    std::vector<bool> inside(adjacency.size(), false);
    for (Vertex v : block) {
        inside[v] = true;
    }
    std::vector<bool> seen(adjacency.size(), false);
    std::vector<Vertex> stack{block.front()};
    seen[block.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex w : adjacency[v]) {
            if (inside[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == block.size();
}

std::vector<std::vector<Vertex>> adjacency_of(const MixedGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    const MixedGraph h = underlying(g);
    for (const auto& e : h.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

} // namespace

Flat make_flat(const MixedGraph& g, std::vector<std::vector<Vertex>> blocks) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> map(n, n);
    for (auto& block : blocks) {
        if (block.empty()) {
            throw GraphError("empty block in flat");
        }
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks.begin(), blocks.end());
    const auto adjacency = adjacency_of(g);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex v : blocks[i]) {
            if (v >= n || map[v] != n) {
                throw GraphError("blocks do not partition the vertex set");
            }
            map[v] = i;
        }
        if (!connected_in(adjacency, blocks[i])) {
            throw GraphError("block is not connected");
        }
    }
    if (std::find(map.begin(), map.end(), n) != map.end()) {
        throw GraphError("blocks do not partition the vertex set");
    }

    Flat flat;
    std::vector<Vertex> contracted;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& block = blocks[i];
        if (block.size() == 1) {
            names.push_back(g.name(block.front()));
            continue;
        }
        contracted.push_back(i);
        std::vector<std::string> parts;
        for (Vertex v : block) {
            parts.push_back(g.name(v));
        }
        std::vector<std::string> singles;
        for (const auto& other : blocks) {
            if (other.size() == 1) {
                singles.push_back(g.name(other.front()));
            }
        }
        names.push_back(merged_name(std::move(parts), singles));
    }
    flat.quotient = rebuild(g, std::move(names), map);
    flat.blocks = std::move(blocks);
    flat.contracted = std::move(contracted);
    return flat;
}

Flat trivial_flat(const MixedGraph& g) {
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        blocks.push_back({v});
    }
    return make_flat(g, std::move(blocks));
}

std::vector<Flat> enumerate_flats(const MixedGraph& g) {
    const std::size_t n = g.vertex_count();
    const auto adjacency = adjacency_of(g);
    std::vector<std::vector<std::vector<Vertex>>> partitions;
    std::vector<std::vector<Vertex>> current;
    std::vector<bool> used(n, false);

    // The block holding the smallest unused vertex is grown from every
    // connected subset of the unused vertices that contains it.
    std::function<void()> recurse = [&]() {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            partitions.push_back(current);
            return;
        }
        const Vertex root = static_cast<Vertex>(first - used.begin());
        std::vector<Vertex> candidates;
        for (Vertex v = root + 1; v < n; ++v) {
            if (!used[v]) {
                candidates.push_back(v);
            }
        }
        const std::size_t subsets = std::size_t{1} << candidates.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<Vertex> block{root};
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (mask >> i & 1U) {
                    block.push_back(candidates[i]);
                }
            }
            if (!connected_in(adjacency, block)) {
                continue;
            }
            for (Vertex v : block) {
                used[v] = true;
            }
            current.push_back(block);
            recurse();
            current.pop_back();
            for (Vertex v : block) {
                used[v] = false;
            }
        }
    };
    recurse();

    for (auto& p : partitions) {
        std::sort(p.begin(), p.end());
    }
    std::sort(partitions.begin(), partitions.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<Flat> flats;
    flats.reserve(partitions.size());
    for (auto& p : partitions) {
        flats.push_back(make_flat(g, std::move(p)));
    }
    return flats;
}

std::string describe_partition(const MixedGraph& g, const Flat& flat) {
    std::string out;
    for (const auto& block : flat.blocks) {
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += g.name(block[i]);
        }
        out += '}';
    }
    return out;
}

bool Orientation::directs(Vertex from, Vertex to) const {
    return std::find(directed.begin(), directed.end(), Arc{from, to}) != directed.end();
}

bool is_acyclic(const Orientation& sigma) {
    return !has_cycle(sigma.graph.vertex_count(), sigma.directed);
}

std::vector<Orientation> enumerate_acyclic_orientations(const MixedGraph& h) {
    if (!h.arcs().empty()) {
        throw GraphError("orientations are defined for arc-free graphs");
    }
    const std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    const std::size_t n = h.vertex_count();
    std::vector<std::vector<Vertex>> out(n);
    std::vector<Arc> chosen;
    std::vector<Orientation> result;

    auto reaches = [&](Vertex from, Vertex to) {
        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) {
                return true;
            }
            for (Vertex w : out[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return false;
    };

    std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == edges.size()) {
            result.push_back(Orientation{h, chosen});
            return;
        }
        for (Arc a : {Arc{edges[i].u, edges[i].v}, Arc{edges[i].v, edges[i].u}}) {
            // a closes a cycle iff its head already reaches its tail
            if (reaches(a.head, a.tail)) {
                continue;
            }
            out[a.tail].push_back(a.head);
            chosen.push_back(a);
            recurse(i + 1);
            chosen.pop_back();
            out[a.tail].pop_back();
        }
    };
    recurse(0);
    return result;
}

std::string describe(const Orientation& sigma) {
    std::string out;
    for (std::size_t i = 0; i < sigma.directed.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += sigma.graph.name(sigma.directed[i].tail) + "->" + sigma.graph.name(sigma.directed[i].head);
    }
    return out;
}

std::vector<Vertex> tails(const Flat& flat, const Orientation& sigma) {
    std::set<Vertex> result;
    for (const auto& a : flat.quotient.arcs()) {
        if (sigma.directs(a.head, a.tail)) {
            result.insert(a.tail);
        }
    }
    return {result.begin(), result.end()};
}

} // namespace mixchrom
