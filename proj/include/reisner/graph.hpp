#pragma once

// Undirected simple graphs on at most 24 vertices, with adjacency stored as
// one machine word per vertex. Vertices are 0-based throughout.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace reisner {

inline constexpr int kMaxVertices = 24;
inline constexpr int kMaxPerfectVertices = 12;

class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

    static VertexSet full(int n) {
        return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    void insert(int v) { bits_ |= 1u << v; }
    void erase(int v) { bits_ &= ~(1u << v); }
    // Smallest member; undefined on the empty set.
    int front() const { return std::countr_zero(bits_); }
    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    std::vector<int> members() const;

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  private:
    std::uint32_t bits_ = 0;
};

using Edge = std::pair<int, int>;

struct InducedSubgraph;

class Graph {
  public:
    // Throws Error{SizeLimit} for n outside [1, 24] and Error{InvalidArgument}
    // for out-of-range endpoints or self-loops. Duplicate edges collapse.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    int edge_count() const;
    // Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    Graph() = default;
    friend Graph complement(const Graph& g);
    friend InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

inline Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // original_vertex[i] is the vertex of the parent graph relabeled to i.
    std::vector<int> original_vertex;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable(const Graph& g, VertexSet s);

// Inclusion-maximal cliques, ascending by bitset value.
std::vector<VertexSet> maximal_cliques(const Graph& g);
std::vector<VertexSet> maximal_stable_sets(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

// Same quantities restricted to the subgraph induced by `within`, without
// materializing it. clique_number_within of the empty set is 0.
int clique_number_within(const Graph& g, VertexSet within);
int chromatic_number_within(const Graph& g, VertexSet within);

struct PerfectnessVerdict {
    bool perfect = true;
    // Vertex set of an induced subgraph with clique number != chromatic number.
    std::optional<VertexSet> witness;
    int witness_clique_number = 0;
    int witness_chromatic_number = 0;
};

// Exhaustive check of clique number == chromatic number on every nonempty
// induced subgraph. Limited to n <= 12 (Error{SizeLimit} above that). The
// witness is the violating subset with the smallest bitset value.
PerfectnessVerdict is_perfect(const Graph& g);

// Cycle C_n on vertices 0..n-1; handy for tests and the CLI corpus.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);

} // namespace reisner
