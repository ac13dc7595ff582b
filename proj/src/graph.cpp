#include "reisner/graph.hpp"

#include "reisner/error.hpp"

#include <algorithm>
#include <string>

namespace reisner {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::SizeLimit: return "size_limit";
    case ErrorKind::NotCLSpace: return "not_cl_space";
    case ErrorKind::EmptyDomain: return "empty_domain";
    case ErrorKind::Parse: return "parse_error";
    }
    return "unknown";
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        fail(ErrorKind::SizeLimit, "vertex count " + std::to_string(n) + " outside [1, 24]");
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            fail(ErrorKind::InvalidArgument,
                 "edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" +
                     std::to_string(n));
        if (i == j) fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(i));
        adj_[i] |= 1u << j;
        adj_[j] |= 1u << i;
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n_ = g.n_;
    const std::uint32_t all = VertexSet::full(g.n_).bits();
    for (int v = 0; v < g.n_; ++v) c.adj_[v] = all & ~g.adj_[v] & ~(1u << v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) fail(ErrorKind::InvalidArgument, "induced subgraph of the empty vertex set");
    if (!s.subset_of(g.vertices())) fail(ErrorKind::InvalidArgument, "vertex set exceeds graph range");
    InducedSubgraph out{Graph{}, s.members()};
    out.graph.n_ = s.size();
    const auto& old = out.original_vertex;
    for (std::size_t a = 0; a < old.size(); ++a)
        for (std::size_t b = 0; b < old.size(); ++b)
            if (a != b && g.adjacent(old[a], old[b])) out.graph.adj_[a] |= 1u << b;
    return out;
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s.members())
        if (!(s - VertexSet::of({v})).subset_of(g.neighbors(v))) return false;
    return true;
}

bool is_stable(const Graph& g, VertexSet s) {
    for (int v : s.members())
        if (!(g.neighbors(v) & s).empty()) return false;
    return true;
}

namespace {

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    int best = -1;
    for (int u : (p | x).members()) {
        const int c = (p & g.neighbors(u)).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (int v : (p - g.neighbors(pivot)).members()) {
        const VertexSet nv = g.neighbors(v);
        bron_kerbosch(g, r | VertexSet::of({v}), p & nv, x & nv, out);
        p.erase(v);
        x.insert(v);
    }
}

int max_clique_rec(const Graph& g, VertexSet p, int size, int best) {
    if (p.empty()) return std::max(size, best);
    if (size + p.size() <= best) return best;
    const int v = p.front();
    best = max_clique_rec(g, p & g.neighbors(v), size + 1, best);
    VertexSet rest = p;
    rest.erase(v);
    return max_clique_rec(g, rest, size, best);
}

// Greedy coloring in the given order; returns the number of colors used.
int greedy_colors(const Graph& g, const std::vector<int>& order) {
    std::vector<VertexSet> classes;
    for (int v : order) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](VertexSet c) { return (c & g.neighbors(v)).empty(); });
        if (it == classes.end())
            classes.push_back(VertexSet::of({v}));
        else
            it->insert(v);
    }
    return static_cast<int>(classes.size());
}

bool colorable(const Graph& g, const std::vector<int>& order, std::size_t idx, std::vector<VertexSet>& classes,
               int used, int k) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    const int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
        if (!(classes[c] & g.neighbors(v)).empty()) continue;
        classes[c].insert(v);
        if (colorable(g, order, idx + 1, classes, std::max(used, c + 1), k)) return true;
        classes[c].erase(v);
    }
    return false;
}

int chromatic_with_lower_bound(const Graph& g, VertexSet within, int lower) {
    if (within.empty()) return 0;
    // Degree-descending order inside the subgraph, ties to the lowest index.
    std::vector<int> order = within.members();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return (g.neighbors(a) & within).size() > (g.neighbors(b) & within).size();
    });
    const int upper = greedy_colors(g, order);
    for (int k = lower; k < upper; ++k) {
        std::vector<VertexSet> classes(k);
        if (colorable(g, order, 0, classes, 0, k)) return k;
    }
    return upper;
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_stable_sets(const Graph& g) { return maximal_cliques(complement(g)); }

int clique_number_within(const Graph& g, VertexSet within) { return max_clique_rec(g, within, 0, 0); }

int chromatic_number_within(const Graph& g, VertexSet within) {
    return chromatic_with_lower_bound(g, within, clique_number_within(g, within));
}

int clique_number(const Graph& g) { return clique_number_within(g, g.vertices()); }

int chromatic_number(const Graph& g) { return chromatic_number_within(g, g.vertices()); }

PerfectnessVerdict is_perfect(const Graph& g) {
    if (g.n() > kMaxPerfectVertices)
        fail(ErrorKind::SizeLimit, "exhaustive perfectness check supports n <= 12, got " + std::to_string(g.n()));
    const std::uint32_t limit = 1u << g.n();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        const VertexSet s(mask);
        const int omega = clique_number_within(g, s);
        const int chi = chromatic_with_lower_bound(g, s, omega);
        if (omega != chi) return PerfectnessVerdict{false, s, omega, chi};
    }
    return PerfectnessVerdict{};
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

} // namespace reisner
