#include "chs/oracle.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>

namespace chs {

namespace {

using Mask = std::vector<char>;

// A perfect matching viewed through its edges. The matching edges are the
// nodes of a digraph: from matching edge (t, b), with t of color 0, a
// non-matching edge b-t' leads to the matching edge covering t'. Directed
// cycles are exactly the alternating cycles.
class MatchingView {
public:
    MatchingView(const HexGraph& g, const EdgeSet& matching) : g_(g) {
        in_matching_.assign(g.edge_count(), 0);
        mate_node_.assign(g.vertex_count(), -1);
        for (int e : edge_indices(g, matching)) {
            const auto& edge = g.edges()[static_cast<std::size_t>(e)];
            const int node = static_cast<int>(nodes_.size());
            const int t = g.color(edge.u) == 0 ? edge.u : edge.v;
            const int b = t == edge.u ? edge.v : edge.u;
            nodes_.push_back({e, t, b});
            in_matching_[static_cast<std::size_t>(e)] = 1;
            mate_node_[static_cast<std::size_t>(t)] = node;
            mate_node_[static_cast<std::size_t>(b)] = node;
        }
        if (2 * nodes_.size() != g.vertex_count() ||
            std::any_of(mate_node_.begin(), mate_node_.end(), [](int n) { return n < 0; }))
            throw MatchingError("not a perfect matching of the graph");
    }

    struct Node {
        int edge;
        int top;
        int bottom;
    };

    const HexGraph& graph() const { return g_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    bool in_matching(int e) const { return in_matching_[static_cast<std::size_t>(e)] != 0; }
    int node_of_vertex(int v) const { return mate_node_[static_cast<std::size_t>(v)]; }

    template <class F>
    void successors(int node, const Mask& alive, F&& f) const {
        const int b = nodes_[static_cast<std::size_t>(node)].bottom;
        for (const auto& inc : g_.incident(b)) {
            if (in_matching(inc.edge) || !alive[static_cast<std::size_t>(inc.neighbor)]) continue;
            f(node_of_vertex(inc.neighbor));
        }
    }

    bool hexagon_alternates(const HexGraph::Hexagon& hex) const {
        const auto& e = hex.edges;
        return (in_matching(e[0]) && in_matching(e[2]) && in_matching(e[4])) ||
               (in_matching(e[1]) && in_matching(e[3]) && in_matching(e[5]));
    }

    Cycle cycle_vertices(const std::vector<int>& cycle_nodes) const {
        Cycle out;
        for (int n : cycle_nodes) {
            out.push_back(nodes_[static_cast<std::size_t>(n)].top);
            out.push_back(nodes_[static_cast<std::size_t>(n)].bottom);
        }
        return out;
    }

private:
    const HexGraph& g_;
    std::vector<Node> nodes_;
    Mask in_matching_;
    std::vector<int> mate_node_;
};

Mask alive_without(const MatchingView& view, const EdgeSet& matching, const EdgeSet& subset) {
    for (const auto& s : subset)
        if (!matching.count(view.graph().canonical(s)))
            throw std::invalid_argument("edge " + to_string(s) + " is not in the matching");
    Mask alive(view.graph().vertex_count(), 1);
    for (int e : edge_indices(view.graph(), subset)) {
        const auto& edge = view.graph().edges()[static_cast<std::size_t>(e)];
        alive[static_cast<std::size_t>(edge.u)] = alive[static_cast<std::size_t>(edge.v)] = 0;
    }
    return alive;
}

bool has_alternating_cycle(const MatchingView& view, const Mask& alive) {
    // Iterative three-color DFS on the matching-edge digraph.
    const std::size_t n = view.nodes().size();
    std::vector<char> state(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] || !alive[static_cast<std::size_t>(view.nodes()[root].top)]) continue;
        std::vector<std::pair<int, std::vector<int>>> stack;
        auto push = [&](int node) {
            std::vector<int> next;
            view.successors(node, alive, [&](int s) { next.push_back(s); });
            state[static_cast<std::size_t>(node)] = 1;
            stack.emplace_back(node, std::move(next));
        };
        push(static_cast<int>(root));
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next.empty()) {
                state[static_cast<std::size_t>(node)] = 2;
                stack.pop_back();
                continue;
            }
            int s = next.back();
            next.pop_back();
            if (state[static_cast<std::size_t>(s)] == 1) return true;
            if (state[static_cast<std::size_t>(s)] == 0) push(s);
        }
    }
    return false;
}

// Shortest alternating cycle inside `alive`, as matching-digraph nodes.
std::vector<int> shortest_alternating_cycle(const MatchingView& view, const Mask& alive) {
    const int n = static_cast<int>(view.nodes().size());
    std::vector<int> best;
    for (int root = 0; root < n; ++root) {
        if (!alive[static_cast<std::size_t>(view.nodes()[static_cast<std::size_t>(root)].top)]) continue;
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::deque<int> queue{root};
        parent[static_cast<std::size_t>(root)] = -1;
        bool closed = false;
        while (!queue.empty() && !closed) {
            int u = queue.front();
            queue.pop_front();
            view.successors(u, alive, [&](int s) {
                if (closed) return;
                if (s == root) {
                    std::vector<int> cyc;
                    for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) cyc.push_back(x);
                    std::reverse(cyc.begin(), cyc.end());
                    if (best.empty() || cyc.size() < best.size()) best = std::move(cyc);
                    closed = true;
                } else if (parent[static_cast<std::size_t>(s)] == -2) {
                    parent[static_cast<std::size_t>(s)] = u;
                    queue.push_back(s);
                }
            });
        }
        if (best.size() == 3) break;  // hexagons are the shortest possible
    }
    return best;
}

bool hexagon_alive(const HexGraph::Hexagon& hex, const Mask& alive) {
    return std::all_of(hex.vertices.begin(), hex.vertices.end(),
                       [&](int v) { return alive[static_cast<std::size_t>(v)] != 0; });
}

// Greedy set of disjoint alternating hexagons inside `alive`: a lower bound
// on the number of edges any forcing set still needs.
std::size_t disjoint_hexagon_bound(const MatchingView& view, const Mask& alive, int* first_hexagon) {
    Mask used(alive.size(), 0);
    std::size_t count = 0;
    const auto& hexes = view.graph().hexagons();
    for (std::size_t h = 0; h < hexes.size(); ++h) {
        const auto& hex = hexes[h];
        if (!view.hexagon_alternates(hex) || !hexagon_alive(hex, alive)) continue;
        if (std::any_of(hex.vertices.begin(), hex.vertices.end(),
                        [&](int v) { return used[static_cast<std::size_t>(v)] != 0; }))
            continue;
        if (count == 0 && first_hexagon) *first_hexagon = static_cast<int>(h);
        for (int v : hex.vertices) used[static_cast<std::size_t>(v)] = 1;
        ++count;
    }
    return count;
}

class SubsetSearch {
public:
    explicit SubsetSearch(const MatchingView& view) : view_(view) {}

    std::vector<int> run() {
        Mask alive(view_.graph().vertex_count(), 1);
        for (std::size_t depth = disjoint_hexagon_bound(view_, alive, nullptr);; ++depth) {
            chosen_.clear();
            if (search(alive, depth)) return chosen_;
        }
    }

private:
    bool search(const Mask& alive, std::size_t depth) {
        auto reduced = pendant_elimination(view_.graph(), alive);
        if (reduced.isolated) throw std::logic_error("matching lost a vertex during pendant elimination");
        if (reduced.empty()) return true;
        if (depth == 0) return false;
        const Mask& rest = reduced.remaining;
        int hex = -1;
        if (disjoint_hexagon_bound(view_, rest, &hex) > depth) return false;

        std::vector<int> cycle_edges;
        if (hex >= 0) {
            const auto& h = view_.graph().hexagons()[static_cast<std::size_t>(hex)];
            for (int e : h.edges)
                if (view_.in_matching(e)) cycle_edges.push_back(e);
        } else {
            auto cyc = shortest_alternating_cycle(view_, rest);
            if (cyc.empty())
                throw std::logic_error("pendant elimination stalled but no alternating cycle exists");
            for (int n : cyc) cycle_edges.push_back(view_.nodes()[static_cast<std::size_t>(n)].edge);
        }
        for (int e : cycle_edges) {
            const auto& edge = view_.graph().edges()[static_cast<std::size_t>(e)];
            Mask next = rest;
            next[static_cast<std::size_t>(edge.u)] = next[static_cast<std::size_t>(edge.v)] = 0;
            chosen_.push_back(e);
            if (search(next, depth - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const MatchingView& view_;
    std::vector<int> chosen_;
};

std::vector<std::vector<int>> cycle_node_lists(const MatchingView& view, std::uint64_t limit) {
    // Each directed cycle is reported once, from its smallest node.
    const int n = static_cast<int>(view.nodes().size());
    Mask all(view.graph().vertex_count(), 1);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) view.successors(u, all, [&](int s) { succ[static_cast<std::size_t>(u)].push_back(s); });

    std::vector<std::vector<int>> out;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int root, int u) -> void {
        for (int s : succ[static_cast<std::size_t>(u)]) {
            if (s == root) {
                out.push_back(path);
                if (out.size() > limit) throw BudgetExceeded("too many alternating cycles");
            } else if (s > root && !on_path[static_cast<std::size_t>(s)]) {
                on_path[static_cast<std::size_t>(s)] = 1;
                path.push_back(s);
                self(self, root, s);
                path.pop_back();
                on_path[static_cast<std::size_t>(s)] = 0;
            }
        }
    };
    for (int root = 0; root < n; ++root) {
        path = {root};
        on_path[static_cast<std::size_t>(root)] = 1;
        dfs(dfs, root, root);
        on_path[static_cast<std::size_t>(root)] = 0;
    }
    return out;
}

class PackingSearch {
public:
    PackingSearch(std::vector<boost::dynamic_bitset<>> sets, std::size_t vertex_count, std::size_t min_cycle)
        : sets_(std::move(sets)), vertex_count_(vertex_count), min_cycle_(min_cycle) {}

    std::vector<std::size_t> run() {
        std::vector<std::size_t> cand(sets_.size());
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = i;
        std::stable_sort(cand.begin(), cand.end(),
                         [&](std::size_t a, std::size_t b) { return sets_[a].count() < sets_[b].count(); });
        std::vector<std::size_t> chosen;
        recurse(cand, chosen, 0);
        return best_;
    }

private:
    void recurse(const std::vector<std::size_t>& cand, std::vector<std::size_t>& chosen, std::size_t used) {
        if (chosen.size() > best_.size()) best_ = chosen;
        if (cand.empty()) return;
        const std::size_t bound = std::min(cand.size(), (vertex_count_ - used) / min_cycle_);
        if (chosen.size() + bound <= best_.size()) return;
        const std::size_t first = cand.front();
        std::vector<std::size_t> with;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (!sets_[cand[i]].intersects(sets_[first])) with.push_back(cand[i]);
        chosen.push_back(first);
        recurse(with, chosen, used + sets_[first].count());
        chosen.pop_back();
        std::vector<std::size_t> without(cand.begin() + 1, cand.end());
        recurse(without, chosen, used);
    }

    std::vector<boost::dynamic_bitset<>> sets_;
    std::size_t vertex_count_;
    std::size_t min_cycle_;
    std::vector<std::size_t> best_;
};

void backtrack_matchings(const HexGraph& g, Mask& alive, std::vector<int>& chosen,
                         const std::function<void(const std::vector<int>&)>& visit) {
    int v = -1;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) {
            v = static_cast<int>(i);
            break;
        }
    if (v < 0) {
        visit(chosen);
        return;
    }
    alive[static_cast<std::size_t>(v)] = 0;
    for (const auto& inc : g.incident(v)) {
        auto w = static_cast<std::size_t>(inc.neighbor);
        if (!alive[w]) continue;
        alive[w] = 0;
        chosen.push_back(inc.edge);
        backtrack_matchings(g, alive, chosen, visit);
        chosen.pop_back();
        alive[w] = 1;
    }
    alive[static_cast<std::size_t>(v)] = 1;
}

}  // namespace

bool forcing_by_pendant_elimination(const HexGraph& graph, const EdgeSet& matching, const EdgeSet& subset) {
    MatchingView view(graph, matching);
    return pendant_elimination(graph, alive_without(view, matching, subset)).empty();
}

bool forcing_by_alternating_cycles(const HexGraph& graph, const EdgeSet& matching, const EdgeSet& subset) {
    MatchingView view(graph, matching);
    return !has_alternating_cycle(view, alive_without(view, matching, subset));
}

bool is_forcing_set(const HexGraph& graph, const EdgeSet& matching, const EdgeSet& subset) {
    const bool by_pendant = forcing_by_pendant_elimination(graph, matching, subset);
    const bool by_cycles = forcing_by_alternating_cycles(graph, matching, subset);
    if (by_pendant != by_cycles) throw std::logic_error("pendant elimination and cycle test disagree");
    return by_pendant;
}

EdgeSet minimum_forcing_set_search(const HexGraph& graph, const EdgeSet& matching) {
    MatchingView view(graph, matching);
    return edge_labels(graph, SubsetSearch(view).run());
}

std::vector<Cycle> alternating_cycles(const HexGraph& graph, const EdgeSet& matching, std::uint64_t limit) {
    MatchingView view(graph, matching);
    std::vector<Cycle> out;
    for (const auto& nodes : cycle_node_lists(view, limit)) out.push_back(view.cycle_vertices(nodes));
    return out;
}

std::vector<Cycle> max_disjoint_alternating_cycles(const HexGraph& graph, const EdgeSet& matching,
                                                   std::uint64_t limit) {
    auto cycles = alternating_cycles(graph, matching, limit);
    std::vector<boost::dynamic_bitset<>> sets;
    for (const auto& c : cycles) {
        boost::dynamic_bitset<> b(graph.vertex_count());
        for (int v : c) b.set(static_cast<std::size_t>(v));
        sets.push_back(std::move(b));
    }
    PackingSearch search(std::move(sets), graph.vertex_count(), 6);
    std::vector<Cycle> out;
    for (std::size_t i : search.run()) out.push_back(cycles[i]);
    return out;
}

ForcingCertificate forcing_number(const HexGraph& graph, const EdgeSet& matching, const OracleOptions& options) {
    ForcingCertificate cert;
    cert.matching = matching_to_sequence(graph, matching);
    cert.witness_set = minimum_forcing_set_search(graph, matching);
    cert.forcing_number = cert.witness_set.size();
    cert.cycle_packing = max_disjoint_alternating_cycles(graph, matching, options.cycle_budget);
    if (cert.cycle_packing.size() != cert.forcing_number)
        throw std::logic_error("forcing number " + std::to_string(cert.forcing_number) +
                               " differs from disjoint alternating cycle count " +
                               std::to_string(cert.cycle_packing.size()) + " for matching " +
                               to_string(cert.matching));
    return cert;
}

Polynomial forcing_polynomial_bruteforce(const AnySpec& spec, const OracleOptions& options) {
    const Integer total = count_matchings(spec);
    if (total > options.matching_budget)
        throw BudgetExceeded(to_string(spec) + " has " + total.str() + " perfect matchings, budget is " +
                             std::to_string(options.matching_budget));
    const bool empty_spec = std::holds_alternative<ChsSpec>(spec) && std::get<ChsSpec>(spec).empty();
    if (empty_spec) return Polynomial::one();
    const HexGraph graph = build_graph(spec);
    std::map<std::size_t, Integer> counts;
    for_each_sequence(spec, [&](const MatchingSequence& seq) {
        const EdgeSet m = sequence_to_matching(graph, seq);
        ++counts[minimum_forcing_set_search(graph, m).size()];
        return true;
    });
    Polynomial out;
    for (const auto& [f, n] : counts) out += Polynomial::monomial(n, f);
    return out;
}

std::set<std::size_t> forcing_spectrum(const AnySpec& spec, const OracleOptions& options) {
    return support(forcing_polynomial_bruteforce(spec, options));
}

std::optional<HexId> cycle_hexagon(const HexGraph& graph, const Cycle& cycle) {
    if (cycle.size() != 6) return std::nullopt;
    std::vector<int> sorted(cycle);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& hex : graph.hexagons()) {
        std::vector<int> hv(hex.vertices.begin(), hex.vertices.end());
        std::sort(hv.begin(), hv.end());
        if (hv == sorted) return hex.id;
    }
    return std::nullopt;
}

std::vector<EdgeSet> enumerate_perfect_matchings(const HexGraph& graph, std::uint64_t limit) {
    std::vector<EdgeSet> out;
    Mask alive(graph.vertex_count(), 1);
    std::vector<int> chosen;
    backtrack_matchings(graph, alive, chosen, [&](const std::vector<int>& edges) {
        out.push_back(edge_labels(graph, edges));
        if (out.size() > limit) throw BudgetExceeded("too many perfect matchings");
        return true;
    });
    return out;
}

std::uint64_t count_perfect_matchings(const HexGraph& graph, const std::vector<char>& alive, std::uint64_t cap) {
    struct Stop {};
    std::uint64_t n = 0;
    Mask a = alive;
    std::vector<int> chosen;
    try {
        backtrack_matchings(graph, a, chosen, [&](const std::vector<int>&) {
            if (++n >= cap) throw Stop{};
            return true;
        });
    } catch (const Stop&) {
    }
    return n;
}

}  // namespace chs
