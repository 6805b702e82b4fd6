#pragma once

// Explicit labeled graphs of constructable hexagonal systems.
//
// Edges are named after the hexagon position they bound. e_{i,j} is the left
// vertical edge of C_{i,j}; l_{i,j} and r_{i,j} are its two top obliques,
// left then right. The remaining three edges of C_{i,j} are e_{i,j-1}, l_{i+1,j-1}
// and r_{i+1,j}, so every physical edge carries exactly one name per half.
// In a one-turning system the lower half uses primed names in its own
// (unflipped) frame, and edges on turning-row hexagons keep the upper name.

#include "chs/spec.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace chs {

enum class Half : std::uint8_t { upper, lower };
enum class EdgeKind : std::uint8_t { e, l, r };

struct EdgeLabel {
    Half half = Half::upper;
    EdgeKind kind = EdgeKind::e;
    int row = 0;
    int col = 0;
    friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

struct HexId {
    Half half = Half::upper;
    int row = 0;
    int col = 0;
    friend auto operator<=>(const HexId&, const HexId&) = default;
};

/// "e_{5,4}", "r'_{2,3}".
std::string to_string(const EdgeLabel& label);
/// "C_{1,1}", "C'_{2,3}".
std::string to_string(const HexId& id);
/// Inverse of to_string; also accepts "e5,4" style without braces.
EdgeLabel parse_edge_label(const std::string& text);

using EdgeSet = std::set<EdgeLabel>;

/// Integer lattice point. Hexagon C_{i,j} has its center at
/// (-2(j-1)-(i-1), -3(i-1)); corners sit at (+-1, +-1) and (0, +-2).
struct VertexKey {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

class HexGraph {
public:
    struct Edge {
        int u = 0;
        int v = 0;
        EdgeLabel label;
    };
    struct Incidence {
        int neighbor = 0;
        int edge = 0;
    };
    struct Hexagon {
        HexId id;
        /// Edge indices in the cyclic order of the labeling identity.
        std::array<int, 6> edges{};
        /// edges[i] joins vertices[i] and vertices[(i+1)%6].
        std::array<int, 6> vertices{};
    };

    const AnySpec& spec() const { return spec_; }
    bool turning() const { return std::holds_alternative<TurningChsSpec>(spec_); }

    std::size_t vertex_count() const { return keys_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<VertexKey>& vertices() const { return keys_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Hexagon>& hexagons() const { return hexagons_; }

    /// 0 for vertices that are the top corner of some lattice hexagon,
    /// 1 for bottom corners. Every edge joins the two classes.
    int color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
    std::span<const Incidence> incident(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

    std::optional<int> find_vertex(const VertexKey& key) const;
    /// Accepts canonical and non-canonical names (a lower-half name of a
    /// turning-row edge resolves to the same edge).
    std::optional<int> find_edge(const EdgeLabel& label) const;
    const Hexagon& hexagon(const HexId& id) const;
    bool has_hexagon(const HexId& id) const;

    /// Canonical label of the physical edge named by `label`.
    EdgeLabel canonical(const EdgeLabel& label) const;

    /// Vertex keys of the two ends of `label` in this graph's frame, whether
    /// or not the edge belongs to the graph.
    std::pair<VertexKey, VertexKey> endpoints(const EdgeLabel& label) const;

private:
    friend HexGraph build_graph(const AnySpec& spec);

    AnySpec spec_;
    std::vector<VertexKey> keys_;
    std::vector<int> colors_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<Hexagon> hexagons_;
    std::map<VertexKey, int> vertex_index_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::map<HexId, std::size_t> hexagon_index_;
};

HexGraph build_graph(const AnySpec& spec);
inline HexGraph build_graph(const ChsSpec& spec) { return build_graph(AnySpec{spec}); }
inline HexGraph build_graph(const TurningChsSpec& spec) { return build_graph(AnySpec{spec}); }

/// Iterated pendant elimination on the subgraph given by the alive masks:
/// while some alive vertex has exactly one alive edge to an alive neighbor,
/// that edge is forced and both ends are removed. `remaining` marks the
/// vertices left over; `isolated` is set when an alive vertex ran out of
/// edges (so the subgraph has no perfect matching).
struct PendantResult {
    std::vector<int> forced_edges;
    std::vector<char> remaining;
    bool isolated = false;
    bool empty() const;
};
PendantResult pendant_elimination(const HexGraph& graph, std::vector<char> alive_vertices,
                                  std::span<const char> alive_edges = {});

/// Canonical id: C'_{m',j} of a turning system becomes C_{m,j+offset}.
HexId canonical_hex_id(const AnySpec& spec, const HexId& id);

/// The six canonical labels of a hexagon's boundary in cyclic order
/// (e_{i,j}, l_{i,j}, r_{i,j}, e_{i,j-1}, l_{i+1,j-1}, r_{i+1,j}).
/// Throws std::out_of_range for an unknown hexagon.
std::array<EdgeLabel, 6> hexagon_boundary(const HexGraph& graph, const HexId& id);

}  // namespace chs
