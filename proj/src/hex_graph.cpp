#include "chs/hex_graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace chs {

namespace {

// Corners of the lattice hexagon at upper-frame position (i, j).
VertexKey top_corner(int i, int j) { return {-2 * (j - 1) - (i - 1), -3 * (i - 1) + 2}; }
VertexKey bottom_corner(int i, int j) { return {-2 * (j - 1) - (i - 1), -3 * (i - 1) - 2}; }

using KeyPair = std::pair<VertexKey, VertexKey>;

KeyPair upper_endpoints(EdgeKind kind, int i, int j) {
    switch (kind) {
        case EdgeKind::e: return {bottom_corner(i - 1, j + 1), top_corner(i + 1, j)};
        case EdgeKind::l: return {bottom_corner(i - 1, j + 1), top_corner(i, j)};
        case EdgeKind::r: return {top_corner(i, j), bottom_corner(i - 1, j)};
    }
    throw std::logic_error("bad edge kind");
}

// Lower-half cell (t, j) sits at upper-frame position (m+m'-t, j+offset-(m'-t)).
struct LowerFrame {
    int m = 0;
    int mp = 0;
    int offset = 0;

    std::pair<int, int> cell(int t, int j) const { return {m + mp - t, j + offset - (mp - t)}; }

    KeyPair endpoints(EdgeKind kind, int t, int j) const {
        auto [i, c] = cell(t, j);
        // The lower half is flipped, so its top obliques are bottom obliques
        // in the upper frame.
        switch (kind) {
            case EdgeKind::e: return upper_endpoints(EdgeKind::e, i, c);
            case EdgeKind::l: return upper_endpoints(EdgeKind::r, i + 1, c);
            case EdgeKind::r: return upper_endpoints(EdgeKind::l, i + 1, c - 1);
        }
        throw std::logic_error("bad edge kind");
    }
};

std::optional<LowerFrame> lower_frame(const AnySpec& spec) {
    const auto* t = std::get_if<TurningChsSpec>(&spec);
    if (!t) return std::nullopt;
    return LowerFrame{static_cast<int>(t->upper().size()), static_cast<int>(t->lower().size()), t->offset()};
}

KeyPair label_endpoints(const AnySpec& spec, const EdgeLabel& label) {
    if (label.half == Half::upper) return upper_endpoints(label.kind, label.row, label.col);
    auto frame = lower_frame(spec);
    if (!frame) throw std::invalid_argument("primed label " + to_string(label) + " on a monotonic system");
    return frame->endpoints(label.kind, label.row, label.col);
}

std::array<EdgeLabel, 6> nominal_boundary(const HexId& id) {
    const Half h = id.half;
    const int i = id.row, j = id.col;
    return {EdgeLabel{h, EdgeKind::e, i, j},         EdgeLabel{h, EdgeKind::l, i, j},
            EdgeLabel{h, EdgeKind::r, i, j},         EdgeLabel{h, EdgeKind::e, i, j - 1},
            EdgeLabel{h, EdgeKind::l, i + 1, j - 1}, EdgeLabel{h, EdgeKind::r, i + 1, j}};
}

char kind_char(EdgeKind k) {
    switch (k) {
        case EdgeKind::e: return 'e';
        case EdgeKind::l: return 'l';
        case EdgeKind::r: return 'r';
    }
    return '?';
}

}  // namespace

std::string to_string(const EdgeLabel& label) {
    std::string s(1, kind_char(label.kind));
    if (label.half == Half::lower) s += '\'';
    return s + "_{" + std::to_string(label.row) + "," + std::to_string(label.col) + "}";
}

std::string to_string(const HexId& id) {
    std::string s = "C";
    if (id.half == Half::lower) s += '\'';
    return s + "_{" + std::to_string(id.row) + "," + std::to_string(id.col) + "}";
}

EdgeLabel parse_edge_label(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != '_') s += c;
    auto fail = [&]() { return std::invalid_argument("bad edge label \"" + text + "\""); };
    if (s.size() < 4) throw fail();
    EdgeLabel out;
    switch (s[0]) {
        case 'e': out.kind = EdgeKind::e; break;
        case 'l': out.kind = EdgeKind::l; break;
        case 'r': out.kind = EdgeKind::r; break;
        default: throw fail();
    }
    std::size_t pos = 1;
    if (s[pos] == '\'') {
        out.half = Half::lower;
        ++pos;
    }
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) throw fail();
    try {
        std::size_t used = 0;
        const std::string a = s.substr(pos, comma - pos), b = s.substr(comma + 1);
        out.row = std::stoi(a, &used);
        if (used != a.size()) throw fail();
        out.col = std::stoi(b, &used);
        if (used != b.size()) throw fail();
    } catch (const std::logic_error&) {
        throw fail();
    }
    return out;
}

std::optional<int> HexGraph::find_vertex(const VertexKey& key) const {
    auto it = vertex_index_.find(key);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::pair<VertexKey, VertexKey> HexGraph::endpoints(const EdgeLabel& label) const {
    return label_endpoints(spec_, label);
}

std::optional<int> HexGraph::find_edge(const EdgeLabel& label) const {
    if (label.half == Half::lower && !turning()) return std::nullopt;
    auto [a, b] = endpoints(label);
    auto u = find_vertex(a), v = find_vertex(b);
    if (!u || !v) return std::nullopt;
    auto it = edge_index_.find({std::min(*u, *v), std::max(*u, *v)});
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

EdgeLabel HexGraph::canonical(const EdgeLabel& label) const {
    auto e = find_edge(label);
    if (!e) throw std::out_of_range("edge " + to_string(label) + " is not in the graph");
    return edges_[static_cast<std::size_t>(*e)].label;
}

bool HexGraph::has_hexagon(const HexId& id) const {
    return hexagon_index_.count(canonical_hex_id(spec_, id)) != 0;
}

const HexGraph::Hexagon& HexGraph::hexagon(const HexId& id) const {
    auto it = hexagon_index_.find(canonical_hex_id(spec_, id));
    if (it == hexagon_index_.end()) throw std::out_of_range("no hexagon " + to_string(id));
    return hexagons_[it->second];
}

HexId canonical_hex_id(const AnySpec& spec, const HexId& id) {
    const auto* t = std::get_if<TurningChsSpec>(&spec);
    if (t && id.half == Half::lower && id.row == static_cast<int>(t->lower().size()))
        return {Half::upper, static_cast<int>(t->upper().size()), id.col + t->offset()};
    return id;
}

HexGraph build_graph(const AnySpec& spec) {
    HexGraph g;
    g.spec_ = spec;

    std::vector<HexId> ids;
    auto add_rows = [&](const ChsSpec& s, Half half, std::size_t rows) {
        for (std::size_t i = 1; i <= rows; ++i)
            for (int j = s.h(i); j <= s.k(i); ++j) ids.push_back({half, static_cast<int>(i), j});
    };
    if (const auto* m = std::get_if<ChsSpec>(&spec)) {
        add_rows(*m, Half::upper, m->size());
    } else {
        const auto& t = std::get<TurningChsSpec>(spec);
        add_rows(t.upper(), Half::upper, t.upper().size());
        add_rows(t.lower(), Half::lower, t.lower().size() - 1);
    }

    // Pass 1: vertices, sorted by key so indices are deterministic.
    std::set<VertexKey> keys;
    for (const auto& id : ids)
        for (const auto& label : nominal_boundary(id)) {
            auto [a, b] = label_endpoints(spec, label);
            keys.insert(a);
            keys.insert(b);
        }
    for (const auto& k : keys) {
        g.vertex_index_.emplace(k, static_cast<int>(g.keys_.size()));
        g.keys_.push_back(k);
        const int r = ((k.y % 3) + 3) % 3;
        g.colors_.push_back(r == 2 ? 0 : 1);
    }
    g.adjacency_.resize(g.keys_.size());

    // Pass 2: edges. Upper hexagons come first, so shared turning-row edges
    // keep their upper name.
    for (const auto& id : ids) {
        HexGraph::Hexagon hex;
        hex.id = id;
        const auto labels = nominal_boundary(id);
        std::array<std::pair<int, int>, 6> ends{};
        for (std::size_t s = 0; s < 6; ++s) {
            auto [a, b] = label_endpoints(spec, labels[s]);
            int u = g.vertex_index_.at(a), v = g.vertex_index_.at(b);
            ends[s] = {u, v};
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            auto it = g.edge_index_.find(key);
            int idx;
            if (it == g.edge_index_.end()) {
                idx = static_cast<int>(g.edges_.size());
                g.edges_.push_back({u, v, labels[s]});
                g.edge_index_.emplace(key, idx);
                g.adjacency_[static_cast<std::size_t>(u)].push_back({v, idx});
                g.adjacency_[static_cast<std::size_t>(v)].push_back({u, idx});
            } else {
                idx = it->second;
            }
            hex.edges[s] = idx;
        }
        for (std::size_t s = 0; s < 6; ++s) {
            const auto& prev = ends[(s + 5) % 6];
            const auto& cur = ends[s];
            hex.vertices[s] = (cur.first == prev.first || cur.first == prev.second) ? cur.first : cur.second;
        }
        g.hexagon_index_.emplace(id, g.hexagons_.size());
        g.hexagons_.push_back(hex);
    }
    return g;
}

bool PendantResult::empty() const {
    return !isolated && std::none_of(remaining.begin(), remaining.end(), [](char c) { return c != 0; });
}

PendantResult pendant_elimination(const HexGraph& graph, std::vector<char> alive,
                                  std::span<const char> alive_edges) {
    const std::size_t n = graph.vertex_count();
    auto edge_ok = [&](int e) { return alive_edges.empty() || alive_edges[static_cast<std::size_t>(e)] != 0; };
    std::vector<int> degree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (const auto& inc : graph.incident(static_cast<int>(v)))
            if (alive[static_cast<std::size_t>(inc.neighbor)] && edge_ok(inc.edge)) ++degree[v];
    }
    PendantResult out;
    std::vector<int> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v] && degree[v] <= 1) queue.push_back(static_cast<int>(v));
    auto drop = [&](int v) {
        alive[static_cast<std::size_t>(v)] = 0;
        for (const auto& inc : graph.incident(v)) {
            auto w = static_cast<std::size_t>(inc.neighbor);
            if (alive[w] && edge_ok(inc.edge) && --degree[w] <= 1) queue.push_back(inc.neighbor);
        }
    };
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!alive[static_cast<std::size_t>(v)]) continue;
        if (degree[static_cast<std::size_t>(v)] == 0) {
            out.isolated = true;
            continue;
        }
        for (const auto& inc : graph.incident(v)) {
            if (!alive[static_cast<std::size_t>(inc.neighbor)] || !edge_ok(inc.edge)) continue;
            out.forced_edges.push_back(inc.edge);
            drop(v);
            drop(inc.neighbor);
            break;
        }
    }
    out.remaining = std::move(alive);
    return out;
}

std::array<EdgeLabel, 6> hexagon_boundary(const HexGraph& graph, const HexId& id) {
    const auto& hex = graph.hexagon(id);
    std::array<EdgeLabel, 6> out;
    for (std::size_t s = 0; s < 6; ++s) out[s] = graph.edges()[static_cast<std::size_t>(hex.edges[s])].label;
    return out;
}

}  // namespace chs
