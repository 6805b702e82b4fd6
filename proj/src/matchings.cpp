#include "chs/matchings.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace chs {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw MatchingError("empty entry in matching \"" + text + "\"");
        std::size_t used = 0;
        try {
            out.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            throw MatchingError("not an integer: \"" + item + "\"");
        }
        if (used != item.size()) throw MatchingError("not an integer: \"" + item + "\"");
    }
    if (out.empty()) throw MatchingError("empty matching sequence");
    return out;
}

void check_half(const ChsSpec& spec, const std::vector<int>& a, const char* name) {
    if (a.size() != spec.size())
        throw MatchingError(std::string(name) + " sequence has " + std::to_string(a.size()) + " entries, expected " +
                            std::to_string(spec.size()));
    for (std::size_t i = 1; i <= a.size(); ++i) {
        const int v = a[i - 1];
        if (v < spec.h(i) - 1 || v > spec.k(i))
            throw MatchingError(std::string(name) + " entry " + std::to_string(i) + " = " + std::to_string(v) +
                                " outside [" + std::to_string(spec.h(i) - 1) + "," + std::to_string(spec.k(i)) +
                                "]");
        if (i > 1 && v < a[i - 2])
            throw MatchingError(std::string(name) + " sequence decreases at entry " + std::to_string(i));
    }
}

// Non-decreasing sequences for rows 1..rows of `spec`, each entry capped at
// `cap`; `last` (when set) pins the final entry.
bool walk_half(const ChsSpec& spec, std::size_t rows, std::optional<int> last, std::vector<int>& cur,
               const std::function<bool(const std::vector<int>&)>& visit) {
    const std::size_t i = cur.size() + 1;
    if (i > rows) return visit(cur);
    int lo = spec.h(i) - 1;
    if (!cur.empty()) lo = std::max(lo, cur.back());
    int hi = spec.k(i);
    if (last) hi = std::min(hi, *last);
    if (last && i == rows) lo = std::max(lo, *last);
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        const bool go = walk_half(spec, rows, last, cur, visit);
        cur.pop_back();
        if (!go) return false;
    }
    return true;
}

// Number of valid sequences of `spec` by value of the final entry.
std::map<int, Integer> last_entry_counts(const ChsSpec& spec) {
    std::map<int, Integer> ways;
    for (int v = spec.h(1) - 1; v <= spec.k(1); ++v) ways[v] = 1;
    for (std::size_t i = 2; i <= spec.size(); ++i) {
        std::map<int, Integer> next;
        Integer running = 0;
        auto it = ways.begin();
        for (int v = spec.h(i) - 1; v <= spec.k(i); ++v) {
            while (it != ways.end() && it->first <= v) running += (it++)->second;
            if (running != 0) next[v] = running;
        }
        ways = std::move(next);
    }
    return ways;
}

}  // namespace

std::string to_string(const MatchingSequence& seq) {
    if (!seq.lower) return join(seq.upper);
    return "(" + join(seq.upper) + "|" + join(*seq.lower) + ")";
}

MatchingSequence parse_matching(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    MatchingSequence out;
    if (s.rfind("((", 0) == 0) {
        // ((a..),(a'..))
        auto mid = s.find("),(");
        if (mid == std::string::npos || s.size() < 4 || s.substr(s.size() - 2) != "))")
            throw MatchingError("bad matching \"" + text + "\"");
        out.upper = parse_list(s.substr(2, mid - 2));
        out.lower = parse_list(s.substr(mid + 3, s.size() - mid - 5));
        return out;
    }
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw MatchingError("bad matching \"" + text + "\"");
        s = s.substr(1, s.size() - 2);
    }
    auto bar = s.find('|');
    if (bar == std::string::npos) {
        out.upper = parse_list(s);
    } else {
        out.upper = parse_list(s.substr(0, bar));
        out.lower = parse_list(s.substr(bar + 1));
    }
    return out;
}

void check_sequence(const AnySpec& spec, const MatchingSequence& seq) {
    if (const auto* m = std::get_if<ChsSpec>(&spec)) {
        if (seq.lower) throw MatchingError("monotonic system takes a single sequence");
        check_half(*m, seq.upper, "upper");
        return;
    }
    const auto& t = std::get<TurningChsSpec>(spec);
    if (!seq.lower) throw MatchingError("one-turning system takes a pair of sequences");
    check_half(t.upper(), seq.upper, "upper");
    check_half(t.lower(), *seq.lower, "lower");
    if (seq.upper.back() - t.offset() != seq.lower->back())
        throw MatchingError("turning-row entries disagree: a_m - h_m != a'_m' - h'_m'");
}

bool is_valid_sequence(const AnySpec& spec, const MatchingSequence& seq) {
    try {
        check_sequence(spec, seq);
        return true;
    } catch (const MatchingError&) {
        return false;
    }
}

EdgeSet sequence_to_matching(const HexGraph& graph, const MatchingSequence& seq) {
    check_sequence(graph.spec(), seq);
    std::vector<EdgeLabel> verticals;
    for (std::size_t i = 0; i < seq.upper.size(); ++i)
        verticals.push_back({Half::upper, EdgeKind::e, static_cast<int>(i + 1), seq.upper[i]});
    if (seq.lower)
        for (std::size_t t = 0; t + 1 < seq.lower->size(); ++t)
            verticals.push_back({Half::lower, EdgeKind::e, static_cast<int>(t + 1), (*seq.lower)[t]});

    std::vector<char> alive(graph.vertex_count(), 1);
    std::vector<char> usable(graph.edge_count(), 0);
    std::vector<int> chosen;
    for (const auto& label : verticals) {
        auto e = graph.find_edge(label);
        if (!e) throw MatchingError("edge " + to_string(label) + " is not in the graph");
        const auto& edge = graph.edges()[static_cast<std::size_t>(*e)];
        if (!alive[static_cast<std::size_t>(edge.u)] || !alive[static_cast<std::size_t>(edge.v)])
            throw MatchingError("vertical edges of the sequence overlap");
        alive[static_cast<std::size_t>(edge.u)] = alive[static_cast<std::size_t>(edge.v)] = 0;
        chosen.push_back(*e);
    }
    // Removing every vertical edge leaves the zigzag paths between rows;
    // deleting the chosen verticals' ends cuts them into segments that have
    // at most one perfect matching each.
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        usable[e] = graph.edges()[e].label.kind != EdgeKind::e;
    auto completion = pendant_elimination(graph, alive, usable);
    if (!completion.empty())
        throw std::logic_error("sequence " + to_string(seq) + " does not extend to a perfect matching");
    chosen.insert(chosen.end(), completion.forced_edges.begin(), completion.forced_edges.end());
    EdgeSet out = edge_labels(graph, chosen);
    if (!is_perfect_matching(graph, out)) throw std::logic_error("completion is not a perfect matching");
    return out;
}

MatchingSequence matching_to_sequence(const HexGraph& graph, const EdgeSet& matching) {
    if (!is_perfect_matching(graph, matching)) throw MatchingError("not a perfect matching of the graph");
    const AnySpec& spec = graph.spec();
    const auto* turn = std::get_if<TurningChsSpec>(&spec);
    const ChsSpec& upper = turn ? turn->upper() : std::get<ChsSpec>(spec);

    std::vector<std::vector<int>> up(upper.size()), low(turn ? turn->lower().size() : 0);
    for (const auto& label : matching) {
        const EdgeLabel c = graph.canonical(label);
        if (c.kind != EdgeKind::e) continue;
        auto& rows = c.half == Half::upper ? up : low;
        if (c.row < 1 || static_cast<std::size_t>(c.row) > rows.size())
            throw MatchingError("vertical edge " + to_string(c) + " outside the rows");
        rows[static_cast<std::size_t>(c.row - 1)].push_back(c.col);
    }
    MatchingSequence seq;
    for (std::size_t i = 0; i < up.size(); ++i) {
        if (up[i].size() != 1)
            throw MatchingError("row " + std::to_string(i + 1) + " holds " + std::to_string(up[i].size()) +
                                " vertical edges");
        seq.upper.push_back(up[i][0]);
    }
    if (turn) {
        std::vector<int> lower;
        for (std::size_t t = 0; t + 1 < low.size(); ++t) {
            if (low[t].size() != 1)
                throw MatchingError("lower row " + std::to_string(t + 1) + " holds " +
                                    std::to_string(low[t].size()) + " vertical edges");
            lower.push_back(low[t][0]);
        }
        if (!low.back().empty()) throw MatchingError("turning-row vertical stored under the lower name");
        lower.push_back(seq.upper.back() - turn->offset());
        seq.lower = std::move(lower);
    }
    check_sequence(spec, seq);
    return seq;
}

void for_each_sequence(const AnySpec& spec, const std::function<bool(const MatchingSequence&)>& visit) {
    if (const auto* m = std::get_if<ChsSpec>(&spec)) {
        if (m->empty()) {
            visit(MatchingSequence{});
            return;
        }
        std::vector<int> cur;
        walk_half(*m, m->size(), std::nullopt, cur, [&](const std::vector<int>& a) {
            return visit(MatchingSequence{a, std::nullopt});
        });
        return;
    }
    const auto& t = std::get<TurningChsSpec>(spec);
    std::vector<int> cur;
    walk_half(t.upper(), t.upper().size(), std::nullopt, cur, [&](const std::vector<int>& a) {
        std::vector<int> low;
        return walk_half(t.lower(), t.lower().size(), a.back() - t.offset(), low, [&](const std::vector<int>& b) {
            return visit(MatchingSequence{a, b});
        });
    });
}

std::vector<MatchingSequence> enumerate_sequences(const AnySpec& spec) {
    std::vector<MatchingSequence> out;
    for_each_sequence(spec, [&](const MatchingSequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

Integer count_matchings(const AnySpec& spec) {
    if (const auto* m = std::get_if<ChsSpec>(&spec)) {
        if (m->empty()) return 1;
        Integer total = 0;
        for (const auto& [v, n] : last_entry_counts(*m)) total += n;
        return total;
    }
    const auto& t = std::get<TurningChsSpec>(spec);
    const auto up = last_entry_counts(t.upper());
    const auto low = last_entry_counts(t.lower());
    Integer total = 0;
    for (const auto& [v, n] : up) {
        auto it = low.find(v - t.offset());
        if (it != low.end()) total += n * it->second;
    }
    return total;
}

bool is_perfect_matching(const HexGraph& graph, const EdgeSet& matching) {
    std::vector<int> cover(graph.vertex_count(), 0);
    for (const auto& label : matching) {
        auto e = graph.find_edge(label);
        if (!e) return false;
        const auto& edge = graph.edges()[static_cast<std::size_t>(*e)];
        ++cover[static_cast<std::size_t>(edge.u)];
        ++cover[static_cast<std::size_t>(edge.v)];
    }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::vector<int> edge_indices(const HexGraph& graph, const EdgeSet& edges) {
    std::vector<int> out;
    for (const auto& label : edges) {
        auto e = graph.find_edge(label);
        if (!e) throw std::out_of_range("edge " + to_string(label) + " is not in the graph");
        out.push_back(*e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet edge_labels(const HexGraph& graph, const std::vector<int>& edges) {
    EdgeSet out;
    for (int e : edges) out.insert(graph.edges()[static_cast<std::size_t>(e)].label);
    return out;
}

}  // namespace chs
