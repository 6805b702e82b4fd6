#include "chs/minforce.hpp"

#include "chs/oracle.hpp"

#include <algorithm>
#include <limits>

namespace chs {

MinForceResult minimum_forcing_set_counted(const ChsSpec& spec, const MatchingSequence& seq) {
    if (seq.lower) throw MatchingError("a monotonic system takes a single sequence");
    check_sequence(spec, seq);
    const std::vector<int>& a = seq.upper;
    const std::size_t m = a.size();
    MinForceResult out;

    // run_start[j] = min{s : a_s = a_j}, 1-based.
    std::vector<std::size_t> run_start(m + 1, 0);
    for (std::size_t s = 1; s <= m; ++s) {
        run_start[s] = (s > 1 && a[s - 1] == a[s - 2]) ? run_start[s - 1] : s;
        ++out.operations;
    }

    int cap = std::numeric_limits<int>::max();
    std::size_t j = m;
    while (j >= 1) {
        ++out.operations;
        const int l = std::min(spec.k(j), cap);
        const int aj = a[j - 1];
        if (l < spec.h(j)) {
            --j;
        } else if (aj == l) {
            const std::size_t i = run_start[j];
            const int li = std::min(spec.k(i), cap);
            out.order.push_back({Half::upper, EdgeKind::r, static_cast<int>(i), a[i - 1]});
            cap = std::min(cap, li - 1);
            j = i - 1;
        } else {
            out.order.push_back({Half::upper, EdgeKind::e, static_cast<int>(j), aj});
            cap = std::min(cap, aj);
            --j;
        }
    }
    out.forcing_set.insert(out.order.begin(), out.order.end());
    return out;
}

EdgeSet minimum_forcing_set(const ChsSpec& spec, const MatchingSequence& seq) {
    return minimum_forcing_set_counted(spec, seq).forcing_set;
}

OracleComparison verify_against_oracle(const HexGraph& graph, const MatchingSequence& seq) {
    const auto* spec = std::get_if<ChsSpec>(&graph.spec());
    if (!spec) throw std::invalid_argument("the linear scan applies to monotonic systems only");
    OracleComparison report;
    report.matching = seq;
    report.algorithm_set = minimum_forcing_set(*spec, seq);
    const EdgeSet matching = sequence_to_matching(graph, seq);
    report.oracle_set = minimum_forcing_set_search(graph, matching);
    report.oracle_forcing_number = report.oracle_set.size();

    EdgeSet canonical;
    for (const auto& e : report.algorithm_set) canonical.insert(graph.canonical(e));
    report.algorithm_set_forces = is_forcing_set(graph, matching, canonical);
    report.algorithm_set_minimal = true;
    for (const auto& e : canonical) {
        EdgeSet smaller = canonical;
        smaller.erase(e);
        if (is_forcing_set(graph, matching, smaller)) report.algorithm_set_minimal = false;
    }
    return report;
}

OracleComparison verify_against_oracle(const ChsSpec& spec, const MatchingSequence& seq) {
    return verify_against_oracle(build_graph(spec), seq);
}

std::string to_string(const OracleComparison& report) {
    auto join = [](const EdgeSet& s) {
        std::string out;
        for (const auto& e : s) out += (out.empty() ? "" : " ") + to_string(e);
        return "{" + out + "}";
    };
    return to_string(report.matching) + ": scan " + std::to_string(report.algorithm_set.size()) + " " +
           join(report.algorithm_set) + ", oracle " + std::to_string(report.oracle_forcing_number) + " " +
           join(report.oracle_set) + (report.agrees() ? " ok" : " MISMATCH");
}

}  // namespace chs
