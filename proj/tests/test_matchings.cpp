#include "chs/matchings.hpp"

#include "chs/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace chs;

namespace {

const ChsSpec staircase = make_monotonic({3, 3, 3, 4, 5}, {1, 1, 2, 2, 3});

std::set<EdgeSet> by_sequences(const AnySpec& spec, const HexGraph& g) {
    std::set<EdgeSet> out;
    for (const auto& seq : enumerate_sequences(spec)) out.insert(sequence_to_matching(g, seq));
    return out;
}

}  // namespace

TEST_CASE("sequence text round trip") {
    CHECK(to_string(parse_matching("0,3,3,4,4")) == "0,3,3,4,4");
    const MatchingSequence pair = parse_matching("((0,1,1,5),(0,0,3))");
    REQUIRE(pair.lower.has_value());
    CHECK(pair.upper == std::vector<int>{0, 1, 1, 5});
    CHECK(*pair.lower == std::vector<int>{0, 0, 3});
    CHECK(to_string(pair) == "(0,1,1,5|0,0,3)");
    CHECK(parse_matching("(0,1,1,5|0,0,3)") == pair);
    CHECK_THROWS_AS(parse_matching("0,,1"), MatchingError);
    CHECK_THROWS_AS(parse_matching("a"), MatchingError);
}

TEST_CASE("sequence validation") {
    CHECK(is_valid_sequence(staircase, parse_matching("0,3,3,4,4")));
    CHECK_FALSE(is_valid_sequence(staircase, parse_matching("0,3,3,4")));      // too short
    CHECK_FALSE(is_valid_sequence(staircase, parse_matching("0,3,2,4,4")));    // decreasing
    CHECK_FALSE(is_valid_sequence(staircase, parse_matching("0,3,3,4,6")));    // above k_5
    CHECK_FALSE(is_valid_sequence(staircase, parse_matching("0,0,0,4,4")));    // below h_3 - 1
    const TurningChsSpec t = make_turning({3, 3, 5, 5}, {1, 2, 2, 4}, {1, 2, 3}, {1, 1, 2});
    CHECK(is_valid_sequence(t, parse_matching("(0,1,1,5|0,0,3)")));
    CHECK_FALSE(is_valid_sequence(t, parse_matching("(0,1,1,5|0,0,2)")));  // turning row disagrees
    CHECK_FALSE(is_valid_sequence(t, parse_matching("0,1,1,5")));
    CHECK_FALSE(is_valid_sequence(staircase, parse_matching("(0,3,3,4,4|1,1)")));
    CHECK_THROWS_AS(check_sequence(staircase, parse_matching("9")), MatchingError);
}

TEST_CASE("matching counts") {
    for (int k = 1; k <= 10; ++k) CHECK(count_matchings(linear_chain(k)) == k + 1);
    CHECK(count_matchings(ChsSpec{}) == 1);
    CHECK(count_matchings(parallelogram(2, 2)) == 6);
    // Zigzag chains have Fibonacci many matchings.
    Integer a = 1, b = 2;
    for (int n = 1; n <= 12; ++n) {
        CHECK(count_matchings(zigzag(n)) == b);
        const Integer c = a + b;
        a = b;
        b = c;
    }
    CHECK(count_matchings(make_turning({3, 3, 5, 5}, {1, 2, 2, 4}, {1, 2, 3}, {1, 1, 2})) == 343);
}

TEST_CASE("the staircase matching") {
    const HexGraph g = build_graph(staircase);
    const EdgeSet m = sequence_to_matching(g, parse_matching("0,3,3,4,4"));
    CHECK(is_perfect_matching(g, m));
    CHECK(m.size() * 2 == g.vertex_count());
    for (const auto& e : {"e_{1,0}", "e_{2,3}", "e_{3,3}", "e_{4,4}", "e_{5,4}"}) CHECK(m.count(parse_edge_label(e)));
    CHECK(matching_to_sequence(g, m) == parse_matching("0,3,3,4,4"));
}

TEST_CASE("bijection with all perfect matchings") {
    std::vector<AnySpec> specs;
    for (auto& s : all_monotonic_specs(3, 3)) specs.emplace_back(s);
    for (auto& t : all_turning_specs(2, 3)) specs.emplace_back(t);
    for (int i = 0; i < 30; ++i) {
        specs.emplace_back(testing::random_monotonic(5, 5));
        specs.emplace_back(testing::random_turning(3, 4));
    }
    for (const auto& spec : specs) {
        CAPTURE(to_string(spec));
        const HexGraph g = build_graph(spec);
        const auto seqs = enumerate_sequences(spec);
        CHECK(std::is_sorted(seqs.begin(), seqs.end()));
        CHECK(Integer(seqs.size()) == count_matchings(spec));
        for (const auto& seq : seqs) {
            const EdgeSet m = sequence_to_matching(g, seq);
            CHECK(is_perfect_matching(g, m));
            CHECK(matching_to_sequence(g, m) == seq);
        }
        const auto all = enumerate_perfect_matchings(g, 1000000);
        CHECK(std::set<EdgeSet>(all.begin(), all.end()) == by_sequences(spec, g));
        CHECK(all.size() == seqs.size());
    }
}

TEST_CASE("matching_to_sequence rejects non-matchings") {
    const HexGraph g = build_graph(linear_chain(2));
    CHECK_THROWS_AS(matching_to_sequence(g, {}), MatchingError);
    EdgeSet m = sequence_to_matching(g, parse_matching("1"));
    m.erase(m.begin());
    CHECK_THROWS_AS(matching_to_sequence(g, m), MatchingError);
    CHECK_FALSE(is_perfect_matching(g, m));
}

TEST_CASE("early stop in for_each_sequence") {
    int seen = 0;
    for_each_sequence(staircase, [&](const MatchingSequence&) { return ++seen < 3; });
    CHECK(seen == 3);
}
