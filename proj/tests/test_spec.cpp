#include "chs/spec.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace chs;

TEST_CASE("validate_monotonic accepts valid row lists") {
    const ChsSpec s = make_monotonic({3, 3, 3, 4, 5}, {1, 1, 2, 2, 3});
    CHECK(s.size() == 5);
    CHECK(s.k(5) == 5);
    CHECK(s.h(3) == 2);
    CHECK(s.hexagon_count() == 14);
    CHECK(make_monotonic({1}, {1}).hexagon_count() == 1);
}

TEST_CASE("validate_monotonic reports the offending row") {
    auto row_of = [](std::vector<int> k, std::vector<int> h) -> std::size_t {
        try {
            make_monotonic(std::move(k), std::move(h));
        } catch (const SpecError& e) {
            return e.row();
        }
        return 999;
    };
    CHECK(row_of({2, 1}, {1, 1}) == 2);           // k decreasing
    CHECK(row_of({2, 2, 2}, {1, 2, 1}) == 3);     // h decreasing
    CHECK(row_of({1, 1}, {1, 2}) == 2);           // k < h
    CHECK(row_of({1}, {0}) == 1);                  // h < 1
    CHECK_THROWS_AS(make_monotonic({}, {}), SpecError);
    CHECK_THROWS_AS(make_monotonic({1, 2}, {1}), SpecError);
}

TEST_CASE("validate_turning") {
    const TurningChsSpec t = make_turning({3, 3, 5, 5}, {1, 2, 2, 4}, {1, 2, 3}, {1, 1, 2});
    CHECK(t.upper().size() == 4);
    CHECK(t.lower().size() == 3);
    CHECK(t.offset() == 2);
    CHECK(t.hexagon_count() == 14);
    CHECK_NOTHROW(make_turning({1, 1}, {1, 1}, {1, 1}, {1, 1}));
    CHECK_THROWS_AS(make_turning({2, 3}, {1, 1}, {1, 2}, {1, 1}), SpecError);
    CHECK_THROWS_WITH_AS(make_turning({1, 1}, {1, 1}, {1}, {1}), doctest::Contains("monotonic"), SpecError);
    CHECK_THROWS_WITH_AS(make_turning({1}, {1}, {1, 1}, {1, 1}), doctest::Contains("monotonic"), SpecError);
    CHECK_THROWS_WITH_AS(make_turning({2, 1}, {1, 1}, {1, 1}, {1, 1}), doctest::Contains("upper half"),
                         SpecError);
    CHECK_THROWS_WITH_AS(make_turning({1, 1}, {1, 1}, {2, 1}, {1, 1}), doctest::Contains("lower half"),
                         SpecError);
}

TEST_CASE("truncation caps k and drops trailing rows below h") {
    const ChsSpec s = make_monotonic({3, 3, 3, 4, 5}, {1, 1, 2, 2, 3});
    CHECK(s.truncated(5, 2) == make_monotonic({2, 2, 2, 2}, {1, 1, 2, 2}));
    CHECK(s.truncated(3, 1) == make_monotonic({1, 1}, {1, 1}));
    CHECK(s.truncated(5, 0).empty());
    CHECK(s.truncated(0, 9).empty());
    CHECK(s.prefix(2) == make_monotonic({3, 3}, {1, 1}));
    CHECK(s.prefix(0).empty());
}

TEST_CASE("notation round trip") {
    for (const std::string text : {"CHS(3,3,3,4,5;1,1,2,2,3)", "CHS(3,3,5,5;1,2,2,4|1,2,3;1,1,2)", "CHS(1;1)"}) {
        CHECK(to_string(parse_notation(text)) == text);
    }
    CHECK(to_string(parse_notation("2,2;1,2")) == "CHS(2,2;1,2)");
    CHECK(to_string(parse_notation(" 1, 1 ; 1, 1 | 1,1;1,1 ")) == "CHS(1,1;1,1|1,1;1,1)");
    CHECK_THROWS_AS(parse_notation("3,3;1"), SpecError);
    CHECK_THROWS_AS(parse_notation("a;1"), SpecError);
    CHECK_THROWS_AS(parse_notation("2,1;1,1"), SpecError);
}

TEST_CASE("json round trip ignores unknown keys") {
    const AnySpec specs[] = {make_monotonic({3, 3, 3, 4, 5}, {1, 1, 2, 2, 3}),
                             make_turning({3, 3, 5, 5}, {1, 2, 2, 4}, {1, 2, 3}, {1, 1, 2})};
    for (const auto& s : specs) CHECK(parse_spec_json(to_json(s)) == s);
    CHECK(parse_spec_json(R"({"rows":[{"k":2,"h":1,"note":"x"}],"hexagons":2})") == AnySpec{linear_chain(2)});
    CHECK_THROWS_AS(parse_spec_json("{"), SpecError);
    CHECK_THROWS_AS(parse_spec_json(R"({"rows":[{"k":1}]})"), SpecError);
}

TEST_CASE("load_spec accepts notation, inline json and files") {
    CHECK(load_spec("3;1") == AnySpec{linear_chain(3)});
    CHECK(load_spec(R"({"rows":[{"k":3,"h":1}]})") == AnySpec{linear_chain(3)});
    const std::string path = "spec_roundtrip_test.json";
    {
        std::ofstream out(path);
        out << to_json(AnySpec{zigzag(4)});
    }
    CHECK(load_spec(path) == AnySpec{zigzag(4)});
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_spec("no_such_file.json"), SpecError);
    CHECK_THROWS_AS(load_spec("   "), SpecError);
}

TEST_CASE("families") {
    CHECK(linear_chain(4) == make_monotonic({4}, {1}));
    CHECK(parallelogram(2, 3) == make_monotonic({2, 2, 2}, {1, 1, 1}));
    CHECK(parallelogram(0, 3).empty());
    CHECK(zigzag(0).empty());
    CHECK(zigzag(1) == make_monotonic({1}, {1}));
    CHECK(zigzag(2) == make_monotonic({1, 1}, {1, 1}));
    CHECK(zigzag(3) == make_monotonic({2, 2}, {1, 2}));
    CHECK(zigzag(6) == make_monotonic({1, 2, 3, 3}, {1, 1, 2, 3}));
    CHECK(zigzag(7) == make_monotonic({2, 3, 4, 4}, {1, 2, 3, 4}));
    for (int n = 0; n <= 12; ++n) CHECK(zigzag(n).hexagon_count() == static_cast<std::size_t>(n));
    CHECK_THROWS_AS(zigzag(-1), SpecError);
    CHECK_THROWS_AS(linear_chain(0), SpecError);
}

TEST_CASE("spec sweeps") {
    const auto mono = all_monotonic_specs(2, 2);
    // m=1: (1,1),(2,1),(2,2); m=2: pairs non-decreasing in both k and h.
    CHECK(mono.size() == 3 + 6);
    for (const auto& t : all_turning_specs(2, 2)) {
        const Row& a = t.upper().row(2);
        const Row& b = t.lower().row(2);
        CHECK(a.k - a.h == b.k - b.h);
    }
    CHECK(all_turning_specs(3, 3).size() == 2026);
}
