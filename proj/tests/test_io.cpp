#include "doctest.h"

#include <random>
#include <sstream>

#include "ratcycle/census.hpp"
#include "ratcycle/io.hpp"

using namespace ratcycle;

TEST_CASE("registry JSON-lines round trip preserves huge numerators") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> digits(1, 200);
    std::uniform_int_distribution<int> digit(0, 9);
    std::vector<RegistryLine> lines;
    for (int t = 0; t < 50; ++t) {
        RegistryLine rl;
        rl.record.k = 6 * static_cast<std::uint64_t>(t) + 1;
        rl.record.lambda = static_cast<std::uint64_t>(t) + 2;
        rl.record.omega = 1;
        for (int i = 0; i < 3; ++i) {
            std::string s = "1";
            int len = digits(rng);
            for (int d = 0; d < len; ++d) s.push_back(static_cast<char>('0' + digit(rng)));
            rl.record.cycle_numerators.emplace_back(s);
        }
        rl.record.min_numerator = rl.record.cycle_numerators.front();
        rl.depth = 500;
        rl.step_cap = 100000;
        lines.push_back(std::move(rl));
    }
    std::stringstream ss;
    write_registry_jsonl(ss, lines);
    auto back = read_registry_jsonl(ss);
    CHECK(back == lines);
}

TEST_CASE("registry serialization of a real report") {
    auto rep = search_denominator(13, 500, 100000);
    std::stringstream ss;
    write_registry_jsonl(ss, rep);
    auto back = read_registry_jsonl(ss);
    REQUIRE(back.size() == rep.attractors.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].record == rep.attractors[i]);
        CHECK(back[i].depth == 500);
        CHECK(back[i].step_cap == 100000);
    }
}

TEST_CASE("A-table CSV round trip") {
    std::vector<ATablePoint> table{{20, 213}, {50, 184}, {3200, 162}};
    std::stringstream ss;
    write_atable_csv(ss, table);
    CHECK(ss.str() == "depth,A\n20,213\n50,184\n3200,162\n");
    auto back = read_atable_csv(ss);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back[i].depth == table[i].depth);
        CHECK(back[i].single_attractor_count == table[i].single_attractor_count);
    }
}

TEST_CASE("census CSV headers") {
    std::stringstream ss;
    write_nu_census_csv(ss, {{1, 2}, {7, 4}});
    CHECK(ss.str() == "k,nu\n1,2\n7,4\n");
}
