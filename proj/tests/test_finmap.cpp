#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ccnet/finmap.hpp"

using namespace ccnet;

namespace {

// Independent closure oracle: saturate the set of maps by pairwise products
// until nothing new appears. Ignores ordering entirely.
std::set<std::vector<int>> closure_set(const std::vector<FiniteMap>& maps) {
    std::set<std::vector<int>> have;
    for (const auto& m : maps) have.insert(m.images);
    for (;;) {
        std::set<std::vector<int>> next = have;
        for (const auto& a : have)
            for (const auto& b : have)
                next.insert(compose_maps(FiniteMap(a), FiniteMap(b)).images);
        if (next == have) return have;
        have = std::move(next);
    }
}

FiniteMap random_map(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> img(static_cast<size_t>(n));
    for (auto& v : img) v = pick(rng);
    return FiniteMap(img);
}

} // namespace

TEST_CASE("composition acts on the left") {
    FiniteMap a({2, 3, 1});
    FiniteMap b({1, 1, 2});
    // (a o b)(i) = a(b(i))
    CHECK(compose_maps(a, b) == FiniteMap({2, 2, 3}));
    CHECK(compose_maps(b, a) == FiniteMap({1, 2, 1}));
}

TEST_CASE("map validation") {
    CHECK_NOTHROW(validate_map(FiniteMap({3, 1, 2}), 3, "s"));
    CHECK_THROWS_AS(validate_map(FiniteMap({3, 4, 2}), 3, "s"), validation_error);
    CHECK_THROWS_AS(validate_map(FiniteMap({0, 1, 1}), 3, "s"), validation_error);
    CHECK_THROWS_AS(validate_map(FiniteMap(std::vector<int>{}), 3, "s"), validation_error);
}

TEST_CASE("three-cell chain closes to three elements in discovery order") {
    // identity plus the shift-to-3 map; products fill in the constant map
    SemigroupTable sg = semigroup_closure({FiniteMap({1, 2, 3}), FiniteMap({2, 3, 3})});
    REQUIRE(sg.size() == 3);
    CHECK(sg.elements[0] == FiniteMap({1, 2, 3}));
    CHECK(sg.elements[1] == FiniteMap({2, 3, 3}));
    CHECK(sg.elements[2] == FiniteMap({3, 3, 3}));

    CHECK(sg.compose_index(2, 2) == 3);
    CHECK(sg.compose_index(2, 3) == 3);
    CHECK(sg.compose_index(3, 2) == 3);
    CHECK(sg.compose_index(1, 2) == 2);

    // tilde_j(k) indexes sigma_j o sigma_k
    CHECK(sg.tilde[0] == FiniteMap({1, 2, 3}));
    CHECK(sg.tilde[1] == FiniteMap({2, 3, 3}));
    CHECK(sg.tilde[2] == FiniteMap({3, 3, 3}));
    CHECK(is_faithful_tilde(sg));
}

TEST_CASE("closure table is consistent and inputs keep their positions") {
    std::mt19937 rng(7101);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::vector<FiniteMap> maps;
        while (maps.size() < 2) {
            FiniteMap m = random_map(rng, n);
            if (std::find(maps.begin(), maps.end(), m) == maps.end()) maps.push_back(m);
        }
        SemigroupTable sg = semigroup_closure(maps);

        for (size_t i = 0; i < maps.size(); ++i) CHECK(sg.elements[i] == maps[i]);

        std::set<std::vector<int>> expect = closure_set(maps);
        std::set<std::vector<int>> got;
        for (const auto& e : sg.elements) got.insert(e.images);
        CHECK(got == expect);
        CHECK(sg.elements.size() == expect.size());

        for (int j1 = 1; j1 <= sg.size(); ++j1)
            for (int j2 = 1; j2 <= sg.size(); ++j2) {
                int r = sg.compose_index(j1, j2);
                REQUIRE(r >= 1);
                REQUIRE(r <= sg.size());
                CHECK(sg.elements[static_cast<size_t>(r) - 1] ==
                      compose_maps(sg.elements[static_cast<size_t>(j1) - 1],
                                   sg.elements[static_cast<size_t>(j2) - 1]));
                CHECK(sg.tilde[static_cast<size_t>(j1) - 1](j2) == r);
            }

        // when every cell of a closed list is somebody's input, the images of
        // the elements cover everything and left multiplication separates them
        SlaveReduction sr = slave_reduce_maps(n, sg.elements);
        if (static_cast<int>(sr.kept_cells.size()) == n) CHECK(is_faithful_tilde(sg));
    }
}

TEST_CASE("duplicate input maps are rejected") {
    CHECK_THROWS_AS(semigroup_closure({FiniteMap({1, 2}), FiniteMap({1, 2})}),
                    validation_error);
    CHECK_THROWS_AS(semigroup_closure({}), validation_error);
}

TEST_CASE("right-zero collection has an unfaithful tilde") {
    // both maps fix {1,2} and send 3 inside, so x o y = y and every tilde row
    // is the identity on indices
    SemigroupTable sg = semigroup_closure({FiniteMap({1, 2, 1}), FiniteMap({1, 2, 2})});
    REQUIRE(sg.size() == 2);
    CHECK(sg.tilde[0] == FiniteMap({1, 2}));
    CHECK(sg.tilde[1] == FiniteMap({1, 2}));
    CHECK_FALSE(is_faithful_tilde(sg));
}

TEST_CASE("slave reduction strips a cell that feeds nothing at all") {
    // cell 2 is nobody's input, not even its own
    std::vector<FiniteMap> maps = {FiniteMap({1, 1})};
    SlaveReduction sr = slave_reduce_maps(2, maps);
    CHECK_FALSE(sr.degenerate);
    CHECK(sr.reduced_cells == 1);
    CHECK(sr.kept_cells == std::vector<int>{1});
    REQUIRE(sr.maps.size() == 1);
    CHECK(sr.maps[0] == FiniteMap({1}));
    CHECK(sr.map_target == std::vector<int>{1});
}

TEST_CASE("self-loops protect every cell from slave reduction") {
    // the identity map makes each cell its own input, so nothing goes
    std::vector<FiniteMap> maps = {FiniteMap({1, 2, 3}), FiniteMap({1, 1, 2})};
    SlaveReduction sr = slave_reduce_maps(3, maps);
    CHECK_FALSE(sr.degenerate);
    CHECK(sr.reduced_cells == 3);
    CHECK(sr.kept_cells == std::vector<int>{1, 2, 3});
    CHECK(sr.maps == maps);
    CHECK(sr.map_target == std::vector<int>{1, 2});
}

TEST_CASE("slave reduction cascades and merges maps that become equal") {
    // cell 3 feeds nothing; once it is gone cell 2 feeds nothing either, and
    // the two constants, which differed only at cell 3, collapse to one map
    std::vector<FiniteMap> maps = {FiniteMap({1, 1, 1}), FiniteMap({1, 1, 2})};
    SlaveReduction sr = slave_reduce_maps(3, maps);
    CHECK_FALSE(sr.degenerate);
    CHECK(sr.reduced_cells == 1);
    CHECK(sr.kept_cells == std::vector<int>{1});
    REQUIRE(sr.maps.size() == 1);
    CHECK(sr.maps[0] == FiniteMap({1}));
    CHECK(sr.map_target == std::vector<int>{1, 1});
}

TEST_CASE("slave reduction keeps everything when every cell is read") {
    std::vector<FiniteMap> maps = {FiniteMap({2, 3, 1})};
    SlaveReduction sr = slave_reduce_maps(3, maps);
    CHECK(sr.reduced_cells == 3);
    CHECK(sr.maps == maps);
}
