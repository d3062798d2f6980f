#include <doctest.h>

#include "schubert/errors.hpp"
#include "schubert/partition.hpp"
#include "schubert/tableau.hpp"

using namespace schubert;

namespace {

struct TestRng {
    unsigned long long state;
    explicit TestRng(unsigned seed) : state(seed * 2862933555777941757ULL + 3037000493ULL) {}
    unsigned long long next() {
        state = state * 2862933555777941757ULL + 3037000493ULL;
        return state >> 16;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<unsigned>(hi - lo + 1)); }
};

Partition random_partition(TestRng& rng, int max_weight) {
    int budget = rng.range(0, max_weight);
    std::vector<int> parts;
    int cap = budget;
    while (budget > 0 && cap > 0) {
        int p = rng.range(1, cap);
        parts.push_back(p);
        budget -= p;
        cap = std::min(cap, p);
        if (budget < cap) cap = budget;
    }
    return Partition(parts);
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

}  // namespace

TEST_CASE("conjugate on the reference shapes") {
    CHECK(Partition{4, 3, 2}.conjugate() == Partition{3, 3, 2, 1});
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
}

TEST_CASE("conjugate is an involution") {
    TestRng rng(7);
    for (int i = 0; i < 500; ++i) {
        Partition la = random_partition(rng, 30);
        CHECK(la.conjugate().conjugate() == la);
    }
}

TEST_CASE("rectangle containment") {
    CHECK(Partition{2, 2}.fits_rectangle(2, 2));
    CHECK_FALSE(Partition{3, 1}.fits_rectangle(2, 2));
    CHECK_FALSE(Partition{1, 1, 1}.fits_rectangle(2, 2));
    CHECK(Partition{}.fits_rectangle(1, 1));
}

TEST_CASE("standard tableau counts") {
    CHECK(standard_tableau_count(Partition{5}) == 1);
    CHECK(standard_tableau_count(Partition{2, 1}) == 2);
    CHECK(standard_tableau_count(Partition{2, 2}) == 2);
    CHECK(standard_tableau_count(Partition{}) == 1);
}

TEST_CASE("tableau count routes agree on the overlap") {
    for (int p = 0; p <= 8; ++p)
        for (const auto& la : partitions_of(p))
            CHECK(standard_tableau_count_enumerated(la) == standard_tableau_count_recursive(la));
}

TEST_CASE("tableau count symmetry and the square-sum identity") {
    for (int p = 1; p <= 7; ++p)
        for (const auto& la : partitions_of(p))
            CHECK(standard_tableau_count(la) == standard_tableau_count(la.conjugate()));
    for (int p = 1; p <= 6; ++p) {
        long long total = 0, pfact = 1;
        for (int i = 2; i <= p; ++i) pfact *= i;
        for (const auto& la : partitions_of(p)) {
            long long f = standard_tableau_count(la);
            total += f * f;
        }
        CHECK(total == pfact);
    }
}

TEST_CASE("partitions in a rectangle") {
    CHECK(partitions_in_rectangle(2, 2, 2) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(partitions_in_rectangle(0, 3, 4) == std::vector<Partition>{Partition{}});
    CHECK(partitions_in_rectangle(4, 2, 2) == std::vector<Partition>{Partition{2, 2}});

    // decreasing lexicographic order
    auto list = partitions_in_rectangle(4, 4, 4);
    CHECK(list == std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
                                         Partition{1, 1, 1, 1}});
}

TEST_CASE("rectangle counts follow the Gaussian binomial") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m) {
            long long total = 0;
            for (int k = 0; k <= n * m; ++k) {
                auto fwd = partitions_in_rectangle(k, n, m).size();
                auto bwd = partitions_in_rectangle(n * m - k, n, m).size();
                CHECK(fwd == bwd);
                total += static_cast<long long>(fwd);
            }
            CHECK(total == binomial(n + m, n));
        }
}

TEST_CASE("canonical tableau numbering") {
    CanonicalTableau t = canonical_tableau(Partition{4, 3, 2});
    REQUIRE(t.row_groups.size() == 3);
    CHECK(t.row_groups[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(t.row_groups[1] == std::vector<int>{5, 6, 7});
    CHECK(t.row_groups[2] == std::vector<int>{8, 9});
    REQUIRE(t.column_groups.size() == 4);
    CHECK(t.column_groups[0] == std::vector<int>{1, 5, 8});
    CHECK(t.column_groups[1] == std::vector<int>{2, 6, 9});
    CHECK(t.column_groups[2] == std::vector<int>{3, 7});
    CHECK(t.column_groups[3] == std::vector<int>{4});

    CanonicalTableau row = canonical_tableau(Partition{2});
    CHECK(row.row_groups == std::vector<std::vector<int>>{{1, 2}});
    CHECK(row.column_groups == std::vector<std::vector<int>>{{1}, {2}});

    CanonicalTableau col = canonical_tableau(Partition{1, 1});
    CHECK(col.row_groups == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(col.column_groups == std::vector<std::vector<int>>{{1, 2}});

    CHECK_THROWS_AS(canonical_tableau(Partition{}), input_error);
}

TEST_CASE("partition text form") {
    CHECK(Partition::parse("3,1") == Partition{3, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition{4, 3, 2}.to_string() == "4,3,2");
    CHECK(Partition{}.to_string() == "");
    CHECK(Partition::parse(Partition{7, 7, 1}.to_string()) == Partition{7, 7, 1});

    CHECK_THROWS_AS(Partition::parse("1,3"), input_error);
    CHECK_THROWS_AS(Partition::parse("0"), input_error);
    CHECK_THROWS_AS(Partition::parse("-2"), input_error);
    CHECK_THROWS_AS(Partition::parse("a"), input_error);
    CHECK_THROWS_AS(Partition::parse("3,"), input_error);
    CHECK_THROWS_AS(Partition::parse(",3"), input_error);
}
