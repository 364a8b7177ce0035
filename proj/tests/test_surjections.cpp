#include <doctest.h>

#include <set>

#include "fmp/error.hpp"
#include "fmp/identities.hpp"
#include "fmp/surjection.hpp"
#include "goldens.hpp"

using namespace fmp;

namespace {

// All maps [r] -> [s] by brute force, filtered to Phi_{r,s}.
std::vector<std::vector<int>> brute_phi(int r, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(r), 1);
    while (true) {
        std::set<int> image(v.begin(), v.end());
        bool ok = static_cast<int>(image.size()) == s;
        for (int a = 0; a + 1 < r; ++a) ok = ok && v[a] != v[a + 1];
        if (ok) out.push_back(v);
        int pos = r - 1;
        while (pos >= 0 && v[pos] == s) v[pos--] = 1;
        if (pos < 0) break;
        ++v[pos];
    }
    return out;
}

std::vector<std::vector<int>> values_of(int r, int s) {
    std::vector<std::vector<int>> out;
    for (const auto& phi : enumerate_phi(r)) {
        if (phi.codomain() == s) out.emplace_back(phi.values().begin(), phi.values().end());
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_phi small cases") {
    const auto& one = enumerate_phi(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].beta() == 1);

    const auto& two = enumerate_phi(2);
    REQUIRE(two.size() == 2);
    CHECK(std::vector<int>(two[0].values().begin(), two[0].values().end()) == std::vector<int>{1, 2});
    CHECK(two[0].beta() == 1);
    CHECK(std::vector<int>(two[1].values().begin(), two[1].values().end()) == std::vector<int>{2, 1});
    CHECK(two[1].beta() == 2);
    CHECK(values_of(2, 1).empty());

    CHECK(values_of(3, 2) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
    for (const auto& phi : enumerate_phi(3)) {
        if (phi.codomain() == 2) CHECK(phi.beta() == 2);
    }
    CHECK(values_of(3, 3).size() == 6);

    CHECK_THROWS_AS(enumerate_phi(0), DomainError);
    CHECK_THROWS_AS(enumerate_phi(9), DomainError);
}

TEST_CASE("enumerate_phi matches brute force and is ordered") {
    for (int r = 1; r <= 6; ++r) {
        std::size_t total = 0;
        for (int s = 1; s <= r; ++s) {
            REQUIRE(values_of(r, s) == brute_phi(r, s));
            total += brute_phi(r, s).size();
        }
        REQUIRE(enumerate_phi(r).size() == total);
    }
    // r = 8 is supported and stays consistent with the partition by beta.
    std::size_t by_class = 0;
    for (const auto& [key, group] : group_phi(8)) by_class += group.size();
    CHECK(by_class == enumerate_phi(8).size());
}

TEST_CASE("descent table invariants") {
    for (int r = 1; r <= 6; ++r) {
        std::vector<std::size_t> per_beta(static_cast<std::size_t>(r) + 1, 0);
        for (const auto& phi : enumerate_phi(r)) {
            REQUIRE(phi.delta(1) == 0);
            for (int i = 2; i <= r; ++i) {
                const int step = phi.delta(i) - phi.delta(i - 1);
                REQUIRE(step == (phi(i - 1) > phi(i) ? 1 : 0));
            }
            REQUIRE(phi.beta() >= 1);
            REQUIRE(phi.beta() <= r);
            ++per_beta[phi.beta()];
        }
        std::size_t sum = 0;
        for (auto n : per_beta) sum += n;
        REQUIRE(sum == enumerate_phi(r).size());
    }
}

TEST_CASE("surjection validation") {
    CHECK_THROWS_AS(Surjection::from_values({1, 1}), DomainError);
    CHECK_THROWS_AS(Surjection::from_values({1, 3}), DomainError);
    CHECK_THROWS_AS(Surjection::from_values({}), DomainError);
    CHECK_THROWS_AS(ResidueTuple(5, {3, 2}), DomainError);
    CHECK_THROWS_AS(ResidueTuple(5, {0, 2}), DomainError);
    CHECK_THROWS_AS(ResidueTuple(5, {2, 5}), DomainError);
}

TEST_CASE("f_map and g_map examples") {
    {
        const std::vector<std::uint32_t> x{3};
        const auto [phi, a] = f_map(x, 5);
        CHECK(phi == Surjection::from_values({1}));
        CHECK(a == ResidueTuple(5, {3}));
        CHECK(g_map(phi, a) == x);
    }
    {
        const std::vector<std::uint32_t> x{3, 4};
        const auto [phi, a] = f_map(x, 5);
        CHECK(phi == Surjection::from_values({2, 1}));
        CHECK(a == ResidueTuple(5, {2, 3}));
        CHECK(g_map(phi, a) == x);
    }
    {
        const std::vector<std::uint32_t> x{1, 2};
        const auto [phi, a] = f_map(x, 5);
        CHECK(phi == Surjection::from_values({1, 2}));
        CHECK(a == ResidueTuple(5, {1, 3}));
        CHECK(g_map(phi, a) == x);
    }
    const std::vector<std::uint32_t> bad{2, 3};
    CHECK_THROWS_WITH_AS(f_map(bad, 5), "not in X_r", DomainError);
    CHECK_THROWS_AS(g_map(Surjection::from_values({1, 2}), ResidueTuple(5, {1})), DomainError);
}

TEST_CASE("bijection and cardinality by exhaustive enumeration") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        for (int r = 1; r <= 3; ++r) {
            const auto outcome = verify_bijection(r, PrimeField(p));
            INFO("p=" << p << " r=" << r << " " << outcome.detail);
            REQUIRE(outcome.passed());
        }
    }
}

TEST_CASE("variant_expansion examples") {
    for (const auto& k : {Index{3}, Index{1, 2}, Index{2, 1, 5}}) CHECK(variant_expansion(1, k) == FormalSum(k));
    CHECK(variant_expansion(2, Index{4, 7}) == FormalSum(Index{7, 4}));
    CHECK(variant_expansion(2, golden::kGeneric3) == golden::instantiate(golden::kVariant2Depth3, golden::kGeneric3));
    CHECK(variant_expansion(2, golden::kGeneric4) == golden::instantiate(golden::kVariant2Depth4, golden::kGeneric4));
    CHECK(variant_expansion(3, golden::kGeneric4) == golden::instantiate(golden::kVariant3Depth4, golden::kGeneric4));
    CHECK(variant_expansion(3, golden::kGeneric3) == FormalSum(Index{100, 10, 1}));
    CHECK_THROWS_AS(variant_expansion(0, Index{1}), DomainError);
    CHECK_THROWS_AS(variant_expansion(3, Index{1, 1}), DomainError);
    CHECK_THROWS_AS(variant_expansion(1, Index{}), DomainError);
}

TEST_CASE("variant_expansion weight and depth") {
    for (const auto& k : indices_up_to(7, 5)) {
        if (k.empty()) continue;
        for (int i = 1; i <= k.depth(); ++i) {
            const auto expansion = variant_expansion(i, k);
            for (const auto& [idx, c] : expansion.terms()) {
                REQUIRE(idx.weight() == k.weight());
                REQUIRE(idx.depth() <= k.depth());
                REQUIRE(c.sign() > 0);
            }
        }
    }
}
