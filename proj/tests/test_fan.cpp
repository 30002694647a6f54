#include "doctest.h"
#include "oracles.hpp"

using namespace branchlab;

TEST_SUITE("fan") {

TEST_CASE("A2 > A1 carrier") {
    const auto a2 = build_root_system("A2");
    const auto sub = regular_subsystem(a2, {{0}, {}, {}});
    const Fan fan = compute_fan(a2, sub.roots);
    const Weight a1 = a2.simple_roots()[0], a2r = a2.simple_roots()[1];
    const std::map<Weight, long long> expect{
        {Weight(3), -1}, {a2r, 1}, {a1 + a2r, 1}, {a1 + Rational(2) * a2r, -1}};
    CHECK(fan.carrier == expect);
    CHECK(fan.gamma0 == Weight(3));
    CHECK(fan.gamma_set.size() == 3);
}

TEST_CASE("the whole system has the trivial fan") {
    const auto b2 = build_root_system("B2");
    const Fan fan = compute_fan(b2, b2);
    CHECK(fan.carrier == std::map<Weight, long long>{{Weight(2), -1}});
    CHECK(fan.gamma_set.empty());
}

TEST_CASE("G2 > A2 carrier comes from the short roots") {
    const auto sd = splint_catalog("G2", "A2");
    const Fan fan = compute_fan(sd.parent, sd.stem_a.roots);
    std::vector<Weight> shorts;
    for (const auto& a : sd.parent.positive_roots())
        if (dot(a, a) == 2) shorts.push_back(a);
    REQUIRE(shorts.size() == 3);
    std::map<Weight, long long> expect;
    for (const auto& [w, c] : oracle::subset_product(shorts, 3)) expect[-w] = -c;
    CHECK(fan.carrier == expect);
    // a2 + (a1 + a2) = a1 + 2 a2: two of the eight subset terms cancel
    CHECK(fan.carrier.size() == 6);
}

TEST_CASE("property: carriers satisfy the defining product") {
    for (const auto& row : catalog_rows(4)) {
        CAPTURE(row.parent);
        CAPTURE(row.sub);
        const auto sd = splint_catalog(row.parent, row.sub);
        const Fan fan = compute_fan(sd.parent, sd.stem_a.roots);
        const auto expect = oracle::subset_product(sd.stem_s_positive(), sd.parent.ambient_dim());
        std::map<Weight, long long> got;
        for (const auto& [g, s] : fan.carrier) got[-g] = -s;
        CHECK(got == expect);
        CHECK(fan.carrier.at(fan.gamma0) == -1);
        for (const auto& g : fan.gamma_set) CHECK(sd.parent.height(g) > 0);
    }
}

TEST_CASE("fan branching of small modules") {
    SUBCASE("trivial module") {
        for (const auto& row : catalog_rows(3)) {
            const auto sd = splint_catalog(row.parent, row.sub);
            const auto r = fan_branching(sd.parent, sd.stem_a, Weight(sd.parent.ambient_dim()));
            REQUIRE(r.rows.size() == 1);
            CHECK(r.rows[0].coeff == 1);
            CHECK(r.rows[0].weight.is_zero());
        }
    }
    SUBCASE("G2 seven-dimensional module") {
        const auto sd = splint_catalog("G2", "A2");
        const std::vector<long long> l{0, 1};
        const auto r = fan_branching(sd.parent, sd.stem_a, sd.parent.from_dynkin(l));
        std::map<std::vector<long long>, long long> got;
        for (const auto& row : r.rows) got[row.dynkin] = row.coeff;
        CHECK(got == std::map<std::vector<long long>, long long>{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
        CHECK(branching_dimension(r, sd.stem_a) == 7);
    }
    SUBCASE("A2 > A1 + u(1), defining module") {
        const auto sd = splint_catalog("A2", "A1+u1");
        const std::vector<long long> l{1, 0};
        const auto r = fan_branching(sd.parent, sd.stem_a, sd.parent.from_dynkin(l));
        REQUIRE(r.rows.size() == 2);
        CHECK(r.rows[0].dynkin == std::vector<long long>{1});
        CHECK(r.rows[1].dynkin == std::vector<long long>{0});
        CHECK(r.rows[0].charges != r.rows[1].charges);
    }
}

TEST_CASE("singular coefficients reproduce the singular element") {
    // sum_xi k_xi e^xi times the fan product gives Psi back
    const auto sd = splint_catalog("B2", "A1+u1");
    const std::vector<long long> l{2, 1};
    const Weight mu = sd.parent.from_dynkin(l);
    const FormalSum k = singular_branching_coefficients(sd.parent, sd.stem_a, mu);
    const FormalSum prod = product_expand(sd.stem_s_positive(), 2);
    CHECK(k * prod == singular_element(sd.parent, mu));
}

TEST_CASE("subsystems outside the catalog: fan equals oracle") {
    const auto b3 = build_root_system("B3");
    const auto g2 = build_root_system("G2");
    const auto c3 = build_root_system("C3");
    struct Case { const RootSystem* rs; SubsystemSpec spec; };
    const std::vector<Case> cases{
        {&b3, {{0}, {}, {}}},
        {&b3, {{1, 2}, {}, {}}},
        {&b3, {{}, {}, {}}},
        {&g2, {{1}, {}, {}}},
        {&c3, {{0, 1}, {}, {}}},
    };
    for (const auto& c : cases) {
        const auto sub = regular_subsystem(*c.rs, c.spec);
        CAPTURE(sub.label);
        CHECK(sub.total_rank() == c.rs->rank());
        for (const auto& labels : oracle::label_grid(c.rs->rank(), 1)) {
            const Weight mu = c.rs->from_dynkin(labels);
            const auto f = fan_branching(*c.rs, sub, mu);
            const auto o = oracle_branching(*c.rs, mu, sub);
            CHECK(f.coefficients() == o.coefficients());
            CHECK(branching_dimension(f, sub) == weyl_dimension(*c.rs, mu));
        }
    }
}

}
