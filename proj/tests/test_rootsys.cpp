#include "doctest.h"
#include "oracles.hpp"

using namespace branchlab;

namespace {

const std::vector<std::string> small_systems{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"};

long long brute_force_root_count(const RootSystem& rs) {
    // closure of the simple roots under their reflections
    std::set<Weight> all;
    for (const auto& a : rs.simple_roots())
        for (const auto& w : oracle::orbit(a, rs.simple_roots())) all.insert(w);
    return static_cast<long long>(all.size());
}

} // namespace

TEST_SUITE("rootsys") {

TEST_CASE("root counts and Weyl orders of the supported series") {
    struct Expect { const char* label; std::size_t pos; unsigned long long order; };
    for (auto e : {Expect{"A1", 1, 2}, Expect{"A2", 3, 6}, Expect{"A4", 10, 120}, Expect{"B2", 4, 8},
                   Expect{"B3", 9, 48}, Expect{"C3", 9, 48}, Expect{"C4", 16, 384}, Expect{"D4", 12, 192},
                   Expect{"D5", 20, 1920}, Expect{"G2", 6, 12}, Expect{"F4", 24, 1152}}) {
        CAPTURE(e.label);
        const auto rs = build_root_system(e.label);
        CHECK(rs.label() == e.label);
        CHECK(rs.positive_roots().size() == e.pos);
        CHECK(rs.roots().size() == 2 * e.pos);
        CHECK(rs.weyl_order() == e.order);
        CHECK(brute_force_root_count(rs) == static_cast<long long>(2 * e.pos));
    }
}

TEST_CASE("A2 rho is the sum of the fundamental weights") {
    const auto rs = build_root_system("A2");
    CHECK(rs.rho() == rs.fundamental_weights()[0] + rs.fundamental_weights()[1]);
    CHECK(rs.dynkin_labels(rs.rho()) == std::vector<Rational>{1, 1});
}

TEST_CASE("F4 contains the half-integral simple root") {
    const auto rs = build_root_system("F4");
    const Weight half{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};
    CHECK(std::find(rs.simple_roots().begin(), rs.simple_roots().end(), half) != rs.simple_roots().end());
}

TEST_CASE("G2 conventions: first simple root long, [0,1] is the 7-dimensional module") {
    const auto rs = build_root_system("G2");
    CHECK(dot(rs.simple_roots()[0], rs.simple_roots()[0]) == 3 * dot(rs.simple_roots()[1], rs.simple_roots()[1]));
    CHECK(rs.cartan_matrix() == std::vector<std::vector<long long>>{{2, -3}, {-1, 2}});
    const std::vector<long long> seven{0, 1};
    CHECK(weyl_dimension(rs, rs.from_dynkin(seven)) == 7);
}

TEST_CASE("Cartan matrices") {
    CHECK(build_root_system("B2").cartan_matrix() == std::vector<std::vector<long long>>{{2, -2}, {-1, 2}});
    CHECK(build_root_system("C3").cartan_matrix() ==
          std::vector<std::vector<long long>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
}

TEST_CASE("reducible labels") {
    const auto rs = build_root_system("A1+A1+A1");
    CHECK(rs.rank() == 3);
    CHECK(rs.ambient_dim() == 6);
    CHECK(rs.components().size() == 3);
    CHECK(rs.weyl_order() == 8);
    CHECK(build_root_system("B2+A1").type_signature() == "A1+B2");
}

TEST_CASE("malformed labels are rejected") {
    CHECK_THROWS_AS(build_root_system("X3"), ConfigError);
    CHECK_THROWS_AS(build_root_system("B1"), ConfigError);
    CHECK_THROWS_AS(build_root_system("G3"), ConfigError);
    CHECK_THROWS_AS(build_root_system(""), ConfigError);
    CHECK_THROWS_AS(build_root_system("A"), ConfigError);
}

TEST_CASE("Weyl dimension against hand formulas") {
    const auto a2 = build_root_system("A2"), b2 = build_root_system("B2"), g2 = build_root_system("G2");
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b) {
            const std::vector<long long> l{a, b};
            CHECK(weyl_dimension(a2, a2.from_dynkin(l)) == oracle::dim_a2(a, b));
            CHECK(weyl_dimension(b2, b2.from_dynkin(l)) == oracle::dim_b2(a, b));
            CHECK(weyl_dimension(g2, g2.from_dynkin(l)) == oracle::dim_g2(a, b));
        }
    const std::vector<long long> one_zero{1, 0}, zero{0, 0}, three_two{3, 2};
    CHECK(weyl_dimension(a2, a2.from_dynkin(one_zero)) == 3);
    CHECK(weyl_dimension(a2, a2.from_dynkin(zero)) == 1);
    CHECK(weyl_dimension(a2, a2.from_dynkin(three_two)) == 42);
}

TEST_CASE("Weyl dimension requires dominant integral weights") {
    const auto a2 = build_root_system("A2");
    CHECK_THROWS_AS(weyl_dimension(a2, -a2.rho()), DomainError);
    CHECK_THROWS_AS(weyl_dimension(a2, Rational(1, 2) * a2.fundamental_weights()[0]), DomainError);
}

TEST_CASE("property: reflections of positive roots stay in the root system") {
    for (const auto& label : small_systems) {
        CAPTURE(label);
        const auto rs = build_root_system(label);
        for (const auto& a : rs.positive_roots())
            for (const auto& s : rs.simple_roots()) CHECK(rs.is_root(oracle::reflect(a, s)));
    }
}

TEST_CASE("property: Dynkin labels round trip and the trivial module has dimension 1") {
    for (const auto& label : small_systems) {
        CAPTURE(label);
        const auto rs = build_root_system(label);
        CHECK(weyl_dimension(rs, Weight(rs.ambient_dim())) == 1);
        for (const auto& labels : oracle::label_grid(rs.rank(), 2)) {
            const Weight w = rs.from_dynkin(labels);
            std::vector<Rational> expect(labels.begin(), labels.end());
            CHECK(rs.dynkin_labels(w) == expect);
            CHECK(rs.is_dominant(w));
            CHECK(rs.is_integral(w));
        }
    }
}

TEST_CASE("positive roots come in canonical order") {
    const auto rs = build_root_system("B3");
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
        CHECK(rs.height(pos[i]) <= rs.height(pos[i + 1]));
        if (rs.height(pos[i]) == rs.height(pos[i + 1])) CHECK(pos[i] > pos[i + 1]);
    }
}

TEST_CASE("regular subsystems of the worked examples") {
    SUBCASE("A2 keeping e1 - e2") {
        const auto g = build_root_system("A2");
        const auto sub = regular_subsystem(g, {{0}, {}, {}});
        CHECK(sub.roots.label() == "A1");
        CHECK(sub.u1_charges.size() == 1);
        CHECK(sub.label == "A1+u1");
        CHECK(sub.roots.simple_roots()[0] == Weight::from_ints({1, -1, 0}));
        CHECK(dot(sub.u1_charges[0], sub.roots.simple_roots()[0]) == 0);
    }
    SUBCASE("B2 keeping the first simple root") {
        const auto g = build_root_system("B2");
        const auto sub = regular_subsystem(g, {{0}, {}, {}});
        CHECK(sub.label == "A1+u1");
        CHECK(sub.u1_charges[0] == Weight::from_ints({1, 1}));
    }
    SUBCASE("G2 long roots") {
        const auto g = build_root_system("G2");
        std::vector<Weight> longs;
        for (const auto& a : g.positive_roots())
            if (dot(a, a) == 6) longs.push_back(a);
        const auto sub = regular_subsystem(g, {{}, longs, {}});
        CHECK(sub.roots.label() == "A2");
        CHECK(sub.u1_charges.empty());
        CHECK(sub.total_rank() == 2);
    }
}

TEST_CASE("subsystems that are not closed are rejected") {
    const auto b2 = build_root_system("B2");
    // e1 + e2 is a root but not in the reflection closure {+-e1, +-e2}
    const std::vector<Weight> short_pair{Weight::from_ints({1, 0}), Weight::from_ints({0, 1})};
    CHECK_THROWS_AS(regular_subsystem(b2, {{}, short_pair, {}}), InvalidSubsystem);
    CHECK_THROWS_AS(regular_subsystem(b2, {{}, {Weight::from_ints({2, 0})}, {}}), InvalidSubsystem);
    CHECK_THROWS_AS(regular_subsystem(b2, {{5}, {}, {}}), InvalidSubsystem);
}

TEST_CASE("explicit u(1) charges are validated") {
    const auto a2 = build_root_system("A2");
    CHECK_NOTHROW(regular_subsystem(a2, {{0}, {}, {Weight::from_ints({1, 1, -2})}}));
    CHECK_THROWS_AS(regular_subsystem(a2, {{0}, {}, {Weight::from_ints({1, 0, -1})}}), InvalidSubsystem);
    CHECK_THROWS_AS(regular_subsystem(a2, {{0}, {}, {Weight::from_ints({1, 1, 1})}}), InvalidSubsystem);
}

}
