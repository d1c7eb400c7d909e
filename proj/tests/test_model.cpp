#include <doctest.h>

#include <cmath>

#include "fkpp/errors.hpp"
#include "fkpp/model.hpp"

using namespace fkpp;

TEST_CASE("grid construction") {
    SUBCASE("spacing from bounds and count") {
        const Grid1D g = make_grid(0.0, 1.0, 11);
        CHECK(g.dx == doctest::Approx(0.1).epsilon(1e-15));
        CHECK(g.x.front() == 0.0);
        CHECK(g.x.back() == 1.0);

        const Grid1D wide = make_grid(0.0, 400.0, 4001);
        CHECK(wide.dx == doctest::Approx(0.1).epsilon(1e-15));
    }

    SUBCASE("uniform spacing to within rounding") {
        const Grid1D g = make_grid(-3.7, 12.9, 837);
        for (std::size_t i = 0; i + 1 < g.n; ++i) {
            CHECK(std::abs(g.x[i + 1] - g.x[i] - g.dx) <= 1e-12 * std::abs(g.dx));
        }
    }

    SUBCASE("rejects bad bounds and tiny grids") {
        CHECK_THROWS_AS(make_grid(1.0, 0.0, 5), invalid_bounds_error);
        CHECK_THROWS_AS(make_grid(0.0, 0.0, 5), invalid_bounds_error);
        CHECK_THROWS_AS(make_grid(0.0, 1.0, 2), invalid_bounds_error);
    }
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW((PhysicalParams{1.0, 1.0}.validate()));
    CHECK_NOTHROW((PhysicalParams{1.0, 0.0}.validate())); // pure diffusion is allowed
    CHECK_NOTHROW((PhysicalParams{1.0, -1.0}.validate())); // negative U only for the audit
    CHECK_THROWS_AS((PhysicalParams{0.0, 1.0}.validate()), nonpositive_parameter_error);
    CHECK_THROWS_AS((PhysicalParams{-2.0, 1.0}.validate()), nonpositive_parameter_error);
    CHECK_THROWS_AS((PhysicalParams{1.0, -1.0}.require_positive_reaction()),
                    nonpositive_parameter_error);
    CHECK_THROWS_AS((PhysicalParams{1.0, 0.0}.require_positive_reaction()),
                    nonpositive_parameter_error);

    CHECK_NOTHROW(ScalingParam{1.0}.validate());
    CHECK_NOTHROW(ScalingParam{0.05}.validate());
    CHECK_THROWS_AS(ScalingParam{0.0}.validate(), nonpositive_parameter_error);
    CHECK_THROWS_AS(ScalingParam{-0.1}.validate(), nonpositive_parameter_error);
    CHECK_THROWS_AS(ScalingParam{1.5}.validate(), nonpositive_parameter_error);
}

TEST_CASE("dimensionless map") {
    SUBCASE("unit parameters are the identity") {
        const DimensionlessMap map({1.0}, {1.0, 1.0});
        const auto [x, t] = map.to_dimensionless(3.0, 2.0);
        CHECK(x == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(t == doctest::Approx(2.0).epsilon(1e-15));
    }

    SUBCASE("linear scaling in epsilon") {
        const DimensionlessMap map({0.5}, {1.0, 1.0});
        const auto [x, t] = map.to_dimensionless(3.0, 2.0);
        CHECK(x == doctest::Approx(6.0).epsilon(1e-15));
        CHECK(t == doctest::Approx(4.0).epsilon(1e-15));
    }

    SUBCASE("diffusion rescales space only") {
        const DimensionlessMap map({1.0}, {4.0, 1.0});
        const auto [x, t] = map.to_dimensionless(2.0, 1.0);
        CHECK(x == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(t == doctest::Approx(1.0).epsilon(1e-15));
    }

    SUBCASE("round trip") {
        const DimensionlessMap map({0.3}, {2.7, 0.9});
        for (const double x : {-5.0, 0.1, 17.3}) {
            for (const double t : {0.2, 1.0, 42.0}) {
                const auto [xt, tt] = map.to_dimensionless(x, t);
                const auto [xb, tb] = map.from_dimensionless(xt, tt);
                CHECK(std::abs(xb - x) <= 1e-14 * std::abs(x));
                CHECK(std::abs(tb - t) <= 1e-14 * std::abs(t));
            }
        }
    }

    SUBCASE("needs a positive reaction rate") {
        CHECK_THROWS_AS(DimensionlessMap({1.0}, {1.0, 0.0}), nonpositive_parameter_error);
        CHECK_THROWS_AS(DimensionlessMap({1.0}, {1.0, -2.0}), nonpositive_parameter_error);
    }
}

TEST_CASE("solved ansatz constants") {
    for (const double d : {0.5, 1.0, 3.0}) {
        for (const double u : {0.25, 1.0, 2.0}) {
            const AnsatzParams ap = AnsatzParams::solved({d, u});
            CHECK(ap.c == doctest::Approx(1.0 / (4.0 * d)).epsilon(1e-15));
            CHECK(ap.a == 2.0);
            CHECK(ap.b == -1.0);
            CHECK(ap.alpha == u);
        }
    }
}
