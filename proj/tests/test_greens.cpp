// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vacsep/error.hpp"
#include "vacsep/greens.hpp"

using namespace vacsep;
using std::numbers::pi;

TEST_CASE("free function at equal times") {
  CHECK(g_free({0, 0, 1, 0}, {1, 0, 1, 0}) == doctest::Approx(1 / (2 * pi * pi)).epsilon(1e-15));
  CHECK(g_free({0, 0, 1, 0}, {0, 2, 1, 0}) == doctest::Approx(1 / (8 * pi * pi)).epsilon(1e-15));
  CHECK(g_free({0, 0, 1, 0}, {0, 0, 1, 0.5}) == doctest::Approx(-4 / (2 * pi * pi)));
}

TEST_CASE("free function is singular at coincidence and on the light cone") {
  CHECK_THROWS_AS(g_free({0, 0, 1, 0}, {0, 0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(g_free({0, 0, 1, 0}, {1, 0, 1, 1}), PreconditionError);
}

TEST_CASE("boundary function") {
  const SpacetimeEvent a{0, 0, 1, 0}, b{1000, 0, 1, 0};
  CHECK(g_boundary(a, b) - g_free(a, b) ==
        doctest::Approx(-1 / (2 * pi * pi * (1e6 + 4))).epsilon(1e-9));
  CHECK(g_boundary({0, 0, 0, 0}, {1, 2, 3, 0.5}) == 0.0);
  CHECK(g_boundary({1, 2, 3, 0.5}, {0, 0, 0, 0}) == 0.0);
  CHECK_THROWS_AS(g_boundary({0, 0, 1, 0}, {0, 0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(g_boundary({0, 0, -1, 0}, {0, 0, 1, 0}), PreconditionError);
}

TEST_CASE("regularized function") {
  CHECK(g_regularized({0, 0, 1, 0}, {0, 0, 1, 0}) ==
        doctest::Approx(-1 / (8 * pi * pi)).epsilon(1e-15));
  CHECK(g_regularized({0, 0, 1, 0}, {0, 0, 1, 0}) == doctest::Approx(-0.0126651).epsilon(1e-5));
  // Only r^2 - dt^2 enters.
  const double v1 = g_regularized({0, 0, 1, 0}, {2, 0, 1.5, 0});
  const double v2 = g_regularized({0, 0, 1, 0}, {std::sqrt(5.0), 0, 1.5, 1.0});
  CHECK(v1 == doctest::Approx(v2).epsilon(1e-14));
  CHECK_THROWS_AS(g_regularized({0, 0, 0, 0}, {0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("components at reference geometries") {
  const ComponentSet k = components({0.0, 1.0, 1.0, 0.1});
  CHECK(k.a == doctest::Approx(-1 / (16 * pi * pi)).epsilon(1e-15));
  CHECK(k.c == doctest::Approx(-1 / (16 * pi * pi)).epsilon(1e-15));
  CHECK(k.b == doctest::Approx(1 / (32 * pi * pi)).epsilon(1e-15));
  CHECK(k.d == doctest::Approx(1 / (32 * pi * pi)).epsilon(1e-15));
  CHECK(k.a == doctest::Approx(-6.33257e-3).epsilon(1e-5));

  const ComponentSet m = components({0.0, 1.0, 2.0, 0.05});
  CHECK(m.c == doctest::Approx(-1 / (36 * pi * pi)).epsilon(1e-15));
  CHECK(m.d == doctest::Approx(1 / (162 * pi * pi)).epsilon(1e-15));
}

TEST_CASE("components under swap") {
  const PairGeometry g{0.7, 1.0, 2.5, 0.05};
  const ComponentSet k = components(g), s = components(g.swapped());
  CHECK(k.a == s.a_prime);
  CHECK(k.b == s.b_prime);
  CHECK(k.a_prime == s.a);
  CHECK(k.c == s.c);
  CHECK(k.d == s.d);
}

TEST_CASE("geometry validation") {
  CHECK_THROWS_AS(components({-1.0, 1.0, 1.0, 0.1}), PreconditionError);
  CHECK_THROWS_AS(components({0.0, 1.0, 1.0, 2.0}), PreconditionError);
  CHECK_THROWS_AS(components({0.0, 1.0, 1.0, 0.0}), PreconditionError);
  CHECK_FALSE(PairGeometry{0.0, 0.05, 1.0, 0.1}.is_valid());
  CHECK(PairGeometry{0.0, 0.051, 1.0, 0.1}.is_valid());
}

TEST_CASE("momentum component by differentiation") {
  for (const PairGeometry& g : {PairGeometry{0, 1, 1, 0.1}, PairGeometry{1, 1, 2, 0.1}}) {
    const double d = components(g).d;
    CHECK(d_component_by_differentiation(g, 1e-3) == doctest::Approx(d).epsilon(1e-6));
  }
  CHECK_THROWS_AS(d_component_by_differentiation({0, 1, 1, 0.1}, 1.5), PreconditionError);
}

TEST_CASE("Casimir energy density") {
  const double e1 = casimir_energy_density(1.0);
  CHECK(e1 == doctest::Approx(-1 / (16 * pi * pi)).epsilon(1e-14));
  CHECK(casimir_energy_density(2.0) == doctest::Approx(e1 / 16).epsilon(1e-14));
  CHECK(casimir_energy_density(0.5) == doctest::Approx(-1 / (pi * pi)).epsilon(1e-14));
  for (double z : {0.1, 1.0, 7.0})
    CHECK(casimir_energy_density_finite_difference(z) ==
          doctest::Approx(casimir_energy_density(z)).epsilon(1e-6));
  CHECK_THROWS_AS(casimir_energy_density(0.0), PreconditionError);
}
