#include <doctest.h>

#include <cmath>
#include <random>

#include "pacnav/metrics.hpp"

#include "helpers.hpp"

using namespace pacnav;
using pacnav::testing::history_of;
using pacnav::testing::random_history;

TEST_CASE("persistence of a straight path is 1") {
  CHECK(path_persistence(history_of({{2, 0}, {1, 0}, {0, 0}})) == doctest::Approx(1.0));
}

TEST_CASE("persistence of a right-angle turn is 0") {
  CHECK(path_persistence(history_of({{1, 1}, {1, 0}, {0, 0}})) == doctest::Approx(0.0));
}

TEST_CASE("persistence of a 45 degree turn is cos(45)") {
  const double s = std::sqrt(2.0) / 2.0;
  CHECK(path_persistence(history_of({{1 + s, s}, {1, 0}, {0, 0}})) ==
        doctest::Approx(s).epsilon(1e-9));
}

TEST_CASE("persistence needs at least 3 points") {
  CHECK_THROWS_AS(path_persistence(history_of({{1, 0}, {0, 0}})), InsufficientHistoryError);
}

TEST_CASE("similarity follows the angle between net displacements") {
  const auto east = history_of({{1, 0}, {0, 0}});
  const auto east_far = history_of({{2, 0}, {0, 0}});
  const auto west = history_of({{-1, 0}, {0, 0}});
  const auto north = history_of({{0, 1}, {0, 0}});
  CHECK(path_similarity(east, east_far) == doctest::Approx(1.0));
  CHECK(path_similarity(east, west) == doctest::Approx(0.0));
  CHECK(path_similarity(east, north) == doctest::Approx(0.5));
}

TEST_CASE("similarity rejects short or loitering histories") {
  const auto east = history_of({{1, 0}, {0, 0}});
  CHECK_THROWS_AS(path_similarity(east, history_of({{0, 0}})), InsufficientHistoryError);
  // Square loop: start equals end, net displacement zero.
  const auto loop = history_of({{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}});
  CHECK_THROWS_AS(path_similarity(east, loop), DegenerateGeometryError);
}

TEST_CASE("metrics stay in [0,1] over random histories") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> length(3, 15);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = random_history(rng, length(rng));
    const auto b = random_history(rng, length(rng));
    const double gamma = path_persistence(a);
    CHECK(gamma >= 0.0);
    CHECK(gamma <= 1.0);
    if (a.net_displacement().norm() > 1e-9 && b.net_displacement().norm() > 1e-9) {
      const double sigma = path_similarity(a, b);
      CHECK(sigma >= 0.0);
      CHECK(sigma <= 1.0);
      CHECK(path_similarity(b, a) == sigma);  // exact symmetry
    }
  }
}

namespace {

PathHistory transformed(const PathHistory& h, double angle, const Vec2& shift, double scale) {
  PathHistory out(static_cast<int>(h.capacity()));
  for (auto it = h.end(); it != h.begin();) {
    --it;
    out.update(scale * it->rotated(angle) + shift, 0.0);
  }
  return out;
}

}  // namespace

TEST_CASE("metrics are invariant to rigid motion and scale") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  std::uniform_real_distribution<double> shift(-100.0, 100.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_history(rng, 8);
    const auto b = random_history(rng, 8);
    if (a.net_displacement().norm() < 1e-6 || b.net_displacement().norm() < 1e-6) {
      continue;
    }
    const double th = angle(rng);
    const Vec2 t{shift(rng), shift(rng)};
    const double s = scale(rng);
    const auto at = transformed(a, th, t, s);
    const auto bt = transformed(b, th, t, s);
    CHECK(path_persistence(at) == doctest::Approx(path_persistence(a)).epsilon(1e-9));
    CHECK(path_similarity(at, bt) == doctest::Approx(path_similarity(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("persistence is 1 exactly for positively collinear displacements") {
  // Straight with uneven step lengths is still fully persistent.
  CHECK(path_persistence(history_of({{5, 5}, {2, 2}, {1, 1}, {0, 0}})) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Any turn strictly reduces it.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> turn(0.01, 3.1);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = turn(rng);
    const Vec2 second{1, 0};
    const Vec2 third = second + Vec2{std::cos(a), std::sin(a)};
    CHECK(path_persistence(history_of({third, second, {0, 0}})) < 1.0 - 1e-9);
  }
}
