#include <cmath>
#include <random>

#include "doctest.h"
#include "simps/kinematics.hpp"
#include "simps/space.hpp"

using namespace simps;

TEST_SUITE("kinematics") {

TEST_CASE("acceleration headroom from rest is the full speed budget") {
    CHECK(limit_acceleration({0.0, 0.0}, {1.0, 0.0}, 1.34, 1.0) == doctest::Approx(1.34));
    CHECK(limit_acceleration({0.0, 0.0}, {0.0, 1.0}, 1.34, 0.5) == doctest::Approx(2.68));
}

TEST_CASE("at top speed the headroom depends on the turn angle") {
    const double v_max = 1.34, dt = 1.0;
    const Vec2 v{v_max, 0.0};

    // Straight ahead: nothing left.
    CHECK(limit_acceleration(v, {1.0, 0.0}, v_max, dt) == doctest::Approx(0.0));
    // Straight back: can shed all of it and rebuild in reverse.
    CHECK(limit_acceleration(v, {-1.0, 0.0}, v_max, dt) == doctest::Approx(2.0 * v_max));
    // Perpendicular: any push would overshoot the cap.
    CHECK(limit_acceleration(v, {0.0, 1.0}, v_max, dt) == doctest::Approx(0.0));
}

TEST_CASE("headroom is never negative, even at adversarial speeds") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> overshoot(0.999999999999, 1.000000000001);
    const double v_max = 1.34;
    for (int k = 0; k < 5000; ++k) {
        const double a = angle(rng), b = angle(rng);
        const double speed = v_max * overshoot(rng);  // hovers at the cap, both sides
        const Vec2 v{speed * std::cos(a), speed * std::sin(a)};
        const Vec2 dir{std::cos(b), std::sin(b)};
        CHECK(limit_acceleration(v, dir, v_max, 1.0) >= 0.0);
    }
}

TEST_CASE("integration from rest saturates at the speed cap") {
    const SpaceTopology plane = SpaceTopology::infinite();
    const KinematicState start{{0.0, 0.0}, {0.0, 0.0}};
    // Request far beyond the cap.
    const KinematicState next = integrate(start, {10.0, 0.0}, 1.34, 1.0, plane);
    CHECK(next.velocity.x == doctest::Approx(1.34));
    CHECK(next.velocity.y == 0.0);
    CHECK(next.position.x == doctest::Approx(1.34));
}

TEST_CASE("small pushes integrate linearly") {
    const SpaceTopology plane = SpaceTopology::infinite();
    const KinematicState start{{5.0, 5.0}, {1.0, 0.0}};
    const KinematicState next = integrate(start, {0.1, 0.0}, 1.34, 1.0, plane);
    CHECK(next.velocity.x == doctest::Approx(1.1));
    CHECK(next.velocity.y == 0.0);
    CHECK(next.position.x == doctest::Approx(6.1));
    CHECK(next.position.y == 5.0);
}

TEST_CASE("zero request coasts at constant velocity") {
    const SpaceTopology plane = SpaceTopology::infinite();
    const KinematicState start{{0.0, 0.0}, {0.5, -0.25}};
    const KinematicState next = integrate(start, {0.0, 0.0}, 1.34, 2.0, plane);
    CHECK(next.velocity.x == 0.5);
    CHECK(next.velocity.y == -0.25);
    CHECK(next.position.x == doctest::Approx(1.0));
    CHECK(next.position.y == doctest::Approx(-0.5));
}

TEST_CASE("two half steps accumulate the same velocity as one full step") {
    const SpaceTopology plane = SpaceTopology::infinite();
    const Vec2 req{0.3, -0.2};  // well under both the cap and the headroom
    const KinematicState start{{0.0, 0.0}, {0.2, 0.1}};

    const KinematicState full = integrate(start, req, 1.34, 1.0, plane);
    KinematicState halves = integrate(start, req, 1.34, 0.5, plane);
    halves = integrate(halves, req, 1.34, 0.5, plane);

    CHECK(halves.velocity.x == doctest::Approx(full.velocity.x).epsilon(1e-12));
    CHECK(halves.velocity.y == doctest::Approx(full.velocity.y).epsilon(1e-12));
}

TEST_CASE("speed never exceeds the cap under random stress") {
    const SpaceTopology torus = SpaceTopology::periodic(50.0);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coord(0.0, 50.0);
    std::uniform_real_distribution<double> push(-5.0, 5.0);
    std::uniform_real_distribution<double> vel(-1.0, 1.0);

    const double v_max = 1.34;
    for (int k = 0; k < 2000; ++k) {
        KinematicState st{{coord(rng), coord(rng)}, {vel(rng), vel(rng)}};
        for (int step = 0; step < 5; ++step) {
            st = integrate(st, {push(rng), push(rng)}, v_max, 1.0, torus);
            CHECK(st.velocity.norm() <= v_max * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("long pursuit in one direction stays pinned at the cap") {
    const SpaceTopology plane = SpaceTopology::infinite();
    KinematicState st{{0.0, 0.0}, {0.0, 0.0}};
    for (int step = 0; step < 100; ++step) st = integrate(st, {2.0, 1.0}, 1.0, 1.0, plane);
    CHECK(st.velocity.norm() == doctest::Approx(1.0));
    // Heading settled onto the push direction.
    const Vec2 dir = unit_or_zero(st.velocity);
    CHECK(dir.x == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-6));
    CHECK(dir.y == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("positions wrap while velocity is untouched") {
    const SpaceTopology torus = SpaceTopology::periodic(10.0);
    const KinematicState start{{9.5, 0.5}, {1.0, -1.0}};
    const KinematicState next = integrate(start, {0.0, 0.0}, 2.0, 1.0, torus);
    CHECK(next.position.x == doctest::Approx(0.5));
    CHECK(next.position.y == doctest::Approx(9.5));
    CHECK(next.velocity.x == 1.0);
    CHECK(next.velocity.y == -1.0);
}

TEST_CASE("request scaling by the urge magnitude") {
    const Vec2 w{0.5, 0.0};
    const Vec2 req = acceleration_request(w, 1.3);
    CHECK(req.x == doctest::Approx(0.65));
    CHECK(req.y == 0.0);
}

}  // TEST_SUITE
