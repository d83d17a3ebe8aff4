#include <doctest.h>

#include <cmath>

#include "eua/heuristics.hpp"
#include "test_util.hpp"

using namespace eua;
using namespace eua::testutil;

TEST_CASE("loadbias shape contract with default parameters") {
    HeuristicParams p;
    const LoadbiasCurve curve = build_loadbias(p);

    CHECK(std::abs(curve.eval(0.0) - p.y1) < 1e-9);
    CHECK(curve.f_c() > p.f0);
    CHECK(curve.f_c() > 0.9);
    CHECK(curve.f_c() < 1.2);
    CHECK(std::abs(curve.eval(curve.f_c()) - p.y_min) < 1e-6);

    // continuity at f_c: the linear branch starts exactly at y_min
    const double just_right = std::nextafter(curve.f_c(), 10.0);
    CHECK(std::abs(curve.eval(just_right) - curve.eval(curve.f_c())) < 1e-9);

    // unique maximum at f0 on a 0.001 grid
    double best_f = -1, best_v = -1e300;
    for (double f = 0.0; f <= curve.f_c() + 0.5; f += 0.001) {
        const double v = curve.eval(f);
        if (v > best_v) {
            best_v = v;
            best_f = f;
        }
    }
    CHECK(std::abs(best_f - p.f0) <= 0.02);

    // strictly decreasing on (f0, f_c]
    double prev = curve.eval(p.f0);
    for (double f = p.f0 + 0.001; f <= curve.f_c(); f += 0.001) {
        const double v = curve.eval(f);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("loadbias shape contract holds for other accepted parameterizations") {
    for (double y1 : {5.0, 40.0}) {
        for (double f0 : {0.7, 1.0}) {
            for (double k_e : {6.0, 20.0}) {
                HeuristicParams p;
                p.y1 = y1;
                p.f0 = f0;
                p.k_e = k_e;
                const LoadbiasCurve curve = build_loadbias(p);
                CHECK(std::abs(curve.eval(0.0) - y1) < 1e-9);
                CHECK(curve.f_c() > f0);
                CHECK(std::abs(curve.eval(curve.f_c()) - p.y_min) < 1e-6);
                double prev = curve.eval(f0);
                for (double f = f0 + 0.001; f <= curve.f_c(); f += 0.001) {
                    CHECK(curve.eval(f) < prev);
                    prev = curve.eval(f);
                }
            }
        }
    }
}

TEST_CASE("loadbias rejects shapes without a crossover") {
    HeuristicParams p;
    p.k_e = -1.0;  // curve cannot rise to f0 nor drop to y_min
    CHECK_THROWS_WITH_AS(build_loadbias(p),
                         doctest::Contains("k_e must be positive"), std::invalid_argument);
}

TEST_CASE("loadbias evaluates at max(f_core, f_ram)") {
    HeuristicParams p;
    const LoadbiasCurve curve = build_loadbias(p);
    CHECK(curve({0.0, 0.0}) == doctest::Approx(p.y1));
    CHECK(curve({curve.f_c(), 0.0}) == doctest::Approx(p.y_min).epsilon(1e-9));
    CHECK(curve({curve.f_c() + 0.1, 0.0}) == doctest::Approx(p.y_min - 20.0));
    CHECK(curve({0.2, 0.8}) == doctest::Approx(curve.eval(0.8)));
}

TEST_CASE("cosine similarity of demand against remaining space") {
    SUBCASE("parallel") {
        const Instance inst = centralized({{1, 1}}, {{2, 2}});
        const Matrix theta = cosine_similarities(inst, Allocation(1));
        CHECK(theta.at(0, 0) == doctest::Approx(1.0));
    }
    SUBCASE("orthogonal") {
        const Instance inst = centralized({{1, 0}, {0, 1}}, {{1, 2}});
        Allocation alloc(2);
        alloc.assignment = {0, Allocation::kNone};  // remaining = (0, 2)
        const Matrix theta = cosine_similarities(inst, alloc);
        CHECK(theta.at(0, 0) == doctest::Approx(0.0));
    }
    SUBCASE("exhausted server gives 0 after clamping") {
        const Instance inst = centralized({{3, 3}, {1, 1}}, {{2, 2}});
        Allocation alloc(2);
        alloc.assignment = {0, Allocation::kNone};  // remaining clamps to (0, 0)
        const Matrix theta = cosine_similarities(inst, alloc);
        CHECK(theta.at(1, 0) == 0.0);
    }
    SUBCASE("theta stays in [0, 1] on random allocations") {
        Rng rng(13);
        for (int rep = 0; rep < 50; ++rep) {
            const Instance inst = random_instance(rng);
            Allocation alloc(inst.n_users());
            for (int i = 0; i < inst.n_users(); ++i) {
                alloc.assignment[i] =
                    static_cast<int>(rng.next_int(-1, inst.n_servers() - 1));
            }
            const Matrix theta = cosine_similarities(inst, alloc);
            for (double t : theta.v) {
                CHECK(t >= 0.0);
                CHECK(t <= 1.0);
            }
        }
    }
}

TEST_CASE("allocation_input composition") {
    SUBCASE("only the loadbias survives with zero weights") {
        HeuristicParams p;
        p.k1 = p.k2 = p.k3 = 0.0;
        const LoadbiasCurve curve = build_loadbias(p);
        const Instance inst = centralized({{1, 1}, {2, 2}}, {{10, 10}, {10, 10}});
        const Matrix input = allocation_input(inst, Allocation(2), curve, p);
        for (double v : input.v) CHECK(v == doctest::Approx(p.y1));
    }
    SUBCASE("b3 is half of k3 in the reference configuration") {
        HeuristicParams p;
        p.k1 = 10;
        p.k2 = 20;
        p.k3 = 30;
        CHECK(p.b3() == doctest::Approx(15.0));
    }
    SUBCASE("uniform entities with parallel demands add k3/2") {
        HeuristicParams p;
        p.k1 = 10;
        p.k2 = 20;
        p.k3 = 30;
        const LoadbiasCurve curve = build_loadbias(p);
        // identical users and servers: D = C = 0; demand (1,1) parallel to
        // the untouched remaining space (5,5): theta = 1
        const Instance inst = centralized({{1, 1}, {1, 1}}, {{5, 5}, {5, 5}});
        const Matrix input = allocation_input(inst, Allocation(2), curve, p);
        for (double v : input.v) CHECK(v == doctest::Approx(p.y1 + p.k3 / 2));
    }
}

TEST_CASE("uncovered_input mutes units at 2*y_min") {
    HeuristicParams p;
    CHECK(uncovered_input(p) == doctest::Approx(-180.0));
    p.y_min = -1.0;
    CHECK(uncovered_input(p) == doctest::Approx(-2.0));
}

TEST_CASE("muted input suppresses activation probability") {
    // two units, one at the muted level, one at 0; run the EMA for 10
    // steps and compare softmax masses
    NetworkState st;
    st.params = NetworkParams{};
    st.support = Matrix(1, 2);
    st.activation = Matrix(1, 2);
    st.activation.at(0, 0) = 1.0;
    HeuristicParams p;
    Matrix input(1, 2);
    input.at(0, 0) = 0.0;
    input.at(0, 1) = uncovered_input(p);
    for (int t = 0; t < 10; ++t) {
        update_support(st, raw_support(st, input));
    }
    const Matrix pi = confidences(st);
    CHECK(pi.at(0, 1) / pi.at(0, 0) < 1e-30);
}

TEST_CASE("no_alloc_input") {
    SUBCASE("uniform users with b0 = 0 give all zeros") {
        HeuristicParams p;
        p.b0 = 0.0;
        const Instance inst = centralized({{2, 2}, {2, 2}}, {{10, 10}});
        for (double v : no_alloc_input(inst, p)) CHECK(v == doctest::Approx(0.0));
    }
    SUBCASE("substitution example") {
        // k0=10, r_core=1.5, D_core = (-0.5, +0.5), b0=-30
        HeuristicParams p;
        p.k0 = 10.0;
        p.b0 = -30.0;
        const Instance inst = centralized({{1, 1}, {3, 1}}, {{8.0 / 3.0, 10}});
        CHECK(dc_ratio(inst).core == doctest::Approx(1.5));
        const auto input = no_alloc_input(inst, p);
        CHECK(input[0] == doctest::Approx(-37.5));
        CHECK(input[1] == doctest::Approx(-22.5));
    }
}

TEST_CASE("external_inputs assembly") {
    HeuristicParams p;
    p.b0 = -30.0;
    const LoadbiasCurve curve = build_loadbias(p);

    SUBCASE("centralized: no muted entries, shape n_u x (n_s+1)") {
        const Instance inst = centralized({{1, 2}, {2, 1}}, {{5, 5}, {4, 4}});
        const Matrix input = external_inputs(inst, Allocation(2), curve, p);
        CHECK(input.rows == 2);
        CHECK(input.cols == 3);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                CHECK(input.at(i, j) != uncovered_input(p));
            }
        }
    }
    SUBCASE("fully uncovered user row") {
        std::vector<User> users{user(0, {1, 1}, {50, 50})};
        std::vector<Server> servers{server(0, {10, 10}, {0, 0}, 5.0),
                                    server(1, {10, 10}, {99, 99}, 5.0)};
        const Instance inst(users, servers, CaseKind::distributed);
        const Matrix input = external_inputs(inst, Allocation(1), curve, p);
        CHECK(input.at(0, 0) == uncovered_input(p));
        CHECK(input.at(0, 1) == uncovered_input(p));
        CHECK(input.at(0, 2) == doctest::Approx(p.b0));  // single user: D = 0
    }
    SUBCASE("pure function of instance, allocation and params") {
        Rng rng(19);
        const Instance inst = random_instance(rng);
        Allocation alloc(inst.n_users());
        for (int i = 0; i < inst.n_users(); ++i) {
            for (int j = 0; j < inst.n_servers(); ++j) {
                if (inst.covered(i, j)) {
                    alloc.assignment[i] = j;
                    break;
                }
            }
        }
        const Matrix a = external_inputs(inst, alloc, curve, p);
        const Matrix b = external_inputs(inst, alloc, curve, p);
        CHECK(a == b);
    }
}

TEST_CASE("monotone pressure: filling a server past f0 lowers its column") {
    HeuristicParams p;
    const LoadbiasCurve curve = build_loadbias(p);
    double prev = curve.eval(p.f0);
    for (double f = p.f0 + 0.01; f < 2.0; f += 0.01) {
        const double v = curve.eval(f);
        CHECK(v < prev);
        prev = v;
    }
}
