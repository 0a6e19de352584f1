#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kernelhom/densities.hpp"
#include "kernelhom/graphs.hpp"
#include "kernelhom/kernels.hpp"
#include "kernelhom/numeric.hpp"
#include "kernelhom/spectral.hpp"
#include "kernelhom/verify.hpp"

using namespace kernelhom;

namespace {

StepKernel kb() {
    return StepKernel::from_blocks({{1, 0}, {0, 1}}, {0.5, 0.5});
}

StepKernel kd() {
    return StepKernel::from_blocks({{1, -1}, {-1, 1}}, {0.5, 0.5});
}

}  // namespace

TEST_CASE("q_{m,d} via subgraphs: pinned values") {
    StepKernel w = random_graphon(3, 1);
    CHECK(qmd_via_subgraphs(2, 1, w) ==
          doctest::Approx(t_path_fast(2, w)).epsilon(1e-14));

    StepKernel c = StepKernel::constant(0.4);
    CHECK(qmd_via_subgraphs(3, 1, c) ==
          doctest::Approx(3 * 0.4 * 0.4).epsilon(1e-14));

    CHECK(qmd_via_subgraphs(3, 1, kd()) ==
          doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(qmd_via_subgraphs(4, 3, kd()), std::invalid_argument);
    CHECK_THROWS_AS(qmd_via_subgraphs(17, 1, kd()), std::invalid_argument);
    CHECK_THROWS_AS(qmd_via_subgraphs(4, 0, kd()), std::invalid_argument);
}

TEST_CASE("q_{m,d} via moments: pinned values") {
    StepKernel u = random_kernel(3, 1.0, 2);
    CHECK(qmd_via_moments(2, 1, u) ==
          doctest::Approx(moment(decompose(u), 2)).epsilon(1e-12));

    StepKernel c = StepKernel::constant(0.9);
    CHECK(qmd_via_moments(4, 2, c) ==
          doctest::Approx(ipow(0.9, 4)).epsilon(1e-12));

    StepKernel u6 = random_kernel(3, 1.0, 6);
    CHECK(std::abs(qmd_via_moments(6, 2, u6) - qmd_via_subgraphs(6, 2, u6)) <=
          1e-8);
}

TEST_CASE("the two q_{m,d} routes agree everywhere") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        int n = 1 + static_cast<int>(seed % 4);
        StepKernel u = random_kernel(n, 1.0, seed * 31 + 5);
        for (int m = 2; m <= 12; ++m) {
            for (int d = 1; 2 * d <= m; ++d) {
                CHECK(std::abs(qmd_via_subgraphs(m, d, u) -
                               qmd_via_moments(m, d, u)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("q_{m,1} closed form") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        StepKernel u = random_kernel(4, 1.0, seed);
        double p2 = t_path_fast(2, u);
        double k2 = edge_density(u);
        for (int m = 2; m <= 10; ++m) {
            double closed =
                (m - 1) * p2 +
                static_cast<double>(binomial(static_cast<unsigned>(m - 1), 2)) *
                    k2 * k2;
            CHECK(qmd_via_subgraphs(m, 1, u) ==
                  doctest::Approx(closed).epsilon(1e-10));
            // ... which dominates (m-1) t_{P_2}(U).
            CHECK(qmd_via_subgraphs(m, 1, u) >= (m - 1) * p2 - 1e-10);
        }
    }
}

TEST_CASE("binomial lower bound on q_{m,d}") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 1 + static_cast<int>(seed % 4);
        StepKernel u = random_kernel(n, 1.0, seed + 50);
        for (int m = 2; m <= 10; ++m) {
            for (int d = 1; 2 * d <= m; ++d) {
                VerdictReport r = verify_main_ineq(m, d, u, 1e-9);
                CHECK(r.pass);
            }
        }
    }

    // Equality on constant kernels.
    for (double c : {-0.7, 0.3, 1.0}) {
        StepKernel u = StepKernel::constant(c);
        for (int m = 2; m <= 10; ++m) {
            for (int d = 1; 2 * d <= m; ++d) {
                VerdictReport r = verify_main_ineq(m, d, u, 1e-9);
                CHECK(std::abs(r.slack) <= 1e-10);
            }
        }
    }

    VerdictReport zero = verify_main_ineq(3, 1, kd(), 1e-9);
    CHECK(zero.pass);
    CHECK(std::abs(zero.lhs) <= 1e-12);
    CHECK(std::abs(zero.rhs) <= 1e-12);
    CHECK(zero.context.extra.count("qmd_via_moments") == 1);
}

TEST_CASE("main inequality for paths and cycles") {
    // Constant graphons sit exactly on the equality case.
    for (double p : {0.0, 0.3, 0.5, 1.0}) {
        StepKernel w = StepKernel::constant(p);
        for (int m : {1, 2, 5}) {
            CHECK(std::abs(verify_main(Graph::path(m), w, 1e-9).slack) <=
                  1e-10);
        }
        for (int m : {3, 6}) {
            CHECK(std::abs(verify_main(Graph::cycle(m), w, 1e-9).slack) <=
                  1e-10);
        }
    }

    // Goodman equality for the two-block regular graphon.
    VerdictReport goodman = verify_main(Graph::cycle(3), kb(), 1e-9);
    CHECK(goodman.pass);
    CHECK(goodman.lhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(goodman.rhs == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(goodman.slack) <= 1e-10);
    // The near-equality report carries the brute-force cross-check.
    CHECK(goodman.context.extra.count("oracle_t_h") == 1);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        StepKernel w = random_graphon(1 + static_cast<int>(seed % 4), seed);
        for (int m = 2; m <= 8; ++m) {
            CHECK(verify_main(Graph::path(m), w, 1e-9).pass);
        }
        for (int m = 3; m <= 8; ++m) {
            CHECK(verify_main(Graph::cycle(m), w, 1e-9).pass);
        }
    }

    Graph star = Graph::generic(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(verify_main(star, kb(), 1e-9), std::invalid_argument);
}

TEST_CASE("commonality bound") {
    CHECK(std::abs(
              verify_common(Graph::path(4), StepKernel::constant(0.5), 1e-9)
                  .slack) <= 1e-10);
    VerdictReport c3 = verify_common(Graph::cycle(3), kb(), 1e-9);
    CHECK(c3.pass);
    CHECK(std::abs(c3.slack) <= 1e-10);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        StepKernel w = random_graphon(1 + static_cast<int>(seed % 4),
                                      seed + 1000);
        for (int m = 2; m <= 8; ++m) {
            VerdictReport main = verify_main(Graph::path(m), w, 1e-9);
            VerdictReport common = verify_common(Graph::path(m), w, 1e-9);
            CHECK(common.pass);
            // The pointwise bound is the weaker statement.
            CHECK(main.slack <= common.slack + 1e-9);
        }
        for (int m = 3; m <= 8; ++m) {
            VerdictReport main = verify_main(Graph::cycle(m), w, 1e-9);
            VerdictReport common = verify_common(Graph::cycle(m), w, 1e-9);
            CHECK(common.pass);
            CHECK(main.slack <= common.slack + 1e-9);
        }
    }
}

TEST_CASE("expansion identities") {
    // Single edge: no even subgraphs, both sides equal 1 at W + (1-W).
    auto k2_pair =
        expansion_identities(Graph::single_edge(), kb(), 1e-9);
    CHECK(k2_pair.first.pass);
    CHECK(k2_pair.first.lhs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k2_pair.first.rhs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k2_pair.second.pass);

    auto c3_pair = expansion_identities(Graph::cycle(3), kb(), 1e-9);
    CHECK(c3_pair.first.pass);
    CHECK(c3_pair.second.pass);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StepKernel w = random_graphon(1 + static_cast<int>(seed % 4),
                                      seed + 77);
        auto pair = expansion_identities(Graph::path(6), w, 1e-9);
        CHECK(pair.first.pass);
        CHECK(pair.second.pass);
    }
}

TEST_CASE("even-subgraph sum nonnegativity and the cycle re-count") {
    auto zero = verify_nonneg_decomposition(Graph::path(5),
                                            StepKernel::constant(0.0), 1e-9);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].lhs == 0.0);
    CHECK(zero[0].pass);

    auto c3 = verify_nonneg_decomposition(Graph::cycle(3), kd(), 1e-9);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].pass);
    CHECK(c3[1].claim_id == "nonneg-recount");
    CHECK(std::abs(c3[1].lhs - c3[1].rhs) <= 1e-9);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        StepKernel u = random_kernel(3, 1.0, seed + 11);
        auto c4 = verify_nonneg_decomposition(Graph::cycle(4), u, 1e-9);
        REQUIRE(c4.size() == 2);
        CHECK(c4[0].pass);
        CHECK(c4[1].pass);  // even-length extra term exercised
        auto c5 = verify_nonneg_decomposition(Graph::cycle(5), u, 1e-9);
        CHECK(c5[0].pass);
        CHECK(c5[1].pass);
        auto p6 = verify_nonneg_decomposition(Graph::path(6), u, 1e-9);
        REQUIRE(p6.size() == 1);
        CHECK(p6[0].pass);
    }

    CHECK_THROWS_AS(
        verify_nonneg_decomposition(Graph::path(17), kd(), 1e-9),
        std::invalid_argument);
}

TEST_CASE("plain nonnegativity of q_{m,d}") {
    CHECK(std::abs(
              verify_qmd_nonneg(4, 2, StepKernel::constant(0.0), 1e-9)
                  .lhs) == 0.0);
    for (int m = 2; m <= 8; ++m) {
        for (int d = 1; 2 * d <= m; ++d) {
            VerdictReport r = verify_qmd_nonneg(m, d, kd(), 1e-9);
            CHECK(r.pass);
            CHECK(std::abs(r.lhs) <= 1e-10);
        }
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        StepKernel u = random_kernel(4, 1.0, seed + 23);
        for (int m = 2; m <= 10; ++m) {
            for (int d = 1; 2 * d <= m; ++d) {
                CHECK(verify_qmd_nonneg(m, d, u, 1e-9).pass);
            }
        }
    }
}

TEST_CASE("stability of the commonality bound") {
    // At the random-colouring graphon both epsilon and the variance vanish.
    StepKernel half = StepKernel::constant(0.5);
    VerdictReport tight = stability_common(Graph::path(4), half, 1e-9);
    CHECK(tight.pass);
    CHECK(tight.context.extra.at("epsilon") <= 1e-10);
    CHECK(std::abs(tight.rhs) <= 1e-10);  // t_{P_2}(2W-1)

    VerdictReport c3 = stability_common(Graph::cycle(3), kb(), 1e-9);
    CHECK(c3.pass);
    CHECK(c3.context.extra.at("epsilon") <= 1e-10);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        StepKernel w = random_graphon(1 + static_cast<int>(seed % 4),
                                      seed + 3);
        CHECK(stability_common(Graph::path(4), w, 1e-9).pass);
        CHECK(stability_common(Graph::cycle(5), w, 1e-9).pass);
    }

    CHECK_THROWS_AS(stability_common(Graph::single_edge(), half, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(stability_common(Graph::path(1), half, 1e-9),
                    std::invalid_argument);
}

TEST_CASE("stability of the main bound") {
    for (double p : {0.2, 0.5, 0.9}) {
        StepKernel w = StepKernel::constant(p);
        VerdictReport r = stability_main(Graph::path(3), w, 1e-9);
        CHECK(r.pass);
        // U is constant, so the variance side and epsilon both vanish.
        CHECK(r.context.extra.at("epsilon") <= 1e-10);
        CHECK(std::abs(r.slack) <= 1e-10);
    }

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        StepKernel w = random_graphon(1 + static_cast<int>(seed % 4),
                                      seed + 17);
        CHECK(stability_main(Graph::path(3), w, 1e-9).pass);
        CHECK(stability_main(Graph::cycle(5), w, 1e-9).pass);
    }
}

TEST_CASE("degree profile and the Markov bound") {
    DegreeProfile kd_profile = degree_profile(kd());
    for (double deg : kd_profile.degrees) CHECK(std::abs(deg) <= 1e-14);
    CHECK(std::abs(kd_profile.variance) <= 1e-14);

    DegreeProfile const_profile = degree_profile(StepKernel::constant(0.7));
    CHECK(const_profile.degrees[0] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(std::abs(const_profile.variance) <= 1e-14);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        StepKernel u = random_kernel(4, 1.0, seed + 29);
        DegreeProfile profile = degree_profile(u);
        CHECK(profile.path2 ==
              doctest::Approx(t_path_fast(2, u)).epsilon(1e-12));
        for (double t : {0.01, 0.1, 1.0}) {
            CHECK(t * profile.markov_fraction(t) <= profile.path2 + 1e-12);
        }
        CHECK(profile.variance ==
              doctest::Approx(profile.path2 -
                              edge_density(u) * edge_density(u))
                  .epsilon(1e-12));
    }
}
