#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace netsynth;

TEST_CASE("element fitting", "[fit]") {
    auto target = tuple5(2, 1, 1, 1, 1);

    SECTION("the four-element topology fits its own family member") {
        FitOptions opts;
        opts.starts = 40;
        opts.seed = 1;
        FitResult r = fit_elements(topo_fig7a(), target, opts);
        CHECK(r.best_residual < 1e-10);
        REQUIRE(r.best_values.size() == 4);
        CHECK(r.best_values[0] == Catch::Approx(0.25).epsilon(1e-4));
        CHECK(r.best_values[1] == Catch::Approx(0.5).epsilon(1e-4));
        CHECK(r.best_values[2] == Catch::Approx(0.5).epsilon(1e-4));
        CHECK(r.best_values[3] == Catch::Approx(4.0).epsilon(1e-4));
    }
    SECTION("no three-element skeleton comes close when R_k != 0") {
        for (const auto& sk : sp_skeletons_exact(3)) {
            FitOptions opts;
            opts.starts = 30;
            opts.seed = 2;
            FitResult r = fit_elements(sk, target, opts);
            INFO(sk.key());
            CHECK(r.best_residual > 1e-3);
        }
    }
    SECTION("excluded five-element topology resists an in-class target") {
        FitOptions opts;
        opts.starts = 40;
        opts.seed = 3;
        FitResult r = fit_elements(topo_fig9a(), tuple5(3, 2, 1, 1, 1), opts);
        CHECK(r.best_residual > 1e-4);
    }
    SECTION("deterministic for a fixed seed") {
        FitOptions opts;
        opts.starts = 10;
        opts.seed = 77;
        FitResult a = fit_elements(topo_fig7a(), target, opts);
        FitResult b = fit_elements(topo_fig7a(), target, opts);
        CHECK(a.best_residual == b.best_residual);
        CHECK(a.best_values == b.best_values);
    }
    SECTION("converged residual is seed-independent to 1e-9") {
        FitOptions a, b;
        a.starts = b.starts = 40;
        a.seed = 5;
        b.seed = 6;
        double ra = fit_elements(topo_fig7a(), target, a).best_residual;
        double rb = fit_elements(topo_fig7a(), target, b).best_residual;
        CHECK(std::abs(ra - rb) < 1e-9);
    }
    SECTION("seeded starts short-circuit the search") {
        FitOptions opts;
        opts.starts = 0;
        opts.seed = 9;
        opts.seeded_starts.push_back({0.25, 0.5, 0.5, 4.0});
        FitResult r = fit_elements(topo_fig7a(), target, opts);
        CHECK(r.best_residual < 1e-12);
        CHECK(r.starts == 1);
    }
    SECTION("early exit stops the multistart loop") {
        FitOptions opts;
        opts.starts = 200;
        opts.seed = 11;
        opts.early_exit = 1e-9;
        FitResult r = fit_elements(topo_fig7a(), target, opts);
        CHECK(r.best_residual < 1e-9);
        CHECK(r.starts < 200);
    }
}
