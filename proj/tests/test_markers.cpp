#include <cmath>

#include "doctest.h"
#include "hcflow/markers.hpp"

using namespace hcflow;

namespace {

FlowConfig interval_config(int nodes) {
    return FlowConfig(CurvatureSpec(1, 1, 0),
                      Grid(DomainSpec(DomainMode::interval, 1, 1.0), nodes), 0.5, 0.01);
}

}  // namespace

TEST_CASE("stationary flow: all identity residuals near zero") {
    const FlowConfig config = interval_config(101);
    const auto study = verify_evolution_identities(
        config, {InitialKind::stationary_cap, 0.0, 0.0}, 6, 0.02, 0.2);
    CHECK(study.markers_used == 6);
    CHECK(study.metric_residual < 5e-4);
    CHECK(study.normal_residual < 5e-4);
    CHECK(study.trace_h_residual < 5e-3);
    CHECK(study.f_evolution_residual < 5e-3);
}

TEST_CASE("subcritical flow: residuals shrink when tau is halved") {
    const FlowConfig config = interval_config(101);
    const InitialSpec init{InitialKind::subcritical_cap, 0.4, 0.0};
    const auto coarse = verify_evolution_identities(config, init, 6, 0.02, 0.2);
    const auto fine = verify_evolution_identities(config, init, 6, 0.01, 0.2);
    CHECK(coarse.metric_residual > 0.0);
    CHECK(coarse.metric_residual / fine.metric_residual >= 1.5);
    CHECK(coarse.normal_residual / fine.normal_residual >= 1.5);
}

TEST_CASE("study parameter validation") {
    const FlowConfig config = interval_config(101);
    const InitialSpec init{InitialKind::subcritical_cap, 0.4, 0.0};
    CHECK_THROWS_AS(verify_evolution_identities(config, init, 0, 0.02, 0.2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_evolution_identities(config, init, 4, -1.0, 0.2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_evolution_identities(config, init, 4, 0.1, 0.15),
                    std::invalid_argument);

    FlowConfig disk(CurvatureSpec(2, 1, 0),
                    Grid(DomainSpec(DomainMode::rotational_disk, 2, 1.0), 101), 0.5, 0.01);
    CHECK_THROWS_AS(verify_evolution_identities(disk, init, 4, 0.02, 0.2),
                    std::invalid_argument);
}
