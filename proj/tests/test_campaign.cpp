#include "doctest.h"

#include "subord/campaign.hpp"

#include <cstdlib>
#include <set>

using namespace subord;

TEST_CASE("make_instance is a function of (seed, index)")
{
    const auto grid = CampaignConfig::campaign_grid();
    for (std::size_t i = 0; i < 6; ++i) {
        const auto a = make_instance(11, i, grid);
        const auto b = make_instance(11, i, grid);
        CHECK(a.harness == b.harness);
        CHECK(a.construction == b.construction);
        REQUIRE(a.maps.size() == b.maps.size());
        for (std::size_t k = 0; k < a.maps.size(); ++k)
            CHECK(serialize(a.maps[k].map) == serialize(b.maps[k].map));
        CHECK(a.ps.alpha == b.ps.alpha);
        CHECK(a.ps.beta == b.ps.beta);
    }
    CHECK(serialize(make_instance(11, 0, grid).maps[0].map) != serialize(make_instance(12, 0, grid).maps[0].map));
}

TEST_CASE("instances cover all harnesses and sit inside the class")
{
    const auto grid = CampaignConfig::campaign_grid();
    std::set<std::string> harnesses;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto inst = make_instance(3, i, grid);
        harnesses.insert(inst.harness);
        CHECK_NOTHROW(inst.ps.validate());
        CHECK(inst.maps.size() == (inst.harness == "sandwich" ? 3u : 2u));
        for (const auto& m : inst.maps)
            CHECK(class_membership(m.map, inst.ps, grid).passed());
    }
    CHECK(harnesses == std::set<std::string>{"dominant", "subordinant", "sandwich"});
}

TEST_CASE("campaign report does not depend on the thread count")
{
    CampaignConfig cfg;
    cfg.trials = 9;
    cfg.seed = 5;
    cfg.threads = 1;
    const auto serial = run_campaign(cfg);
    cfg.threads = 3;
    const auto pooled = run_campaign(cfg);

    CHECK(campaign_report(serial).dump() == campaign_report(pooled).dump());
    REQUIRE(serial.records.size() == 9);
    for (std::size_t i = 0; i < serial.records.size(); ++i)
        CHECK(serial.records[i].instance.index == i);
    CHECK(serial.inconsistent() == 0);
    CHECK(serial.exercised() == 9);
}

TEST_CASE("worker_count resolution")
{
    CHECK(worker_count(4) == 4);
    ::setenv("SUBORD_LAB_THREADS", "3", 1);
    CHECK(worker_count(0) == 3);
    CHECK(worker_count(2) == 2);
    ::setenv("SUBORD_LAB_THREADS", "0", 1);
    CHECK(worker_count(0) >= 1);
    ::setenv("SUBORD_LAB_THREADS", "junk", 1);
    CHECK(worker_count(0) >= 1);
    ::unsetenv("SUBORD_LAB_THREADS");
    CHECK(worker_count(0) >= 1);
}
