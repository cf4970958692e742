#pragma once

#include "subord/families.hpp"
#include "subord/report.hpp"
#include "subord/theorem.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace subord {

/// Falsification campaign: random instances of the three theorems, each
/// checked for a premise that Holds with passing hypotheses and a conclusion
/// that Fails.
struct CampaignConfig {
    std::size_t trials = 500;
    std::uint64_t seed = 0;
    SampleGrid grid = campaign_grid();
    /// 0 means SUBORD_LAB_THREADS, else the hardware concurrency.
    unsigned threads = 0;

    /// Default radii with 1024 angles.
    static SampleGrid campaign_grid();
};

struct NamedMap {
    std::string name;
    AnalyticMap map;
};

struct CampaignInstance {
    std::size_t index = 0;
    /// "dominant", "subordinant" or "sandwich".
    std::string harness;
    /// How p (and q1, q2) were derived from the Janowski q.
    std::string construction;
    JanowskiParams jp;
    ParamSet ps;
    /// p, q for dominant/subordinant; p, q1, q2 for sandwich.
    std::vector<NamedMap> maps;
};

struct CampaignRecord {
    CampaignInstance instance;
    TheoremVerdict verdict;
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<CampaignRecord> records;

    std::size_t inconsistent() const;
    std::size_t inconclusive() const;
    /// Instances whose hypotheses all passed.
    std::size_t exercised() const;
};

/// Deterministic in (seed, index): the instance RNG is seeded from both.
CampaignInstance make_instance(std::uint64_t seed, std::size_t index, const SampleGrid& grid);

TheoremVerdict run_instance(const CampaignInstance& inst, const SampleGrid& grid);

/// Runs all trials on a worker pool; records are ordered by index regardless
/// of scheduling.
CampaignResult run_campaign(const CampaignConfig& cfg);

/// requested if non-zero, else SUBORD_LAB_THREADS if set and positive, else
/// std::thread::hardware_concurrency() (at least 1).
unsigned worker_count(unsigned requested);

Json campaign_report(const CampaignResult& result);

} // namespace subord
