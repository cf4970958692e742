#include "subord/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

namespace subord {

SampleGrid CampaignConfig::campaign_grid()
{
    SampleGrid g;
    g.angular_count = 1024;
    return g;
}

std::size_t CampaignResult::inconsistent() const
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CampaignRecord& r) { return !r.verdict.consistent; }));
}

std::size_t CampaignResult::inconclusive() const
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CampaignRecord& r) { return r.verdict.inconclusive; }));
}

std::size_t CampaignResult::exercised() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CampaignRecord& r) {
        return r.verdict.hypotheses_pass();
    }));
}

namespace {

constexpr double kComfort = 1e-3;
constexpr int kMaxDraws = 1000;
constexpr int kMaxConstructions = 20;

class Draw {
public:
    Draw(std::uint64_t seed, std::size_t index)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
        rng_.seed(seq);
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::uint64_t raw() { return rng_(); }
    double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

private:
    std::mt19937_64 rng_;
};

// Hypotheses hold with a margin, so the instance exercises the implication
// rather than its boundary.
bool in_class(const AnalyticMap& p, const ParamSet& ps, const SampleGrid& grid)
{
    try {
        return class_membership(p, ps, membership_grid(grid)).passed();
    } catch (const Error&) {
        return false;
    }
}

bool comfortable(const AnalyticMap& q, const ParamSet& ps, const SampleGrid& grid)
{
    try {
        if (!in_class(q, ps, grid))
            return false;
        for (const auto& r : check_hypotheses(q, ps, grid))
            if (!(r.min_value > kComfort))
                return false;
        return true;
    } catch (const Error&) {
        return false;
    }
}

ParamSet draw_params(Draw& d)
{
    ParamSet ps;
    static constexpr double kAlphas[] = {0.0, 0.5, 1.0, 2.0};
    ps.alpha = d.coin() ? kAlphas[d.integer(0, 3)] : d.uniform(0.0, 2.0);
    ps.mu = d.coin(0.3) ? 1.0 : d.uniform(0.3, 1.0);
    ps.beta = std::polar(d.uniform(0.5, 2.0), d.uniform(-0.3, 0.3));
    ps.gamma = d.coin() ? d.uniform(0.0, 0.5) : 0.0;
    ps.delta = d.coin() ? Complex(d.uniform(0.0, 1.0), d.uniform(-0.2, 0.2)) : Complex(0.0);
    return ps;
}

JanowskiParams draw_janowski(Draw& d)
{
    const double A = d.uniform(0.1, 1.0);
    return {A, d.uniform(-0.9, A - 0.05)};
}

// Largest dilation factor keeping the pole of q at distance >= 1/0.97.
double max_dilation(const JanowskiParams& jp) { return std::min(1.6, 0.97 / std::max(std::abs(jp.B), 1e-9)); }

AnalyticMap dilate(const AnalyticMap& q, Complex s) { return compose(q, s * z_map()); }

AnalyticMap schwarz_composition(Draw& d, const AnalyticMap& q)
{
    const SchwarzSpec spec{d.raw(), d.integer(1, 4), d.uniform(0.3, 0.97)};
    return compose(q, random_schwarz(spec));
}

JanowskiParams wider(Draw& d, const JanowskiParams& jp)
{
    return {std::min(1.0, jp.A + d.uniform(0.02, 0.3)), std::max(-0.95, jp.B - d.uniform(0.02, 0.3))};
}

void build_dominant(Draw& d, CampaignInstance& inst, const AnalyticMap& q)
{
    AnalyticMap p;
    if (d.coin()) {
        inst.construction = "schwarz-composition";
        p = schwarz_composition(d, q);
    } else {
        int kind = d.integer(0, 2);
        const double tmax = max_dilation(inst.jp);
        if (kind == 0 && tmax < 1.1)
            kind = 1;
        if (kind == 0) {
            inst.construction = "outward-dilation";
            p = dilate(q, d.uniform(1.05, tmax));
        } else if (kind == 1) {
            inst.construction = "additive-perturbation";
            p = schwarz_composition(d, q) + std::polar(d.uniform(0.05, 1.0), d.angle()) * z_map();
        } else {
            inst.construction = "wider-janowski";
            p = janowski(wider(d, inst.jp));
        }
    }
    inst.maps = {{"p", p}, {"q", q}};
}

void build_subordinant(Draw& d, CampaignInstance& inst, const AnalyticMap& q)
{
    AnalyticMap p;
    const double tmax = max_dilation(inst.jp);
    if (d.coin()) {
        if (tmax >= 1.1 && d.coin()) {
            inst.construction = "outward-dilation";
            p = dilate(q, d.uniform(1.05, tmax));
        } else {
            inst.construction = "wider-janowski";
            p = janowski(wider(d, inst.jp));
        }
    } else {
        const JanowskiParams& jp = inst.jp;
        if (jp.A - jp.B >= 0.15 && d.coin()) {
            inst.construction = "narrower-janowski";
            const double A = d.uniform(std::max(jp.B + 0.1, jp.A - 0.5), jp.A);
            const double B = d.uniform(jp.B, std::min(jp.B + 0.3, A - 0.05));
            p = janowski({A, B});
        } else {
            inst.construction = "inward-rotated-dilation";
            p = dilate(q, std::polar(d.uniform(0.3, 0.95), d.angle()));
        }
    }
    inst.maps = {{"p", p}, {"q", q}};
}

void build_sandwich(Draw& d, CampaignInstance& inst, const AnalyticMap& q, const SampleGrid& grid)
{
    for (int attempt = 0;; ++attempt) {
        AnalyticMap p;
        AnalyticMap q1;
        AnalyticMap q2;
        if (d.coin()) {
            inst.construction = "nested-dilations";
            const double s1 = d.uniform(0.3, 0.7);
            q1 = dilate(q, s1);
            p = dilate(q, std::polar(d.uniform(s1 + 0.1, 0.97), d.angle()));
            q2 = q;
        } else if (d.coin()) {
            inst.construction = "shuffled-dilations";
            q1 = dilate(q, d.uniform(0.3, 1.0));
            p = dilate(q, std::polar(d.uniform(0.3, 1.0), d.angle()));
            q2 = dilate(q, d.uniform(0.3, 1.0));
        } else {
            inst.construction = "additive-perturbation";
            q1 = dilate(q, d.uniform(0.3, 0.7));
            p = schwarz_composition(d, q) + std::polar(d.uniform(0.05, 1.0), d.angle()) * z_map();
            q2 = q;
        }
        // q itself was screened; dilated copies are screened here.
        if (attempt + 1 >= 20 || (comfortable(q1, inst.ps, grid) && comfortable(q2, inst.ps, grid))) {
            inst.maps = {{"p", p}, {"q1", q1}, {"q2", q2}};
            return;
        }
    }
}

const AnalyticMap& map_named(const CampaignInstance& inst, const std::string& name)
{
    for (const auto& m : inst.maps)
        if (m.name == name)
            return m.map;
    throw Error(ErrorCode::BadParams, "instance has no map named " + name);
}

} // namespace

CampaignInstance make_instance(std::uint64_t seed, std::size_t index, const SampleGrid& grid)
{
    Draw d(seed, index);
    CampaignInstance inst;
    inst.index = index;
    static const char* kHarness[] = {"dominant", "subordinant", "sandwich"};
    inst.harness = kHarness[index % 3];

    AnalyticMap q;
    for (int attempt = 0;; ++attempt) {
        if (attempt == kMaxDraws)
            throw Error(ErrorCode::BadParams, "no Janowski instance with passing hypotheses was found");
        inst.ps = draw_params(d);
        inst.jp = draw_janowski(d);
        q = janowski(inst.jp);
        if (comfortable(q, inst.ps, grid))
            break;
    }
    inst.ps.A = inst.jp.A;
    inst.ps.B = inst.jp.B;

    // p must lie in the class as well; constructions that leave it are redrawn.
    for (int attempt = 0; attempt < kMaxConstructions; ++attempt) {
        if (inst.harness == "dominant")
            build_dominant(d, inst, q);
        else if (inst.harness == "subordinant")
            build_subordinant(d, inst, q);
        else
            build_sandwich(d, inst, q, grid);
        if (in_class(map_named(inst, "p"), inst.ps, grid))
            break;
    }
    return inst;
}

TheoremVerdict run_instance(const CampaignInstance& inst, const SampleGrid& grid)
{
    const auto& p = map_named(inst, "p");
    if (inst.harness == "dominant")
        return verify_dominant(p, map_named(inst, "q"), inst.ps, grid);
    if (inst.harness == "subordinant")
        return verify_subordinant(p, map_named(inst, "q"), inst.ps, grid);
    return verify_sandwich(p, map_named(inst, "q1"), map_named(inst, "q2"), inst.ps, grid);
}

unsigned worker_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("SUBORD_LAB_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0)
            return static_cast<unsigned>(std::min<long>(n, 1024));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CampaignResult run_campaign(const CampaignConfig& cfg)
{
    cfg.grid.validate();
    CampaignResult result;
    result.config = cfg;
    result.records.resize(cfg.trials);

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(cfg.trials);
    auto work = [&] {
        for (std::size_t i = next++; i < cfg.trials; i = next++) {
            try {
                auto inst = make_instance(cfg.seed, i, cfg.grid);
                auto verdict = run_instance(inst, cfg.grid);
                result.records[i] = {std::move(inst), std::move(verdict)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned n = std::min<std::size_t>(worker_count(cfg.threads), std::max<std::size_t>(cfg.trials, 1));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return result;
}

Json campaign_report(const CampaignResult& result)
{
    Json by_harness = Json::object();
    Json instances = Json::array();
    for (const auto& rec : result.records) {
        const auto& v = rec.verdict;
        auto& h = by_harness[rec.instance.harness];
        if (h.is_null())
            h = Json{{"instances", 0}, {"exercised", 0}, {"inconsistent", 0}, {"inconclusive", 0}};
        h["instances"] = h["instances"].get<int>() + 1;
        h["exercised"] = h["exercised"].get<int>() + (v.hypotheses_pass() ? 1 : 0);
        h["inconsistent"] = h["inconsistent"].get<int>() + (v.consistent ? 0 : 1);
        h["inconclusive"] = h["inconclusive"].get<int>() + (v.inconclusive ? 1 : 0);

        Json maps = Json::object();
        for (const auto& m : rec.instance.maps)
            maps[m.name] = serialize(m.map);
        Json hyps = Json::array();
        for (const auto& r : v.hypotheses)
            hyps.push_back(r);
        instances.push_back(Json{{"index", rec.instance.index},
                                 {"harness", rec.instance.harness},
                                 {"construction", rec.instance.construction},
                                 {"params", rec.instance.ps},
                                 {"maps", maps},
                                 {"premise", v.premise},
                                 {"conclusion", v.conclusion},
                                 {"hypotheses", hyps},
                                 {"hypotheses_pass", v.hypotheses_pass()},
                                 {"consistent", v.consistent},
                                 {"inconclusive", v.inconclusive}});
    }
    const auto& cfg = result.config;
    return Json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"grid", cfg.grid},
                {"summary",
                 {{"instances", result.records.size()},
                  {"exercised", result.exercised()},
                  {"inconsistent", result.inconsistent()},
                  {"inconclusive", result.inconclusive()},
                  {"by_harness", by_harness}}},
                {"instances", instances}};
}

} // namespace subord
