#pragma once

#include "subord/error.hpp"

#include <string>
#include <vector>

namespace subord {

enum class Verdict { Pass, Fail };

/// Outcome of a strict inequality "quantity > 0" sampled over the disk.
/// verdict is Pass exactly when min_value > 0.
struct ConditionReport {
    std::string name;
    double min_value = 0.0;
    Complex argmin{};
    Verdict verdict = Verdict::Fail;
    std::vector<std::string> soft_flags;

    bool passed() const noexcept { return verdict == Verdict::Pass; }
};

inline Verdict verdict_for(double min_value) { return min_value > 0.0 ? Verdict::Pass : Verdict::Fail; }

} // namespace subord
