#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>

namespace swor {

enum class BoundKind { lower, upper };

/// Closed enumeration of the tail bounds the evaluator knows about.
enum class BoundId {
    hoeffding,
    pokrovskiy,
    lower_at_zero,
    upper_at_zero,
    abs_dev_upper,
    abs_dev_lower,
    bm_serfling,
    bm_bernstein,
};

inline constexpr std::array<BoundId, 8> kAllBoundIds = {
    BoundId::hoeffding,     BoundId::pokrovskiy,    BoundId::lower_at_zero,
    BoundId::upper_at_zero, BoundId::abs_dev_upper, BoundId::abs_dev_lower,
    BoundId::bm_serfling,   BoundId::bm_bernstein,
};

inline const char* to_string(BoundKind k) {
    return k == BoundKind::lower ? "lower" : "upper";
}

inline const char* to_string(BoundId id) {
    switch (id) {
        case BoundId::hoeffding: return "hoeffding";
        case BoundId::pokrovskiy: return "pokrovskiy";
        case BoundId::lower_at_zero: return "lower_at_zero";
        case BoundId::upper_at_zero: return "upper_at_zero";
        case BoundId::abs_dev_upper: return "abs_dev_upper";
        case BoundId::abs_dev_lower: return "abs_dev_lower";
        case BoundId::bm_serfling: return "bm_serfling";
        case BoundId::bm_bernstein: return "bm_bernstein";
    }
    return "unknown";
}

/// Outcome of evaluating one bound formula. `raw` keeps the formula's value
/// even outside [0,1]; `value` is the clamped probability. When a
/// precondition fails the result is flagged inapplicable with a reason, and
/// `value` must not take part in comparisons.
struct BoundResult {
    BoundKind kind = BoundKind::upper;
    double raw = 0.0;
    double value = 0.0;
    bool applicable = false;
    std::string reason;                    ///< empty when applicable
    std::map<std::string, double> inputs;  ///< statistics the formula consumed

    static BoundResult ok(BoundKind kind, double raw, std::map<std::string, double> inputs) {
        BoundResult r;
        r.kind = kind;
        r.raw = raw;
        r.value = std::clamp(raw, 0.0, 1.0);
        r.applicable = true;
        r.inputs = std::move(inputs);
        return r;
    }

    static BoundResult not_applicable(BoundKind kind, std::string reason,
                                      std::map<std::string, double> inputs) {
        BoundResult r;
        r.kind = kind;
        r.applicable = false;
        r.reason = std::move(reason);
        r.inputs = std::move(inputs);
        return r;
    }
};

} // namespace swor
