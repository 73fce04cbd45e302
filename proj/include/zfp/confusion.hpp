#pragma once

#include <cstdint>

namespace zfp {

// Weighted binary confusion counts. Positive (+1) is the attack class, so
// fp is the mass of normal samples flagged as attacks -- the quantity this
// project drives to zero -- and fn the mass of attacks let through.
struct ConfusionMatrix {
    std::int64_t tn = 0;
    std::int64_t tp = 0;
    std::int64_t fn = 0;
    std::int64_t fp = 0;

    std::int64_t total() const { return tn + tp + fn + fp; }

    void add(int actual, int predicted, std::int64_t weight) {
        if (actual > 0) {
            (predicted > 0 ? tp : fn) += weight;
        } else {
            (predicted > 0 ? fp : tn) += weight;
        }
    }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

} // namespace zfp
