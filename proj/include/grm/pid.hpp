#pragma once

#include "grm/homalg.hpp"
#include "grm/report.hpp"

#include <cstdint>
#include <vector>

namespace grm {

/// Z-graded k[t]-module assembled from shifted atoms: F = k[t], L = k[t, t^-1], T(m) = k[t]/(t^m).
struct PidAtom {
    enum class Kind { F, L, T };
    Kind kind = Kind::F;
    std::uint32_t m = 0; // for T only, >= 1
    std::int64_t shift = 0;

    std::string to_string() const;
};

struct PidGradedModule {
    std::vector<PidAtom> atoms;
};

struct PidDimensions {
    DimensionVerdict graded;   // in Z-graded modules
    DimensionVerdict ungraded; // in all modules
};

/// Per atom: F -> (1, 1), L -> (0, 1), T(m) -> (1, 1); maximum over atoms; shifts are irrelevant.
/// Throws std::invalid_argument for T(0).
PidDimensions injective_dimensions(const PidGradedModule& m);

/// The two sharp cases for phi: Z -> 0 (n = 1): k[t] attains the left bound, k[t, t^-1] the right one,
/// and their sum satisfies both bounds.
CheckList verify_sharpness();

} // namespace grm
