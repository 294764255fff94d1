#pragma once
// Published reference roots nu_n (n = 0..4) of the quantization condition,
// printed to six decimals, for alpha = 0, 1, 2.

#include <array>

namespace dirac1d {

inline constexpr std::array<double, 3> kReferenceAlphas{0.0, 1.0, 2.0};

// kReferenceRoots[a][n] is nu_n at alpha = kReferenceAlphas[a].
inline constexpr std::array<std::array<double, 5>, 3> kReferenceRoots{{
    {0.345459, 1.548571, 2.468573, 3.522295, 4.482395},
    {1.396274, 3.056760, 4.306277, 5.615211, 6.804771},
    {3.338595, 5.452161, 7.006087, 8.568946, 9.978608},
}};

// Six printed decimals.
inline constexpr double kReferenceTolerance = 5e-6;

}  // namespace dirac1d
