#pragma once

// Calibrated constants. Regenerate with `nevmaj_calibrate`; the values below are its output
// rounded down (lower bounds) or up (upper bounds) in the safe direction.

namespace nevmaj::constants {

/// c with c <= h_Q on Q and h_Q(z) <= l(Q) / (c (1 - |z|)); minimum over levels 1..12,
/// 200 samples per square.
inline constexpr double kHq = 0.41;  // measured 0.416742 (inner corners, level 3)

/// Lemma 4 constant C0 used by the transfer checks.
inline constexpr double kLemma4C0 = 2.0;

/// C(1/2): sup of -log|B| / H_Lambda over rho(z, Lambda) >= 1/2, with a safety margin.
inline constexpr double kLemma1C = 1.0;  // measured 0.618 on 20 geometric sets to level 12

/// Harnack factor between any z and the center of a Whitney square meeting D_rho(z, 1/2).
inline constexpr double kNeighborHarnack = 25.0;  // measured 23.897

/// Number of Whitney cells (squares or the central cell) that can meet one D_rho(z, 1/2).
inline constexpr double kNeighborCount = 12.0;  // measured 9

/// Explicit majorant C1 H_Lambda + C3 H1 of the sufficient condition for H in H(B).
inline constexpr double kMajorantC1 = kLemma1C;
inline constexpr double kMajorantC3 = kNeighborCount * kNeighborHarnack * kNeighborHarnack;

/// Largest pseudohyperbolic radius for which the pseudo-disk area constant is quoted.
inline constexpr double kAreaTMax = 0.5;

}  // namespace nevmaj::constants
