#pragma once

namespace holoq::tol {

// Every check below is applied relative to the operand scale: a defect d
// passes when d <= tol * max(1, |operand|_F).

// Structural preconditions.
inline constexpr double kHermitian = 1e-12;       // H = H† before eigensolve
inline constexpr double kAntiHermitian = 1e-12;   // X = -X† before exponentials
inline constexpr double kUnitary = 1e-10;         // U†U = I before log/analysis
inline constexpr double kFrame = 1e-10;           // V†V = I for Stiefel frames
inline constexpr double kProjector = 1e-10;       // P² = P, P = P†, tr P = k

// Loop closure and construction guarantees.
inline constexpr double kClosedLoop = 1e-9;         // penalty gate for holonomy
inline constexpr double kConstructionPenalty = 1e-18;  // analytic members close this well
inline constexpr double kHolonomyMatch = 1e-9;      // built loop reproduces the gate

// Spectral bookkeeping.
inline constexpr double kPhaseCluster = 1e-8;     // eigenphase degeneracy grouping
inline constexpr double kMinusOneSnap = 1e-10;    // eigenvalue -1 maps to phase +pi
inline constexpr double kDirectionResidual = 1e-10;  // direction must lie in its eigenspace

// Diagnostics.
inline constexpr double kWindingZero = 1e-9;      // refined penalty value counting as a revisit
inline constexpr double kClassifyNorm = 1e-6;     // search result matches an analytic radius
inline constexpr double kClassifyDirection = 1e-6;  // search result matches an eigenspace

}  // namespace holoq::tol
