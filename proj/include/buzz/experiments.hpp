#pragma once

#include "buzz/pipeline.hpp"

namespace buzz {

/// The three bundled example studies, as ready-to-run pipeline configs.
/// The JSON files under configs/ are serializations of exactly these.

/// Five concentric circles whose radius ramps 0.1 -> 1.0 -> 0.1, twenty
/// points each, per-snapshot Rips radii. The loop of the large circle is
/// carried through the middle three snapshots of the zigzag.
PipelineConfig circles_config();

/// Nine noisy sines with amplitudes ramping 0.05 -> 1.25 -> 0.05, delay
/// embedded at dimension 2, delay 4 (a quarter period), fixed radius 0.72.
PipelineConfig sines_config();

/// Sel'kov model sweep b = 0.35..0.80 in steps of 0.05, x coordinate delay
/// embedded at dimension 2, delay 3, greedy subsample to 20 points, fixed
/// radius 0.25. The limit-cycle window interior to the sweep shows up as the
/// dominant 1-dimensional feature.
PipelineConfig selkov_config();

}  // namespace buzz
