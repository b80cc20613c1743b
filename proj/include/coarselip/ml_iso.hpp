// Copyright 2026 The coarselip authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "coarselip/lipschitz.hpp"
#include "coarselip/rough_iso.hpp"

namespace coarselip {

/// A black-box approximate lattice isomorphism between the function
/// lattices of two spaces, with its declared quality. to_x maps Lip Y to
/// Lip X and to_y the other way; epsilon bounds the metric distortion, the
/// meet/join preservation error, and the roundtrip displacement of both
/// maps. Callables must be pure: checkers assume repeated calls agree.
struct MlOracle {
  SpacePtr space_x;
  SpacePtr space_y;
  std::function<LipFn(const LipFn&)> to_x;
  std::function<LipFn(const LipFn&)> to_y;
  ExtReal epsilon{0.0};
};

/// The exact lattice isomorphism induced by the identity; handy as a
/// baseline and for promoting plain homomorphisms on one space.
MlOracle identity_oracle(SpacePtr space);

/// Lift of a map pair to the function lattices: to_x(f) is the envelope of
/// f after eta (the least Lipschitz majorant of the pullback), to_y
/// symmetrically with eta'. Declared epsilon is 4x the pair's overall
/// defect; the lift is epsilon0-near the raw pullback in the sup metric.
MlOracle lift(const MapPair& pair, SpacePtr X, SpacePtr Y);

/// Lift with both pullbacks shifted up by a constant before enveloping.
/// Stays `shift`-near the plain lift, so the declared epsilon grows to
/// 4 * defect + 2 * shift. Useful as a controlled imperfect oracle.
MlOracle lift_shifted(const MapPair& pair, SpacePtr X, SpacePtr Y, double shift);

/// Wraps a surjective-up-to-delta homomorphism kappa (Lip Y -> Lip X) and a
/// chooser of delta-preimages into an oracle pair. The safe declared bound
/// is 2 * eps + 3 * delta: the chooser may move between two delta-preimages
/// of the same function, which costs one extra delta over the naive
/// estimate. Measured defects often meet 2 * eps + 2 * delta; checkers
/// report the measurement so callers can see which constant held.
MlOracle promote_surjective_homomorphism(SpacePtr X, SpacePtr Y,
                                         std::function<LipFn(const LipFn&)> kappa, double eps,
                                         double delta,
                                         std::function<LipFn(const LipFn&)> preimage);

struct DefectEntry {
  ExtReal measured{0.0};
  std::string witness;
};

/// Measured deviations of an oracle from an exact lattice isomorphism, each
/// with a witness description. A true epsilon-isomorphism keeps every entry
/// at or below epsilon.
struct MlDefectReport {
  ExtReal epsilon{0.0};       // declared bound the measurements are judged against
  DefectEntry iso_embed;      // sup-metric distortion, both directions
  DefectEntry join_defect;    // d(kappa(join f_i), join kappa(f_i)), incl. empty family
  DefectEntry meet_defect;    // dito for meets; empty family probes the top
  DefectEntry roundtrip_x;    // d(to_x(to_y(f)), f) on Lip X
  DefectEntry roundtrip_y;    // d(to_y(to_x(f)), f) on Lip Y
  DefectEntry zero_defect;    // d(image of bottom, bottom)
  DefectEntry inf_defect;     // d(image of top, top)
  DefectEntry monotone;       // worst pointwise overshoot on ordered pairs
  ExtReal worst() const;
  bool ok(double tol = kDefaultTol) const;
};

struct MlCheckConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  double tol = kDefaultTol;
};

/// Probes the oracle with a seeded sample pool: lattice extremes, tents,
/// random envelopes; families of size 0, 1, 2, 5 and the full tent
/// decomposition; roundtrips and order checks. Deterministic given the
/// seed, and identical regardless of worker threads.
MlDefectReport check_ml_defect(const MlOracle& oracle, const MlCheckConfig& cfg = {});

struct LambdaImage {
  std::size_t center;
  ExtReal radius;
  ExtReal residual;  // sup distance from the image to the named tent
};

/// Pushes the finite tent (x, r) through to_y and locates the nearest tent
/// on Y. For an oracle within its declared epsilon the residual is at most
/// 6 * epsilon.
LambdaImage lambda_image(const MlOracle& oracle, std::size_t x, ExtReal r);

struct ReconstructionError : std::runtime_error {
  explicit ReconstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Rebuilds a map pair from the oracle alone by probing with tents: each
/// point is sent to the center of the tent nearest its probe image. The
/// probe radius is 22 * epsilon, or 1 in the exact case. Fails with
/// ReconstructionError when a probe image has no finite tent within
/// 6 * epsilon (+ tol), which certifies the oracle is not within its
/// declared quality.
MapPair reconstruct(const MlOracle& oracle, double tol = kDefaultTol);

struct BoundCheck {
  ExtReal measured{0.0};
  ExtReal bound{0.0};
  bool ok = true;
  std::string witness;
};

/// Everything the reconstruction guarantees, measured on one oracle.
struct Theorem2Report {
  ExtReal epsilon{0.0};     // declared oracle quality
  MapPair pair;             // reconstructed maps
  BoundCheck pair_defect;   // overall defect of the pair vs 88 * eps
  BoundCheck near_lift;     // oracle vs the lift of the pair, vs 62 * eps
  ExtReal near_lift_alt_bound{0.0};  // 61 * eps, the sharper internal bound
  bool near_lift_alt_ok = true;
  BoundCheck lambda_all;    // tent-probe displacement vs 59 * eps, all radii
  BoundCheck lambda_large;  // finite probe radii >= 38 * eps, vs 43 * eps
  bool ok() const {
    return pair_defect.ok && near_lift.ok && lambda_all.ok && lambda_large.ok;
  }
};

/// Reconstructs a pair from the oracle and measures it against the bounds
/// the reconstruction promises. Sampling for the near-lift comparison uses
/// cfg; tent probes cover every point with radii straddling 38 * eps.
Theorem2Report verify_theorem2(const MlOracle& oracle, const MlCheckConfig& cfg = {});

/// Defect of writing the pullback envelope two ways: join of tents at x
/// with radius f(eta x) versus join of tents at eta' y with radius f(y).
/// Bounded by the pair's overall defect.
ExtReal lambda_exchange_defect(const MapPair& pair, SpacePtr X, SpacePtr Y, const LipFn& f);

}  // namespace coarselip
