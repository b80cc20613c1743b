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

#include "coarselip/ml_iso.hpp"

#include <cmath>

#include "coarselip/parallel.hpp"
#include "coarselip/sampling.hpp"

namespace coarselip {

namespace {

void require_oracle(const MlOracle& o) {
  if (!o.space_x || !o.space_y || !o.to_x || !o.to_y)
    throw std::invalid_argument("ml oracle is incomplete (missing space or callable)");
}

LipFn apply_to_x(const MlOracle& o, const LipFn& f) {
  LipFn out = o.to_x(f);
  if (!same_space(out.space(), *o.space_x))
    throw std::invalid_argument("ml oracle: to_x returned a function on the wrong space");
  return out;
}

LipFn apply_to_y(const MlOracle& o, const LipFn& f) {
  LipFn out = o.to_y(f);
  if (!same_space(out.space(), *o.space_y))
    throw std::invalid_argument("ml oracle: to_y returned a function on the wrong space");
  return out;
}

// Worst pointwise overshoot of a over b (zero when a <= b pointwise).
ExtReal pointwise_excess(const LipFn& a, const LipFn& b) {
  ExtReal worst(0.0);
  for (std::size_t i = 0; i < a.size(); ++i) worst = max(worst, excess(a[i], b[i]));
  return worst;
}

void note(DefectEntry& entry, ExtReal v, const std::string& witness) {
  if (entry.witness.empty() || v > entry.measured) {
    entry.measured = v;
    entry.witness = witness;
  }
}

std::vector<ExtReal> pullback(const std::vector<std::size_t>& map, const LipFn& f) {
  std::vector<ExtReal> raw;
  raw.reserve(map.size());
  for (std::size_t i : map) raw.push_back(f[i]);
  return raw;
}

}  // namespace

MlOracle identity_oracle(SpacePtr space) {
  if (!space) throw std::invalid_argument("identity_oracle: null space");
  auto id = [space](const LipFn& f) {
    if (!same_space(f.space(), *space))
      throw std::invalid_argument("identity_oracle: function on the wrong space");
    return f;
  };
  return MlOracle{space, space, id, id, ExtReal(0.0)};
}

MlOracle lift(const MapPair& pair, SpacePtr X, SpacePtr Y) {
  return lift_shifted(pair, std::move(X), std::move(Y), 0.0);
}

MlOracle lift_shifted(const MapPair& pair, SpacePtr X, SpacePtr Y, double shift) {
  if (!X || !Y) throw std::invalid_argument("lift: null space");
  if (!(shift >= 0.0) || std::isinf(shift) || std::isnan(shift))
    throw std::invalid_argument("lift: shift must be a finite value >= 0");
  IsometryDefect dft = defect(pair, *X, *Y);  // also validates the maps
  MlOracle o;
  o.space_x = X;
  o.space_y = Y;
  o.epsilon = dft.overall().scaled(4.0) + ExtReal(2.0 * shift);
  const ExtReal s(shift);
  o.to_x = [X, Y, fwd = pair.forward, s](const LipFn& f) {
    if (!same_space(f.space(), *Y))
      throw std::invalid_argument("lift: to_x expects a function on the second space");
    std::vector<ExtReal> raw = pullback(fwd, f);
    for (ExtReal& v : raw) v = v + s;
    return envelope(X, raw);
  };
  o.to_y = [X, Y, bwd = pair.backward, s](const LipFn& f) {
    if (!same_space(f.space(), *X))
      throw std::invalid_argument("lift: to_y expects a function on the first space");
    std::vector<ExtReal> raw = pullback(bwd, f);
    for (ExtReal& v : raw) v = v + s;
    return envelope(Y, raw);
  };
  return o;
}

MlOracle promote_surjective_homomorphism(SpacePtr X, SpacePtr Y,
                                         std::function<LipFn(const LipFn&)> kappa, double eps,
                                         double delta,
                                         std::function<LipFn(const LipFn&)> preimage) {
  if (!X || !Y) throw std::invalid_argument("promote: null space");
  if (!kappa || !preimage) throw std::invalid_argument("promote: null callable");
  if (!(eps >= 0.0) || !(delta >= 0.0) || std::isnan(eps) || std::isnan(delta))
    throw std::invalid_argument("promote: eps and delta must be >= 0");
  MlOracle o;
  o.space_x = std::move(X);
  o.space_y = std::move(Y);
  o.to_x = std::move(kappa);
  o.to_y = std::move(preimage);
  o.epsilon = ExtReal(2.0 * eps + 3.0 * delta);
  return o;
}

ExtReal MlDefectReport::worst() const {
  ExtReal w = iso_embed.measured;
  w = max(w, join_defect.measured);
  w = max(w, meet_defect.measured);
  w = max(w, roundtrip_x.measured);
  w = max(w, roundtrip_y.measured);
  w = max(w, zero_defect.measured);
  w = max(w, inf_defect.measured);
  w = max(w, monotone.measured);
  return w;
}

bool MlDefectReport::ok(double tol) const { return worst() <= epsilon + ExtReal(tol); }

MlDefectReport check_ml_defect(const MlOracle& oracle, const MlCheckConfig& cfg) {
  require_oracle(oracle);
  const SpacePtr& X = oracle.space_x;
  const SpacePtr& Y = oracle.space_y;

  std::mt19937_64 rng(cfg.seed);
  SamplePool pool_y = sample_lip_functions(Y, cfg.samples, rng);
  SamplePool pool_x = sample_lip_functions(X, cfg.samples, rng);

  // All random draws happen up front (and in a fixed order below), so the
  // report is a pure function of the seed; the parallel regions only fill
  // independent slots.
  std::vector<LipFn> img_x(pool_y.fns.size(), const_fn(X, ExtReal(0.0)));
  std::vector<LipFn> img_y(pool_x.fns.size(), const_fn(Y, ExtReal(0.0)));
  parallel_for(pool_y.fns.size(), [&](std::size_t i) { img_x[i] = apply_to_x(oracle, pool_y.fns[i]); });
  parallel_for(pool_x.fns.size(), [&](std::size_t i) { img_y[i] = apply_to_y(oracle, pool_x.fns[i]); });

  MlDefectReport rep;
  rep.epsilon = oracle.epsilon;

  for (std::size_t i = 0; i < pool_y.fns.size(); ++i) {
    for (std::size_t j = i + 1; j < pool_y.fns.size(); ++j) {
      ExtReal before = sup_dist(pool_y.fns[i], pool_y.fns[j]);
      ExtReal after = sup_dist(img_x[i], img_x[j]);
      note(rep.iso_embed, ext_dist(after, before),
           "to_x: d(" + pool_y.labels[i] + ", " + pool_y.labels[j] + ") = " + to_string(before) +
               " maps to " + to_string(after));
    }
  }
  for (std::size_t i = 0; i < pool_x.fns.size(); ++i) {
    for (std::size_t j = i + 1; j < pool_x.fns.size(); ++j) {
      ExtReal before = sup_dist(pool_x.fns[i], pool_x.fns[j]);
      ExtReal after = sup_dist(img_y[i], img_y[j]);
      note(rep.iso_embed, ext_dist(after, before),
           "to_y: d(" + pool_x.labels[i] + ", " + pool_x.labels[j] + ") = " + to_string(before) +
               " maps to " + to_string(after));
    }
  }

  {  // Empty families: the image of the bottom must be the bottom, dito top.
    ExtReal zx = sup_dist(apply_to_x(oracle, const_fn(Y, ExtReal(0.0))), const_fn(X, ExtReal(0.0)));
    ExtReal zy = sup_dist(apply_to_y(oracle, const_fn(X, ExtReal(0.0))), const_fn(Y, ExtReal(0.0)));
    note(rep.zero_defect, zx, "to_x(zero)");
    note(rep.zero_defect, zy, "to_y(zero)");
    note(rep.join_defect, zx, "to_x: empty join");
    note(rep.join_defect, zy, "to_y: empty join");
    ExtReal tx = sup_dist(apply_to_x(oracle, const_fn(Y, ExtReal::infinity())),
                          const_fn(X, ExtReal::infinity()));
    ExtReal ty = sup_dist(apply_to_y(oracle, const_fn(X, ExtReal::infinity())),
                          const_fn(Y, ExtReal::infinity()));
    note(rep.inf_defect, tx, "to_x(top)");
    note(rep.inf_defect, ty, "to_y(top)");
    note(rep.meet_defect, tx, "to_x: empty meet");
    note(rep.meet_defect, ty, "to_y: empty meet");
  }

  const std::size_t kFamilyTrials = 8;
  const std::size_t sizes[] = {1, 2, 5};
  for (int dir = 0; dir < 2; ++dir) {
    const SamplePool& pool = dir == 0 ? pool_y : pool_x;
    const std::vector<LipFn>& imgs = dir == 0 ? img_x : img_y;
    const SpacePtr& src = dir == 0 ? Y : X;
    const SpacePtr& dst = dir == 0 ? X : Y;
    auto apply = [&](const LipFn& f) {
      return dir == 0 ? apply_to_x(oracle, f) : apply_to_y(oracle, f);
    };
    const char* tag = dir == 0 ? "to_x" : "to_y";
    if (pool.fns.empty()) continue;

    for (std::size_t s : sizes) {
      for (std::size_t t = 0; t < kFamilyTrials; ++t) {
        std::vector<std::size_t> idx;
        std::string members;
        for (std::size_t k = 0; k < s; ++k) {
          idx.push_back(static_cast<std::size_t>(pick(rng, pool.fns.size())));
          members += (k ? ", " : "") + pool.labels[idx.back()];
        }
        std::vector<LipFn> fam;
        std::vector<LipFn> fam_imgs;
        for (std::size_t k : idx) {
          fam.push_back(pool.fns[k]);
          fam_imgs.push_back(imgs[k]);
        }
        ExtReal jd = sup_dist(apply(join(src, fam)), join(dst, fam_imgs));
        note(rep.join_defect,
             jd, std::string(tag) + ": join of {" + members + "}");
        ExtReal md = sup_dist(apply(meet(src, fam)), meet(dst, fam_imgs));
        note(rep.meet_defect,
             md, std::string(tag) + ": meet of {" + members + "}");
      }
    }

    // Full tent decompositions: families of size |space| whose join is the
    // sampled function on the nose.
    for (std::size_t t = 0; t < 4; ++t) {
      std::size_t k = static_cast<std::size_t>(pick(rng, pool.fns.size()));
      const LipFn& f = pool.fns[k];
      std::vector<LipFn> tent_imgs(f.size(), const_fn(dst, ExtReal(0.0)));
      parallel_for(f.size(), [&](std::size_t x) {
        tent_imgs[x] = apply(lambda_realize(src, x, f[x]));
      });
      ExtReal jd = sup_dist(imgs[k], join(dst, tent_imgs));
      note(rep.join_defect,
           jd, std::string(tag) + ": tent decomposition of " + pool.labels[k]);
    }

    // Order preservation on comparable pairs f <= f v g.
    for (std::size_t t = 0; t < 16; ++t) {
      std::size_t i = static_cast<std::size_t>(pick(rng, pool.fns.size()));
      std::size_t j = static_cast<std::size_t>(pick(rng, pool.fns.size()));
      std::vector<LipFn> fam{pool.fns[i], pool.fns[j]};
      LipFn upper = join(src, fam);
      ExtReal over = pointwise_excess(imgs[i], apply(upper));
      note(rep.monotone, over,
           std::string(tag) + ": " + pool.labels[i] + " <= " + pool.labels[i] + " v " +
               pool.labels[j]);
    }
  }

  {
    std::vector<ExtReal> back_x(pool_x.fns.size(), ExtReal(0.0));
    std::vector<ExtReal> back_y(pool_y.fns.size(), ExtReal(0.0));
    parallel_for(pool_x.fns.size(), [&](std::size_t i) {
      back_x[i] = sup_dist(apply_to_x(oracle, img_y[i]), pool_x.fns[i]);
    });
    parallel_for(pool_y.fns.size(), [&](std::size_t i) {
      back_y[i] = sup_dist(apply_to_y(oracle, img_x[i]), pool_y.fns[i]);
    });
    for (std::size_t i = 0; i < back_x.size(); ++i)
      note(rep.roundtrip_x, back_x[i], "to_x(to_y(" + pool_x.labels[i] + "))");
    for (std::size_t i = 0; i < back_y.size(); ++i)
      note(rep.roundtrip_y, back_y[i], "to_y(to_x(" + pool_y.labels[i] + "))");
  }

  return rep;
}

LambdaImage lambda_image(const MlOracle& oracle, std::size_t x, ExtReal r) {
  require_oracle(oracle);
  if (r.is_inf())
    throw std::invalid_argument("lambda_image: probe radius must be finite");
  LipFn img = apply_to_y(oracle, lambda_realize(oracle.space_x, x, r));
  NearestLambda nl = nearest_lambda(img);
  return LambdaImage{nl.center, nl.radius, nl.distance};
}

namespace {

// One direction of the reconstruction: probe every point of src with a
// tent, push it through step, and read off the nearest tent's center.
std::vector<std::size_t> reconstruct_direction(
    const SpacePtr& src, const std::function<LipFn(const LipFn&)>& step,
    ExtReal probe, ExtReal residual_bound, double tol) {
  std::vector<std::size_t> out(src->size(), 0);
  std::vector<std::string> failure(src->size());
  parallel_for(src->size(), [&](std::size_t i) {
    LipFn img = step(lambda_realize(src, i, probe));
    NearestLambda nl = nearest_lambda(img);
    if (nl.radius.is_inf() || !(nl.distance <= residual_bound + ExtReal(tol))) {
      failure[i] = "probe tent at " + src->label(i) + " (radius " + to_string(probe) +
                   ") has no finite tent within " + to_string(residual_bound) +
                   " of its image; nearest is (center " + std::to_string(nl.center) +
                   ", radius " + to_string(nl.radius) + ") at distance " +
                   to_string(nl.distance);
      return;
    }
    out[i] = nl.center;
  });
  for (const std::string& f : failure)
    if (!f.empty())
      throw ReconstructionError(
          "reconstruct: " + f + "; the oracle is not within its declared quality");
  return out;
}

}  // namespace

MapPair reconstruct(const MlOracle& oracle, double tol) {
  require_oracle(oracle);
  if (oracle.epsilon.is_inf())
    throw ReconstructionError("reconstruct: declared quality is infinite, probes carry no information");
  const double eps = oracle.epsilon.finite();
  // In the exact case any positive probe radius works; 1 is the convention.
  const ExtReal probe = eps > 0.0 ? ExtReal(22.0 * eps) : ExtReal(1.0);
  const ExtReal residual_bound = ExtReal(6.0 * eps);
  MapPair pair;
  pair.forward = reconstruct_direction(
      oracle.space_x, [&](const LipFn& f) { return apply_to_y(oracle, f); }, probe,
      residual_bound, tol);
  pair.backward = reconstruct_direction(
      oracle.space_y, [&](const LipFn& f) { return apply_to_x(oracle, f); }, probe,
      residual_bound, tol);
  return pair;
}

Theorem2Report verify_theorem2(const MlOracle& oracle, const MlCheckConfig& cfg) {
  require_oracle(oracle);
  Theorem2Report rep;
  rep.epsilon = oracle.epsilon;
  rep.pair = reconstruct(oracle, cfg.tol);

  const SpacePtr& X = oracle.space_x;
  const SpacePtr& Y = oracle.space_y;
  const ExtReal eps = oracle.epsilon;
  auto bound = [&](double c) { return eps.scaled(c); };
  auto check = [&](BoundCheck& bc, ExtReal measured, ExtReal b, std::string witness) {
    if (bc.witness.empty() || measured > bc.measured) {
      bc.measured = measured;
      bc.witness = std::move(witness);
    }
    bc.bound = b;
    bc.ok = bc.measured <= b + ExtReal(cfg.tol);
  };

  IsometryDefect pd = defect(rep.pair, *X, *Y);
  check(rep.pair_defect, pd.overall(), bound(88.0), "overall defect of the reconstructed pair");

  {
    MlOracle lifted = lift(rep.pair, X, Y);
    std::mt19937_64 rng(cfg.seed);
    SamplePool pool_y = sample_lip_functions(Y, cfg.samples, rng);
    SamplePool pool_x = sample_lip_functions(X, cfg.samples, rng);
    std::vector<ExtReal> dx(pool_y.fns.size(), ExtReal(0.0));
    std::vector<ExtReal> dy(pool_x.fns.size(), ExtReal(0.0));
    parallel_for(pool_y.fns.size(), [&](std::size_t i) {
      dx[i] = sup_dist(apply_to_x(oracle, pool_y.fns[i]), lifted.to_x(pool_y.fns[i]));
    });
    parallel_for(pool_x.fns.size(), [&](std::size_t i) {
      dy[i] = sup_dist(apply_to_y(oracle, pool_x.fns[i]), lifted.to_y(pool_x.fns[i]));
    });
    for (std::size_t i = 0; i < dx.size(); ++i)
      check(rep.near_lift, dx[i], bound(62.0), "to_x vs lift on " + pool_y.labels[i]);
    for (std::size_t i = 0; i < dy.size(); ++i)
      check(rep.near_lift, dy[i], bound(62.0), "to_y vs lift on " + pool_x.labels[i]);
    rep.near_lift_alt_bound = bound(61.0);
    rep.near_lift_alt_ok = rep.near_lift.measured <= rep.near_lift_alt_bound + ExtReal(cfg.tol);
  }

  {
    // Tent probes through to_y against the tent at the reconstructed image,
    // with radii straddling the 38 eps threshold of the sharper bound.
    std::vector<ExtReal> radii;
    const double e = eps.is_finite() ? eps.finite() : 0.0;
    const ExtReal D = X->max_finite_dist();
    if (e > 0.0) {
      radii = {ExtReal(0.0),          ExtReal(e),           ExtReal(22.0 * e),
               ExtReal(37.0 * e),     ExtReal(38.0 * e),    ExtReal(39.0 * e),
               ExtReal(38.0 * e) + D, ExtReal::infinity()};
    } else {
      radii = {ExtReal(0.0), ExtReal(1.0), D + ExtReal(1.0), ExtReal::infinity()};
    }
    const ExtReal large_from = ExtReal(38.0 * e);
    for (std::size_t x = 0; x < X->size(); ++x) {
      for (const ExtReal& r : radii) {
        LipFn img = apply_to_y(oracle, lambda_realize(X, x, r));
        LipFn target = lambda_realize(Y, rep.pair.forward[x], r);
        ExtReal v = sup_dist(img, target);
        std::string w = "tent at " + X->label(x) + " with radius " + to_string(r);
        check(rep.lambda_all, v, bound(59.0), w);
        if (r.is_finite() && r >= large_from) check(rep.lambda_large, v, bound(43.0), w);
      }
    }
  }

  return rep;
}

ExtReal lambda_exchange_defect(const MapPair& pair, SpacePtr X, SpacePtr Y, const LipFn& f) {
  if (!X || !Y) throw std::invalid_argument("lambda_exchange_defect: null space");
  if (!same_space(f.space(), *Y))
    throw std::invalid_argument("lambda_exchange_defect: function must live on the second space");
  defect(pair, *X, *Y);  // validates map shapes
  LipFn via_pullback = envelope(X, pullback(pair.forward, f));
  std::vector<ExtReal> pushed(X->size(), ExtReal(0.0));
  for (std::size_t y = 0; y < Y->size(); ++y)
    for (std::size_t x = 0; x < X->size(); ++x)
      pushed[x] = max(pushed[x], excess(f[y], X->dist(pair.backward[y], x)));
  return sup_dist(via_pullback, LipFn(X, std::move(pushed)));
}

}  // namespace coarselip
