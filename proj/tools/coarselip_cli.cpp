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

// Command line front end. Exit codes: 0 success, 1 domain error (bad data,
// failed precondition), 2 usage error (unknown flags, malformed literals).
// Commands that produce an artifact (a space, function, pair, or oracle)
// print it as JSON in both formats; --format only changes reports.

#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "coarselip/json_io.hpp"

namespace {

using namespace coarselip;

// Raised after a failure report has already been printed.
struct ReportedFailure {};

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  std::size_t budget = 5;
  double tol = kDefaultTol;
  std::string format = "text";
  bool json() const { return format == "json"; }
  MlCheckConfig ml() const { return MlCheckConfig{seed, samples, tol}; }
};

ExtReal parse_ext(const std::string& s) {
  if (s == "inf") return ExtReal::infinity();
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw std::invalid_argument("\"" + s + "\" is not a number or \"inf\"");
  return ExtReal(v);  // rejects negatives and NaN
}

std::string check_ext(const std::string& s) {
  try {
    parse_ext(s);
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

std::size_t point_index(const MetricSpace& space, const std::string& label) {
  if (auto i = space.index_of(label)) return *i;
  throw std::invalid_argument("point \"" + label + "\" is not in the space");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Artifact sink: write to the file when given, otherwise to stdout.
void deliver(const Options& opt, const Json& artifact, const std::string& out_path,
             const std::string& summary) {
  if (out_path.empty()) {
    emit(artifact);
    return;
  }
  save_json(artifact, out_path);
  if (opt.json())
    emit(Json{{"written", out_path}});
  else
    std::cout << "wrote " << out_path << (summary.empty() ? "" : " (" + summary + ")") << "\n";
}

void print_triple(const std::string& name, const Json& t) {
  std::cout << name << ": measured " << t["measured"].dump() << ", bound " << t["bound"].dump()
            << ", " << (t["ok"].get<bool>() ? "ok" : "EXCEEDED");
  if (t.contains("witness")) std::cout << "  [" << t["witness"].get<std::string>() << "]";
  std::cout << "\n";
}

void print_ml_report(const Json& j) {
  std::cout << "declared epsilon: " << j["epsilon"].dump() << "\n";
  for (const char* key : {"iso_embed", "join", "meet", "roundtrip_x", "roundtrip_y", "zero",
                          "infinity", "monotone"})
    print_triple(key, j[key]);
  std::cout << "worst: " << j["worst"].dump() << " -> "
            << (j["ok"].get<bool>() ? "within declared epsilon" : "NOT within declared epsilon")
            << "\n";
}

void print_theorem2(const Json& j) {
  std::cout << "declared epsilon: " << j["epsilon"].dump() << "\n";
  std::cout << "forward:";
  for (const auto& l : j["pair"]["forward_labels"]) std::cout << " " << l.get<std::string>();
  std::cout << "\nbackward:";
  for (const auto& l : j["pair"]["backward_labels"]) std::cout << " " << l.get<std::string>();
  std::cout << "\n";
  print_triple("pair_defect (88 eps)", j["pair_defect"]);
  print_triple("near_lift (62 eps)", j["near_lift"]);
  print_triple("near_lift (61 eps)", j["near_lift_sharper"]);
  print_triple("lambda_all_radii (59 eps)", j["lambda_all_radii"]);
  print_triple("lambda_large_radii (43 eps)", j["lambda_large_radii"]);
  std::cout << (j["ok"].get<bool>() ? "all bounds hold" : "BOUND VIOLATION") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lipschitz function lattices over finite extended metric spaces: validation, tent "
      "calculus, rough isometries, lattice oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", opt.samples, "Sample pool size for oracle checks")
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "Exhaustive search budget (points per space)")
      ->capture_default_str();
  app.add_option("--tol", opt.tol, "Comparison tolerance")->capture_default_str();
  app.add_option("--format", opt.format, "Output format for reports")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  const auto ext_check = CLI::Validator(check_ext, "EXTREAL", "number or \"inf\"");

  {
    auto* cmd = app.add_subcommand("validate", "Check a space file against the metric axioms");
    auto path = std::make_shared<std::string>();
    cmd->add_option("space", *path, "space JSON file")->required();
    cmd->callback([&opt, path] {
      SpaceParse p = try_parse_space(load_json(*path), opt.tol);
      if (!p.space) {
        if (opt.json()) {
          emit(Json{{"valid", false}, {"errors", p.errors}});
        } else {
          std::cout << "invalid:\n";
          for (const std::string& e : p.errors) std::cout << "  " << e << "\n";
        }
        throw ReportedFailure{};
      }
      std::size_t blocks = components(*p.space).blocks.size();
      if (opt.json())
        emit(Json{{"valid", true}, {"components", blocks}});
      else
        std::cout << "valid, " << blocks << " component" << (blocks == 1 ? "" : "s") << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("components", "List the finite-distance components");
    auto path = std::make_shared<std::string>();
    cmd->add_option("space", *path, "space JSON file")->required();
    cmd->callback([&opt, path] {
      SpacePtr space = load_space(*path, opt.tol);
      ComponentPartition part = components(*space);
      if (opt.json()) {
        Json blocks = Json::array();
        for (const auto& b : part.blocks) {
          Json labels = Json::array();
          for (std::size_t i : b) labels.push_back(space->label(i));
          blocks.push_back(std::move(labels));
        }
        emit(Json{{"blocks", std::move(blocks)}});
      } else {
        for (std::size_t k = 0; k < part.blocks.size(); ++k) {
          std::cout << "component " << k << ":";
          for (std::size_t i : part.blocks[k]) std::cout << " " << space->label(i);
          std::cout << "\n";
        }
      }
    });
  }

  {
    auto* cmd = app.add_subcommand("cutoff", "Cut all distances off at a radius");
    auto path = std::make_shared<std::string>();
    auto radius = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("space", *path, "space JSON file")->required();
    cmd->add_option("radius", *radius, "cutoff radius (> 0, \"inf\" allowed)")
        ->required()
        ->check(ext_check);
    cmd->add_option("-o,--out", *out, "write the space here instead of stdout");
    cmd->callback([&opt, path, radius, out] {
      MetricSpace cut = cutoff(*load_space(*path, opt.tol), parse_ext(*radius));
      deliver(opt, space_to_json(cut), *out, "cutoff at " + *radius);
    });
  }

  {
    auto* cmd = app.add_subcommand("scale", "Multiply all distances by a factor");
    auto path = std::make_shared<std::string>();
    auto factor = std::make_shared<double>(1.0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("space", *path, "space JSON file")->required();
    cmd->add_option("factor", *factor, "scale factor (finite, > 0)")->required();
    cmd->add_option("-o,--out", *out, "write the space here instead of stdout");
    cmd->callback([&opt, path, factor, out] {
      MetricSpace scaled = scale(*load_space(*path, opt.tol), *factor);
      deliver(opt, space_to_json(scaled), *out, "scaled");
    });
  }

  {
    auto* cmd = app.add_subcommand(
        "lambda-dist", "Distance between two tent functions by the closed form");
    auto path = std::make_shared<std::string>();
    auto pa = std::make_shared<std::string>();
    auto ra = std::make_shared<std::string>();
    auto pb = std::make_shared<std::string>();
    auto rb = std::make_shared<std::string>();
    cmd->add_option("space", *path, "space JSON file")->required();
    cmd->add_option("a", *pa, "first center label")->required();
    cmd->add_option("r", *ra, "first radius")->required()->check(ext_check);
    cmd->add_option("b", *pb, "second center label")->required();
    cmd->add_option("s", *rb, "second radius")->required()->check(ext_check);
    cmd->callback([&opt, path, pa, ra, pb, rb] {
      SpacePtr space = load_space(*path, opt.tol);
      ExtReal d = lambda_dist_closed(*space, point_index(*space, *pa), parse_ext(*ra),
                                     point_index(*space, *pb), parse_ext(*rb));
      if (opt.json())
        emit(Json{{"distance", ext_to_json(d)}});
      else
        std::cout << to_string(d) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand(
        "lipschitzise", "Least 1-Lipschitz majorant of declared (1, eps)-Lipschitz data");
    auto path = std::make_shared<std::string>();
    auto eps = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("function", *path, "function JSON file (values need not be Lipschitz)")
        ->required();
    cmd->add_option("eps", *eps, "declared Lipschitz slack of the data")->required();
    cmd->add_option("-o,--out", *out, "write the function here instead of stdout");
    cmd->callback([&opt, path, eps, out] {
      Json j = load_json(*path);
      if (!j.is_object() || !j.contains("space") || !j.contains("values"))
        throw std::invalid_argument(*path +
                                    ": a function is an object with \"space\" and \"values\"");
      SpacePtr space = [&] {
        const Json& sj = j["space"];
        if (sj.is_string()) {
          std::filesystem::path p = sj.get<std::string>();
          if (p.is_relative()) p = std::filesystem::path(*path).parent_path() / p;
          return load_space(p, opt.tol);
        }
        return space_from_json(sj, opt.tol);
      }();
      std::vector<ExtReal> raw;
      for (const Json& e : j["values"]) raw.push_back(ext_from_json(e));
      if (raw.size() != space->size())
        throw std::invalid_argument("\"values\" must list one value per point");
      LipFn f = lipschitzise(space, raw, *eps, opt.tol);
      ExtReal moved(0.0);
      for (std::size_t i = 0; i < raw.size(); ++i) moved = max(moved, ext_dist(f[i], raw[i]));
      Json artifact = function_to_json(f);
      artifact["distance_to_input"] = ext_to_json(moved);
      deliver(opt, artifact, *out, "moved by " + to_string(moved));
    });
  }

  {
    auto* cmd = app.add_subcommand("lambda-decompose",
                                   "Write a function as a join of tents, one per point");
    auto path = std::make_shared<std::string>();
    cmd->add_option("function", *path, "function JSON file")->required();
    cmd->callback([&opt, path] {
      LipFn f = load_function(*path, opt.tol);
      std::vector<LambdaFn> tents = lambda_decompose(f);
      if (opt.json()) {
        Json arr = Json::array();
        for (const LambdaFn& t : tents)
          arr.push_back(Json{{"center", f.space().label(t.center)},
                             {"radius", ext_to_json(t.radius)}});
        emit(Json{{"tents", std::move(arr)}});
      } else {
        for (const LambdaFn& t : tents)
          std::cout << f.space().label(t.center) << " " << to_string(t.radius) << "\n";
      }
    });
  }

  {
    auto* cmd = app.add_subcommand("nearest-lambda",
                                   "Exactly nearest single tent to a function");
    auto path = std::make_shared<std::string>();
    cmd->add_option("function", *path, "function JSON file")->required();
    cmd->callback([&opt, path] {
      LipFn f = load_function(*path, opt.tol);
      NearestLambda nl = nearest_lambda(f);
      if (opt.json())
        emit(Json{{"center", f.space().label(nl.center)},
                  {"radius", ext_to_json(nl.radius)},
                  {"distance", ext_to_json(nl.distance)}});
      else
        std::cout << "center " << f.space().label(nl.center) << ", radius "
                  << to_string(nl.radius) << ", distance " << to_string(nl.distance) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("rough-dist",
                                   "Exact rough distance between two spaces (exhaustive)");
    auto pa = std::make_shared<std::string>();
    auto pb = std::make_shared<std::string>();
    cmd->add_option("A", *pa, "first space JSON file")->required();
    cmd->add_option("B", *pb, "second space JSON file")->required();
    cmd->callback([&opt, pa, pb] {
      SpacePtr A = load_space(*pa, opt.tol);
      SpacePtr B = load_space(*pb, opt.tol);
      RoughDistance rd = rough_distance_exact(*A, *B, opt.budget);
      if (opt.json()) {
        Json j = pair_to_json(rd.witness);
        j["epsilon"] = ext_to_json(rd.epsilon);
        j["defect"] = defect_to_json(defect(rd.witness, *A, *B));
        emit(j);
      } else {
        std::cout << "epsilon " << to_string(rd.epsilon) << "\n";
        std::cout << "forward:";
        for (std::size_t i : rd.witness.forward) std::cout << " " << B->label(i);
        std::cout << "\nbackward:";
        for (std::size_t i : rd.witness.backward) std::cout << " " << A->label(i);
        std::cout << "\n";
      }
    });
  }

  {
    auto* cmd = app.add_subcommand("lift",
                                   "Lift a map pair to an oracle on the function lattices");
    auto pp = std::make_shared<std::string>();
    auto px = std::make_shared<std::string>();
    auto py = std::make_shared<std::string>();
    auto shift = std::make_shared<double>(0.0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("pair", *pp, "map pair JSON file")->required();
    cmd->add_option("X", *px, "first space JSON file")->required();
    cmd->add_option("Y", *py, "second space JSON file")->required();
    cmd->add_option("--shift", *shift, "perturb the lift by this upward shift")
        ->capture_default_str();
    cmd->add_option("-o,--out", *out, "write the oracle here instead of stdout");
    cmd->callback([&opt, pp, px, py, shift, out] {
      OracleDescriptor desc;
      desc.kind = *shift > 0.0 ? "perturbed-lifted" : "lifted";
      desc.space_x = load_space(*px, opt.tol);
      desc.space_y = load_space(*py, opt.tol);
      desc.pair = pair_from_json(load_json(*pp));
      desc.shift = *shift;
      ExtReal eps = descriptor_epsilon(desc);  // validates the pair against the spaces
      deliver(opt, oracle_to_json(desc), *out, "epsilon " + to_string(eps));
    });
  }

  {
    auto* cmd = app.add_subcommand("ml-check",
                                   "Measure an oracle's lattice defects against its epsilon");
    auto path = std::make_shared<std::string>();
    cmd->add_option("oracle", *path, "oracle JSON file")->required();
    cmd->callback([&opt, path] {
      MlOracle oracle = build_oracle(load_oracle(*path, opt.tol));
      MlDefectReport rep = check_ml_defect(oracle, opt.ml());
      Json j = ml_report_to_json(rep, opt.tol);
      if (opt.json())
        emit(j);
      else
        print_ml_report(j);
    });
  }

  {
    auto* cmd = app.add_subcommand("reconstruct",
                                   "Rebuild the underlying map pair from an oracle by probing");
    auto path = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("oracle", *path, "oracle JSON file")->required();
    cmd->add_option("-o,--out", *out, "write the pair here instead of stdout");
    cmd->callback([&opt, path, out] {
      OracleDescriptor desc = load_oracle(*path, opt.tol);
      MapPair pair = reconstruct(build_oracle(desc), opt.tol);
      deliver(opt, pair_to_json(pair), *out, "reconstructed pair");
    });
  }

  {
    auto* cmd = app.add_subcommand(
        "verify-thm2", "Reconstruct from an oracle and verify the reconstruction bounds");
    auto path = std::make_shared<std::string>();
    cmd->add_option("oracle", *path, "oracle JSON file")->required();
    cmd->callback([&opt, path] {
      OracleDescriptor desc = load_oracle(*path, opt.tol);
      Theorem2Report rep = verify_theorem2(build_oracle(desc), opt.ml());
      Json j = theorem2_to_json(rep, *desc.space_x, *desc.space_y);
      if (opt.json())
        emit(j);
      else
        print_theorem2(j);
    });
  }

  {
    auto* cmd = app.add_subcommand(
        "scaling-experiment", "Defect decay of rounding maps between discretization levels");
    auto family = std::make_shared<std::string>("path");
    auto levels = std::make_shared<std::vector<std::size_t>>();
    auto reference = std::make_shared<std::size_t>(0);
    cmd->add_option("--family", *family, "path, grid, or path2")->capture_default_str();
    cmd->add_option("--levels", *levels, "comma separated levels, e.g. 2,4,8")
        ->required()
        ->delimiter(',');
    cmd->add_option("--reference", *reference, "reference level")->required();
    cmd->callback([&opt, family, levels, reference] {
      ScalingExperimentConfig cfg{*family, *levels, *reference};
      ScalingReport rep = run_scaling_experiment(cfg, opt.ml());
      Json j = scaling_report_to_json(rep);
      if (opt.json()) {
        emit(j);
      } else {
        std::cout << "family " << rep.family << ", reference " << rep.reference << "\n";
        for (const Json& l : j["levels"]) {
          std::cout << "level " << l["n"].get<std::size_t>() << ": epsilon "
                    << l["epsilon"].dump() << ", lift worst " << l["lift"]["measured"].dump()
                    << " vs bound " << l["lift"]["bound"].dump() << " -> "
                    << (l["lift"]["ok"].get<bool>() ? "ok" : "EXCEEDED") << "\n";
        }
        std::cout << "epsilon decreases with refinement: "
                  << (rep.monotone_ok ? "yes" : "NO") << "\n";
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ReportedFailure&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
