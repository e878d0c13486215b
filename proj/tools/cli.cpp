#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sl2relax/classify.hpp"
#include "sl2relax/envelope.hpp"
#include "sl2relax/errors.hpp"
#include "sl2relax/lamination.hpp"
#include "sl2relax/mat2.hpp"
#include "sl2relax/models.hpp"
#include "sl2relax/relax.hpp"

namespace sl2relax::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  const char* s = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    throw UsageError("cannot parse " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type pos = 0;
  for (;;) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return parts;
}

// "min:max:count" or "geo:peak:max:count"
Grid parse_grid_spec(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() == 4 && parts[0] == "geo") {
    const double peak = parse_double(parts[1], "grid peak");
    const double outer = parse_double(parts[2], "grid max");
    const double count = parse_double(parts[3], "grid count");
    if (!(count >= 3.0) || count != std::floor(count))
      throw BadGrid("grid count must be an integer >= 3");
    return geometric_grid(peak, outer, static_cast<std::size_t>(count));
  }
  if (parts.size() == 3) {
    const double lo = parse_double(parts[0], "grid min");
    const double hi = parse_double(parts[1], "grid max");
    const double count = parse_double(parts[2], "grid count");
    if (!(count >= 3.0) || count != std::floor(count))
      throw BadGrid("grid count must be an integer >= 3");
    return uniform_grid(lo, hi, static_cast<std::size_t>(count));
  }
  throw UsageError("grid spec must be min:max:count or geo:peak:max:count, got '" +
                   spec + "'");
}

// "a11,a12;a21,a22"
Mat2 parse_matrix(const std::string& text) {
  const std::vector<std::string> rows = split(text, ';');
  if (rows.size() != 2)
    throw UsageError("matrix must be 'a11,a12;a21,a22', got '" + text + "'");
  double e[4];
  for (int r = 0; r < 2; ++r) {
    const std::vector<std::string> cols = split(rows[r], ',');
    if (cols.size() != 2)
      throw UsageError("matrix row must have two entries, got '" + rows[r] + "'");
    for (int c = 0; c < 2; ++c)
      e[2 * r + c] = parse_double(cols[c], "matrix entry");
  }
  return {e[0], e[1], e[2], e[3]};
}

Grid parse_points(const std::string& text) {
  std::vector<double> pts;
  for (const std::string& part : split(text, ','))
    pts.push_back(parse_double(part, "profile point"));
  std::sort(pts.begin(), pts.end());
  return Grid(std::move(pts));  // validates count and strictness
}

struct ModelArgs {
  std::string model;
  std::optional<double> gamma;
  std::optional<std::string> expr;
};

EnergyModel build_model(const ModelArgs& args) {
  if (args.model == "adm") {
    if (!args.gamma) throw UsageError("--model adm requires --gamma");
    if (args.expr) throw UsageError("--expr only applies to --model expr");
    return adm(*args.gamma);
  }
  if (args.model == "hencky") {
    if (args.gamma) throw UsageError("--gamma only applies to --model adm");
    return hencky();
  }
  if (args.model == "expr") {
    if (!args.expr) throw UsageError("--model expr requires --expr");
    if (args.gamma) throw UsageError("--gamma only applies to --model adm");
    return from_expression(*args.expr, "expr");
  }
  throw UsageError("unknown model '" + args.model + "' (adm, hencky, expr)");
}

void emit_table(const std::vector<ProfileRow>& rows, std::ostream& out) {
  out << "t,phi,envelope,on_bridge\n";
  for (const ProfileRow& r : rows)
    out << fmt17(r.t) << ',' << fmt17(r.phi) << ',' << fmt17(r.envelope) << ','
        << (r.on_bridge ? "true" : "false") << '\n';
}

ordered_json classification_json(const ClassificationReport& report,
                                 const std::string& grid_spec) {
  ordered_json j;
  j["rank_one_convex"] = report.rank_one_convex;
  j["polyconvex"] = report.polyconvex;
  j["quasiconvex"] = report.quasiconvex;
  j["convex_on_sl2"] = report.convex_on_sl2;
  j["min_second_difference"] = report.min_second_difference;
  j["min_forward_difference"] = report.min_forward_difference;
  j["witness_t"] = report.witness_t;
  j["grid"] = grid_spec;
  j["tolerance"] = report.tolerance;
  return j;
}

// Seeded random SL(2) matrix whose gap stays inside [0, gap_cap].
Mat2 random_sl2(std::mt19937& rng, double gap_cap) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> gap_dist(0.0, gap_cap);
  const SingularPair p = lambda_from_gap(gap_dist(rng));
  const Mat2 d{p.sigma_max, 0.0, 0.0, p.sigma_min};
  return rotation(angle(rng)) * d * rotation(angle(rng));
}

struct VerifyParams {
  unsigned seed = 42;
  double lam_tol = 5e-2;
  std::size_t iters = 12;
  std::size_t dirs = 8;
  std::size_t s_samples = 33;
  double fp_tol = 1e-4;
};

int do_verify(const EnergyModel& model, const Grid& grid,
              const std::string& grid_spec, const VerifyParams& vp,
              std::ostream& out, std::ostream& err) {
  const RelaxedEnergy rel = build_relaxation(model, grid);
  const SampledFn samples = sample(model.phi_tilde, grid);

  const std::vector<double> chord = chord_envelope_oracle(samples);
  double chord_diff = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    chord_diff = std::max(chord_diff, std::fabs(chord[i] - rel.envelope.values()[i]));

  const SampledFn biconj = biconjugate(samples);
  double biconj_diff = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    biconj_diff =
        std::max(biconj_diff, std::fabs(biconj.values[i] - rel.envelope.values()[i]));

  // Lamination on a thinned nonnegative subset of the same grid (shared
  // points, so convex models diff exactly 0).
  std::vector<double> sub_ts;
  std::vector<std::size_t> sub_idx;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (grid[i] >= 0.0) {
      sub_ts.push_back(grid[i]);
      sub_idx.push_back(i);
    }
  const std::size_t stride = std::max<std::size_t>(1, sub_ts.size() / 200);
  std::vector<double> lam_ts;
  std::vector<std::size_t> lam_idx;
  for (std::size_t k = 0; k < sub_ts.size(); k += stride) {
    lam_ts.push_back(sub_ts[k]);
    lam_idx.push_back(sub_idx[k]);
  }
  if (lam_idx.back() != sub_idx.back()) {
    lam_ts.push_back(sub_ts.back());
    lam_idx.push_back(sub_idx.back());
  }
  LaminationParams lp{vp.dirs, vp.s_samples, 0.0};
  const LaminationTable lam =
      lamination_fixed_point(model, Grid(lam_ts), vp.iters, vp.fp_tol, lp);
  double lam_diff = 0.0;
  for (std::size_t k = 0; k < lam_ts.size(); ++k)
    lam_diff = std::max(lam_diff,
                        std::fabs(lam.values_per_iteration.back()[k] -
                                  rel.envelope.values()[lam_idx[k]]));

  // Matrix-level spot check: envelope evaluation must factor through the
  // gap, and the extension's envelope must restrict to the relaxed energy.
  std::mt19937 rng(vp.seed);
  // modest gaps: rotation products of extreme stretches lose the det = 1
  // certificate to rounding before anything interesting happens
  const double gap_cap = std::min(0.9 * grid.back(), 6.0);
  double invariance_diff = 0.0;
  for (int k = 0; k < 32; ++k) {
    const Mat2 F = random_sl2(rng, gap_cap);
    const double v = relaxed_value(rel, F);
    const Mat2 RFQ = rotation(0.7) * F * rotation(-1.3);
    invariance_diff = std::max(invariance_diff, std::fabs(relaxed_value(rel, RFQ) - v));
    invariance_diff =
        std::max(invariance_diff, std::fabs(extension_envelope_value(rel, F) - v));
  }

  ordered_json j;
  j["model"] = model.name;
  j["grid"] = grid_spec;
  j["max_abs_diff_hull_vs_chord"] = chord_diff;
  j["max_abs_diff_hull_vs_biconjugate"] = biconj_diff;
  j["max_abs_diff_hull_vs_lamination"] = lam_diff;
  j["lamination_iterations"] = lam.values_per_iteration.size() - 1;
  j["converged"] = lam.converged;
  if (rel.closed_form_max_error)
    j["closed_form_max_error"] = *rel.closed_form_max_error;
  else
    j["closed_form_max_error"] = nullptr;
  j["truncation_warning"] = rel.tails.truncation_warning;
  out << j.dump(2) << '\n';

  int failures = 0;
  if (chord_diff > 1e-10) {
    err << "oracle failure: hull vs chord diff " << fmt17(chord_diff) << "\n";
    ++failures;
  }
  if (biconj_diff > 1e-8) {
    err << "oracle failure: hull vs biconjugate diff " << fmt17(biconj_diff) << "\n";
    ++failures;
  }
  if (lam_diff > vp.lam_tol) {
    err << "oracle failure: hull vs lamination diff " << fmt17(lam_diff) << "\n";
    ++failures;
  }
  if (invariance_diff > 1e-9) {
    err << "oracle failure: matrix invariance diff " << fmt17(invariance_diff)
        << "\n";
    ++failures;
  }
  return failures == 0 ? 0 : 3;
}

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"generalized convexity and relaxation of incompressible planar "
               "isotropic energies"};
  app.require_subcommand(1);

  ModelArgs margs;
  std::string grid_spec = "-6:6:8001";
  std::string format = "json";
  std::string output_path;
  std::string matrix_text;
  std::string points_text;
  double classify_tol = 1e-8;
  bool extrapolate = false;
  VerifyParams vp;

  const auto add_model_options = [&](CLI::App* cmd) {
    cmd->add_option("--model", margs.model, "energy model: adm, hencky, expr")
        ->required();
    cmd->add_option("--gamma", [&margs](const std::vector<std::string>& v) {
         margs.gamma = parse_double(v.front(), "--gamma");
         return true;
       },
       "ADM coefficient (required for --model adm)");
    cmd->add_option("--expr", [&margs](const std::vector<std::string>& v) {
         margs.expr = v.front();
         return true;
       },
       "even profile expression in t (required for --model expr)");
    cmd->add_option("--grid", grid_spec,
                    "gap grid: min:max:count or geo:peak:max:count");
    cmd->add_option("--output", output_path, "write to this file instead of stdout");
  };

  CLI::App* c_classify = app.add_subcommand(
      "classify", "decide rank-one/poly/quasi/convexity of the energy");
  add_model_options(c_classify);
  c_classify->add_option("--tol", classify_tol, "relative convexity tolerance");
  c_classify->add_option("--format", format, "json or csv");

  CLI::App* c_relax = app.add_subcommand(
      "relax", "evaluate the relaxed energy at an SL(2) matrix");
  add_model_options(c_relax);
  c_relax->add_option("--F", matrix_text, "matrix 'a11,a12;a21,a22'")->required();
  c_relax->add_flag("--extrapolate", extrapolate,
                    "extrapolate beyond the grid instead of failing");

  CLI::App* c_envelope = app.add_subcommand(
      "envelope", "report the convex envelope of the gap profile");
  add_model_options(c_envelope);
  c_envelope->add_option("--format", format, "json (report) or csv (profile rows)");

  CLI::App* c_table = app.add_subcommand(
      "table", "tabulate profile vs envelope at chosen gap values");
  add_model_options(c_table);
  c_table->add_option("--points", points_text, "comma-separated gap values")
      ->required();

  CLI::App* c_verify = app.add_subcommand(
      "verify", "cross-check the envelope against independent oracles");
  add_model_options(c_verify);
  c_verify->add_option("--seed", vp.seed, "seed for the matrix spot checks");
  c_verify->add_option("--lam-tol", vp.lam_tol, "lamination agreement tolerance");
  c_verify->add_option("--iters", vp.iters, "max lamination passes");
  c_verify->add_option("--dirs", vp.dirs, "tangent directions per grid point");
  c_verify->add_option("--s-samples", vp.s_samples, "lamination s samples per sign");
  c_verify->add_option("--fp-tol", vp.fp_tol, "lamination fixed-point tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);  // prints the help text, returns 0
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!output_path.empty()) {
    file_out.open(output_path, std::ios::binary);
    if (!file_out) throw NumericError("cannot open output file " + output_path);
    sink = &file_out;
  }

  const EnergyModel model = build_model(margs);
  const Grid grid = parse_grid_spec(grid_spec);
  int code = 0;

  if (app.got_subcommand(c_classify)) {
    const ClassificationReport report = classify_energy(model, grid, classify_tol);
    if (format == "json") {
      *sink << classification_json(report, grid_spec).dump(2) << '\n';
    } else if (format == "csv") {
      *sink << "rank_one_convex,polyconvex,quasiconvex,convex_on_sl2,"
               "min_second_difference,min_forward_difference,witness_t,tolerance\n"
            << (report.rank_one_convex ? "true" : "false") << ','
            << (report.polyconvex ? "true" : "false") << ','
            << (report.quasiconvex ? "true" : "false") << ','
            << (report.convex_on_sl2 ? "true" : "false") << ','
            << fmt17(report.min_second_difference) << ','
            << fmt17(report.min_forward_difference) << ','
            << fmt17(report.witness_t) << ',' << fmt17(report.tolerance) << '\n';
    } else {
      throw UsageError("unknown format '" + format + "' (json, csv)");
    }
  } else if (app.got_subcommand(c_relax)) {
    const Mat2 F = parse_matrix(matrix_text);
    const RelaxedEnergy rel = build_relaxation(model, grid, {extrapolate});
    *sink << fmt17(relaxed_value(rel, F)) << '\n';
  } else if (app.got_subcommand(c_envelope)) {
    const RelaxedEnergy rel = build_relaxation(model, grid);
    if (format == "json") {
      ordered_json j;
      j["model"] = model.name;
      j["grid"] = grid_spec;
      j["algorithm"] = rel.algorithm;
      j["hull_vertex_count"] = rel.envelope.hull_vertices().size();
      ordered_json bridges = ordered_json::array();
      for (const Bridge& b : rel.envelope.bridges()) {
        ordered_json jb;
        jb["t_left"] = b.t_left;
        jb["t_right"] = b.t_right;
        jb["slope"] = b.slope;
        jb["slope_residual"] = b.slope_residual;
        bridges.push_back(jb);
      }
      j["bridges"] = bridges;
      j["left_tail_slope"] = rel.tails.left_slope;
      j["right_tail_slope"] = rel.tails.right_slope;
      j["truncation_warning"] = rel.tails.truncation_warning;
      if (rel.closed_form_max_error)
        j["closed_form_max_error"] = *rel.closed_form_max_error;
      else
        j["closed_form_max_error"] = nullptr;
      *sink << j.dump(2) << '\n';
    } else if (format == "csv") {
      emit_table(relaxed_profile(rel, rel.grid_spec), *sink);
    } else {
      throw UsageError("unknown format '" + format + "' (json, csv)");
    }
  } else if (app.got_subcommand(c_table)) {
    const Grid points = parse_points(points_text);
    const RelaxedEnergy rel = build_relaxation(model, grid);
    emit_table(relaxed_profile(rel, points), *sink);
  } else if (app.got_subcommand(c_verify)) {
    code = do_verify(model, grid, grid_spec, vp, *sink, err);
  }

  if (sink == &file_out) {
    file_out.flush();
    if (!file_out) throw NumericError("failed writing " + output_path);
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace sl2relax::cli
