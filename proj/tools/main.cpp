// hyperpoly CLI: parse JSON models, run the library operations, emit a
// deterministic JSON report on stdout.
//
// Exit codes: 0 true/success, 1 negative verdict, 2 input error,
// 3 precondition violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperbolicity.hpp"
#include "hyperpoly/io.hpp"
#include "hyperpoly/matroid.hpp"
#include "hyperpoly/pencil.hpp"
#include "hyperpoly/polynomial.hpp"

using json = nlohmann::json;
using namespace hyperpoly;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

Polynomial load_polynomial(const std::string& path) {
  const ModelFile model = parse_model(path);
  if (const auto* pm = std::get_if<PolynomialModel>(&model)) return pm->poly;
  if (const auto* fm = std::get_if<FormsModel>(&model)) return product_of_forms(fm->forms);
  throw io_error(path + ": expected a 'polynomial' or 'forms' model");
}

std::vector<LinearForm> load_forms(const std::string& path) {
  const ModelFile model = parse_model(path);
  if (const auto* fm = std::get_if<FormsModel>(&model)) return fm->forms;
  throw io_error(path + ": expected a 'forms' model");
}

RealizationMatrix load_realization(const std::string& path) {
  const ModelFile model = parse_model(path);
  if (const auto* rm = std::get_if<RealizationModel>(&model)) return rm->matrix;
  throw io_error(path + ": expected a 'realization' model");
}

int run_polar(const std::string& in, const std::string& dir, int order) {
  const Polynomial p = load_polynomial(in);
  const Point e = parse_point_arg(dir);
  const Polynomial result = p.polar(e, order);
  emit(json{{"command", "polar"},
            {"dir", point_to_json(e)},
            {"order", order},
            {"input_degree", *p.homogeneous_degree()},
            {"polar", polynomial_to_json(result)}});
  return 0;
}

int run_hyp_check(const std::string& in, const std::string& dir, int samples,
                  std::uint64_t seed, int jobs) {
  const Polynomial p = load_polynomial(in);
  const Point e = parse_point_arg(dir);
  const HyperbolicityVerdict v = check_hyperbolic(p, e, samples, seed, jobs);
  json report{{"command", "hyp-check"},
              {"dir", point_to_json(e)},
              {"hyperbolic", v.hyperbolic},
              {"samples", v.samples},
              {"seed", v.seed}};
  if (v.witness) {
    report["witness"] = point_to_json(*v.witness);
    report["witness_index"] = v.witness_index;
  }
  emit(report);
  return v.hyperbolic ? 0 : kExitFalse;
}

int run_member(const std::string& in, const std::string& dir, const std::string& point,
               int derivative, bool open) {
  const Polynomial p = load_polynomial(in);
  const Point e = parse_point_arg(dir);
  const Point x = parse_point_arg(point);
  const HyperbolicContext ctx(p, e);
  bool member = false;
  if (derivative == 0) {
    member = in_cone(ctx, x, open ? ConeMode::Open : ConeMode::Closed);
  } else {
    if (open) throw io_error("member: --open applies only to the base cone (derivative 0)");
    member = in_derivative_cone(ctx, x, derivative);
  }
  emit(json{{"command", "member"},
            {"derivative", derivative},
            {"dir", point_to_json(e)},
            {"member", member},
            {"mode", open ? "open" : "closed"},
            {"point", point_to_json(x)}});
  return member ? 0 : kExitFalse;
}

int run_renegar(const std::string& forms_path, const std::string& dir, bool verify) {
  const auto forms = load_forms(forms_path);
  const Point e = parse_point_arg(dir);
  const auto normalized = normalize_forms(forms, e);
  const auto pencil = renegar_pencil(forms, e);
  json report{{"command", "renegar"},
              {"dir", point_to_json(e)},
              {"normalized_forms", forms_to_json(normalized)},
              {"pencil", pencil_to_json(pencil)}};
  int code = 0;
  if (verify) {
    const auto r = verify_theorem1(forms, e);
    report["verify"] = json{{"equal", r.equal},
                            {"det", polynomial_to_json(r.determinant)},
                            {"polar", polynomial_to_json(r.polar)}};
    code = r.equal ? 0 : kExitFalse;
  }
  emit(report);
  return code;
}

int run_binet(const std::string& realization_path) {
  const auto L = load_realization(realization_path);
  const auto rp = realization_pencil(L);
  const auto det = pencil_det(rp.pencil, std::max(12, rp.pencil.size()));
  const bool equal = det == rp.bases;
  emit(json{{"command", "binet"},
            {"bases", polynomial_to_json(rp.bases)},
            {"det", polynomial_to_json(det)},
            {"equal", equal},
            {"pencil", pencil_to_json(rp.pencil)},
            {"realization", realization_to_json(L)}});
  return equal ? 0 : kExitFalse;
}

int run_polymatroid(const std::string& in, const std::string& dir) {
  const Polynomial p = load_polynomial(in);
  const Point e = parse_point_arg(dir);
  const HyperbolicContext ctx(p, e);
  const RankFunction rk = gurvits_rank(ctx);
  const PolymatroidReport report = is_polymatroid(rk);
  json out{{"command", "polymatroid"},
           {"dir", point_to_json(e)},
           {"matroid", report.matroid},
           {"polymatroid", report.polymatroid},
           {"rank", rank_to_json(rk)}};
  if (report.violation) {
    out["violation"] = json{{"I", report.violation->first}, {"J", report.violation->second}};
  }
  for (int k = 0; k <= rk.n; ++k) {
    if (equals_uniform(rk, {k, rk.n})) {
      out["uniform"] = json{{"k", k}, {"n", rk.n}};
      break;
    }
  }
  emit(out);
  return report.polymatroid ? 0 : kExitFalse;
}

int run_uniform_search(int k, int n, int max_bits, int jobs) {
  const UniformSpec spec{k, n};
  const auto res = search_unimodular(spec, max_bits, jobs);
  json report{{"command", "uniform-search"},
              {"found", res.witness.has_value()},
              {"k", k},
              {"n", n},
              {"searched", res.searched}};
  if (res.witness) {
    report["witness"] = realization_to_json(*res.witness);
    report["verified"] = is_unimodular_realization(*res.witness, spec);
  }
  emit(report);
  return res.witness ? 0 : kExitFalse;
}

int run_e2_rep(int n, bool literal) {
  const auto pencil = e2_arrowhead(n, literal);
  const auto det = pencil_det(pencil, std::max(12, pencil.size()));
  const auto e1 = elementary_symmetric(n, 1);
  const auto target =
      Rational(2) * polynomial_pow(e1, literal ? n - 2 : n - 1) * elementary_symmetric(n, 2);
  const bool equal = det == target;
  json report{{"command", "e2-rep"},
              {"target", polynomial_to_json(target)},
              {"det", polynomial_to_json(det)},
              {"equal", equal},
              {"literal_paper_matrix", literal},
              {"n", n},
              {"pencil", pencil_to_json(pencil)},
              {"positive_definite_at_ones", is_pd(pencil_eval(pencil, Point::ones(n)))}};
  if (!equal) report["difference"] = polynomial_to_json(det - target);
  emit(report);
  return equal ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hyperbolic polynomials, derivative cones and spectrahedral pencils"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sampling/search (never changes results)");

  std::string in_path, dir_arg, point_arg, forms_path, realization_path;
  int order = 1, samples = 64, derivative = 0, k = 0, n = 0, max_bits = 20;
  std::uint64_t seed = 0;
  bool open_mode = false, verify = false, literal = false;

  auto* polar_cmd = app.add_subcommand("polar", "i-th polar of a polynomial");
  polar_cmd->add_option("--in", in_path, "polynomial or forms model (JSON)")->required();
  polar_cmd->add_option("--dir", dir_arg, "direction: inline tuple or JSON file")->required();
  polar_cmd->add_option("-i,--order", order, "polar order")->required();

  auto* hyp_cmd = app.add_subcommand("hyp-check", "sample-based hyperbolicity certification");
  hyp_cmd->add_option("--in", in_path)->required();
  hyp_cmd->add_option("--dir", dir_arg)->required();
  hyp_cmd->add_option("--samples", samples, "restrictions to certify");
  hyp_cmd->add_option("--seed", seed, "generator seed");

  auto* member_cmd = app.add_subcommand("member", "hyperbolicity-cone membership");
  member_cmd->add_option("--in", in_path)->required();
  member_cmd->add_option("--dir", dir_arg)->required();
  member_cmd->add_option("--point", point_arg)->required();
  member_cmd->add_option("--derivative", derivative, "derivative cone order (default 0)");
  member_cmd->add_flag("--open", open_mode, "test the open cone");

  auto* renegar_cmd = app.add_subcommand("renegar", "first-derivative-cone pencil of a polytope");
  renegar_cmd->add_option("--forms", forms_path, "forms model (JSON)")->required();
  renegar_cmd->add_option("--dir", dir_arg)->required();
  renegar_cmd->add_flag("--verify", verify, "check det == first polar symbolically");

  auto* binet_cmd = app.add_subcommand("binet", "rank-one pencil and basis polynomial of a realization");
  binet_cmd->add_option("--realization", realization_path, "realization model (JSON)")->required();

  auto* polym_cmd = app.add_subcommand("polymatroid", "rank function extracted from a hyperbolic pair");
  polym_cmd->add_option("--in", in_path)->required();
  polym_cmd->add_option("--dir", dir_arg)->required();

  auto* search_cmd = app.add_subcommand("uniform-search", "exhaustive unimodular realization search");
  search_cmd->add_option("-k", k, "rank")->required();
  search_cmd->add_option("-n", n, "ground-set size")->required();
  search_cmd->add_option("--max-bits", max_bits, "candidate budget exponent");

  auto* e2_cmd = app.add_subcommand("e2-rep", "arrowhead determinantal representation for E_2");
  e2_cmd->add_option("-n", n, "number of variables")->required();
  e2_cmd->add_flag("--literal-paper-matrix", literal, "build the size-n arrowhead variant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (polar_cmd->parsed()) return run_polar(in_path, dir_arg, order);
    if (hyp_cmd->parsed()) return run_hyp_check(in_path, dir_arg, samples, seed, jobs);
    if (member_cmd->parsed())
      return run_member(in_path, dir_arg, point_arg, derivative, open_mode);
    if (renegar_cmd->parsed()) return run_renegar(forms_path, dir_arg, verify);
    if (binet_cmd->parsed()) return run_binet(realization_path);
    if (polym_cmd->parsed()) return run_polymatroid(in_path, dir_arg);
    if (search_cmd->parsed()) return run_uniform_search(k, n, max_bits, jobs);
    if (e2_cmd->parsed()) return run_e2_rep(n, literal);
  } catch (const io_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInput;
}
