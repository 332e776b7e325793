#include "koszulcy/cli/commands.hpp"

#include "koszulcy/errors.hpp"
#include "koszulcy/pbw.hpp"
#include "koszulcy/regular.hpp"
#include "koszulcy/skew.hpp"
#include "koszulcy/superpotential.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace koszulcy::cli {

namespace {

struct Context {
  AlgebraDescription desc;
  QuadraticAlgebra a;
  RunOptions options;
};

using Handler = std::function<bool(const Context&, Json&)>;

Json description_json(const AlgebraDescription& d) { return Json::parse(serialize(d)); }

Json dims_json(const std::vector<std::size_t>& dims) { return Json(dims); }

Matrix chosen_sigma(const Context& c, const RegularityCertificate& cert) {
  switch (c.options.sigma) {
    case SigmaChoice::identity:
      return Matrix::identity(c.a.n());
    case SigmaChoice::document:
      if (!c.desc.sigma) {
        throw PreconditionError("--sigma file needs a \"sigma\" matrix in the document");
      }
      return *c.desc.sigma;
    case SigmaChoice::nakayama:
      break;
  }
  return nakayama_of_A(c.a, cert);
}

bool cmd_dual(const Context& c, Json& out) {
  const QuadraticAlgebra dual = quadratic_dual(c.a);
  out["algebra"] = description_json(describe(dual));
  out["dual_dims"] = dims_json(graded_dims(dual, c.options.max_degree, c.options.word_cap));
  return true;
}

bool cmd_hilbert(const Context& c, Json& out) {
  out["dims"] = dims_json(graded_dims(c.a, c.options.max_degree, c.options.word_cap));
  out["dual_dims"] =
      dims_json(graded_dims(quadratic_dual(c.a), c.options.max_degree, c.options.word_cap));
  return true;
}

bool cmd_koszul(const Context& c, Json& out) {
  const auto cert = numeric_koszul_certificate(c.a, c.options.max_degree, c.options.word_cap);
  Json degrees = Json::array();
  for (const auto& d : cert.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"coalgebra_dim", d.coalgebra_dim},
                       {"dual_dim", d.dual_dim},
                       {"euler_sum", d.euler_sum},
                       {"pass", d.pass}});
  }
  out["is_koszul_to_bound"] = cert.pass();
  out["passed_to"] = cert.passed_to();
  out["degrees"] = degrees;
  return cert.pass();
}

bool cmd_regular(const Context& c, Json& out) {
  const auto r = as_regular_certificate(c.a, c.options.max_degree, c.options.word_cap);
  out["is_regular"] = r.certificate.has_value();
  if (r.certificate) {
    out["gldim"] = r.certificate->gldim;
    out["dual_dims"] = dims_json(r.certificate->dual_dims);
  } else {
    out["refutation"] = r.refutation;
    out["witness_degree"] = r.witness_degree ? Json(*r.witness_degree) : Json(nullptr);
  }
  return r.certificate.has_value();
}

bool cmd_nakayama(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const Matrix xi = nakayama_of_A(c.a, cert);
  out["gldim"] = cert.gldim;
  out["nakayama"] = to_json(xi);
  out["dual_nakayama"] = to_json(cert.dual_frobenius.nakayama.at(1));
  bool ok = true;
  if (cert.gldim == 2) {
    const auto form = dim2_matrix_form(c.a, cert);
    ok = form.xi == xi;
    out["matrix_form"] = {{"m", to_json(form.m)}, {"xi", to_json(form.xi)}, {"routes_agree", ok}};
  }
  return ok;
}

bool cmd_skew(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const Matrix sigma = chosen_sigma(c, cert);
  const SkewExtension s = skew_extend(c.a, sigma);
  AlgebraDescription b = describe(s.b);
  b.domain = c.desc.domain;
  if (c.desc.name) {
    b.name = *c.desc.name + "-skew";
  }
  out["sigma"] = to_json(sigma);
  out["algebra"] = description_json(b);
  out["dims"] = dims_json(graded_dims(s.b, c.options.max_degree, c.options.word_cap));
  return true;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = entry(rng);
      }
    }
    if (try_inverse(g)) {
      return g;
    }
  }
}

bool cmd_superpotential(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const auto data = extract_superpotential(c.a, cert, c.options.word_cap);
  const bool twisted = is_twisted_superpotential(data.w, data.sigma).pass;
  const bool quotient = derivation_quotient(data.w, c.a.names()).relations() == c.a.relations();
  // k·g^{⊗d}(w) is twisted by gσg^{-1}.
  std::mt19937_64 rng(c.options.seed);
  std::uniform_int_distribution<int> scale(1, 5);
  const int trials = 10;
  int conjugates_ok = 0;
  for (int t = 0; t < trials; ++t) {
    const Matrix g = random_invertible(rng, c.a.n());
    const Tensor w = apply_all_slots(g, Scalar(scale(rng)) * data.w);
    conjugates_ok += is_twisted_superpotential(w, g * data.sigma * inverse(g)).pass ? 1 : 0;
  }
  out["w"] = to_json(data.w, c.a.names());
  out["sigma"] = to_json(data.sigma);
  out["m"] = to_json(data.m);
  out["n"] = to_json(data.n);
  out["xi_matches_matrices"] = data.xi_matches_matrices;
  out["twisted"] = twisted;
  out["derivation_quotient_matches"] = quotient;
  out["random_conjugates"] = {{"checked", trials}, {"passed", conjugates_ok}};
  return twisted && quotient && data.xi_matches_matrices && conjugates_ok == trials;
}

bool cmd_symmetrize(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const auto data = extract_superpotential(c.a, cert, c.options.word_cap);
  const Tensor w_hat = symmetrize(data.w, data.sigma);
  std::vector<std::string> names = c.a.names();
  names.push_back(fresh_generator_name(names));
  const bool cyclic = is_twisted_superpotential(w_hat, Matrix::identity(names.size())).pass;
  out["w"] = to_json(data.w, c.a.names());
  out["sigma"] = to_json(data.sigma);
  out["w_hat"] = to_json(w_hat, names);
  out["cyclic"] = cyclic;
  return cyclic;
}

bool cmd_derivquot(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const auto r = verify_thm2(c.a, cert, c.options.word_cap);
  std::vector<std::string> names = c.a.names();
  names.push_back(fresh_generator_name(names));
  out["a_equals_a_w"] = r.part_i;
  out["skew_equals_a_w_hat"] = r.part_ii;
  out["l"] = to_json(r.l);
  out["l_invertible"] = r.l_invertible;
  out["w_hat"] = to_json(r.w_hat, names);
  return r.part_i && r.part_ii && r.l_invertible;
}

bool cmd_extiso(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const Matrix sigma = chosen_sigma(c, cert);
  const auto r = verify_extalg_iso(c.a, sigma, c.options.max_degree, c.options.word_cap);
  out["sigma"] = to_json(sigma);
  out["gamma_dims"] = dims_json(r.gamma_dims);
  out["dual_dims"] = dims_json(r.dual_dims);
  out["dims_match"] = r.dims_match;
  out["g_invertible"] = r.g_invertible;
  out["square_commutes"] = r.square_commutes;
  out["square_witness"] = r.square_witness
                              ? Json::array({r.square_witness->first, r.square_witness->second})
                              : Json(nullptr);
  out["xz_identity"] = r.xz_identity;
  out["zx_identity"] = r.zx_identity;
  out["l"] = to_json(r.l);
  out["full_isomorphism"] = r.full_isomorphism;
  return r.pass();
}

bool cmd_cy(const Context& c, Json& out) {
  const auto cert = require_regular(c.a, c.options.max_degree, c.options.word_cap);
  const Matrix sigma = chosen_sigma(c, cert);
  const auto v = cy_check_with(c.a, sigma, c.options.max_degree, c.options.word_cap);
  out["is_CY"] = v.is_cy;
  out["dimension"] = v.dimension;
  out["sigma"] = to_json(v.sigma);
  out["xi"] = to_json(v.xi);
  out["sigma_is_nakayama"] = v.sigma_is_nakayama;
  out["dual_route_symmetric"] = v.dual_route_symmetric;
  out["witness"] =
      v.witness ? Json::array({v.witness->first, v.witness->second}) : Json(nullptr);
  return v.is_cy;
}

Json zeta_json(const AffineMap& zeta) {
  return {{"linear", to_json(zeta.linear)}, {"constant", to_json(zeta.constant)}};
}

DeformationContext deformation_context(const Context& c) {
  if (!c.desc.deformation) {
    throw PreconditionError("this command needs a \"deformation\" section");
  }
  return analyze_deformation(to_deformation(c.desc, c.a), c.options.max_degree,
                             c.options.word_cap);
}

bool cmd_pbw(const Context& c, Json& out) {
  const auto ctx = deformation_context(c);
  Json witness = Json::array();
  for (const auto& [degree, index] : ctx.axioms.witness) {
    witness.push_back({degree, index});
  }
  out["axioms"] = {{"pass", ctx.axioms.pass}, {"law", ctx.axioms.law}, {"witness", witness}};
  out["lambda"] = to_json(ctx.lambda.lambdas);
  out["xi"] = to_json(ctx.xi);
  out["zeta"] = zeta_json(deformed_nakayama(ctx));
  if (!ctx.axioms.pass) {
    return false;
  }
  out["prop4_condition"] = prop4_condition(ctx);
  const auto v = cy_criterion_deformed(ctx, c.desc.domain, c.options.word_cap);
  out["is_CY"] = v.is_cy;
  out["failing_element"] = v.failing_element ? Json(*v.failing_element) : Json(nullptr);
  out["b_dual_agrees"] = v.b_dual_agrees;
  out["converse_applies"] = v.converse_applies;
  return v.is_cy;
}

bool cmd_thm5(const Context& c, Json& out) {
  const auto ctx = deformation_context(c);
  if (ctx.cert.gldim != 2) {
    throw PreconditionError("thm5 needs a base of global dimension 2");
  }
  const auto r = thm5_check(ctx, c.options.word_cap);
  out["cond_i"] = r.cond_i;
  out["cond_ii"] = r.cond_ii;
  out["cond_iii"] = r.cond_iii;
  out["equivalent"] = r.equivalent;
  out["lambda"] = to_json(r.lambdas);
  out["lambda_m"] = to_json(r.lambda_m);
  out["minus_lambda_mt"] = to_json(r.minus_lambda_mt);
  return r.equivalent;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"dual", cmd_dual},         {"hilbert", cmd_hilbert},
      {"koszul", cmd_koszul},     {"regular", cmd_regular},
      {"nakayama", cmd_nakayama}, {"skew", cmd_skew},
      {"superpotential", cmd_superpotential},
      {"symmetrize", cmd_symmetrize},
      {"derivquot", cmd_derivquot},
      {"extiso", cmd_extiso},     {"cy", cmd_cy},
      {"pbw", cmd_pbw},           {"thm5", cmd_thm5}};
  return table;
}

Json error_json(const char* kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "dual",       "hilbert",   "koszul", "regular", "nakayama", "skew", "superpotential",
      "symmetrize", "derivquot", "extiso", "cy",      "pbw",      "thm5"};
  return names;
}

SigmaChoice parse_sigma_choice(const std::string& text) {
  if (text == "id") {
    return SigmaChoice::identity;
  }
  if (text == "nakayama") {
    return SigmaChoice::nakayama;
  }
  if (text == "file") {
    return SigmaChoice::document;
  }
  throw ParseError("--sigma must be one of id, nakayama, file");
}

std::string sigma_name(SigmaChoice choice) {
  switch (choice) {
    case SigmaChoice::identity:
      return "id";
    case SigmaChoice::document:
      return "file";
    case SigmaChoice::nakayama:
      break;
  }
  return "nakayama";
}

RunResult run(const std::string& command, const std::string& document,
              const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  Json& body = result.report.body;
  body["command"] = command;
  body["config"] = {{"max_degree", options.max_degree},
                    {"seed", options.seed},
                    {"sigma", sigma_name(options.sigma)}};
  try {
    const auto it = handlers().find(command);
    if (it == handlers().end()) {
      throw ParseError("unknown subcommand \"" + command + "\"");
    }
    Context c{parse_description(document), {}, options};
    body["input_digest"] = hex_digest(serialize(c.desc));
    if (c.desc.name) {
      body["name"] = *c.desc.name;
    }
    c.a = to_algebra(c.desc);
    body["koszul_bound"] = options.max_degree;
    Json out = Json::object();
    const bool pass = it->second(c, out);
    body["verdict"] = pass ? "pass" : "fail";
    for (auto& [key, value] : out.items()) {
      body[key] = value;
    }
    result.exit_code = pass || !options.fail_on_verdict ? kPass : kVerdictFail;
  } catch (const ResourceGuardError& e) {
    body["error"] = error_json("resource_guard", e.what());
    result.exit_code = kResourceGuard;
  } catch (const ParseError& e) {
    body["error"] = error_json("parse", e.what());
    result.exit_code = kUsage;
  } catch (const PreconditionError& e) {
    body["error"] = error_json("precondition", e.what());
    result.exit_code = kUsage;
  } catch (const DimensionError& e) {
    body["error"] = error_json("dimension", e.what());
    result.exit_code = kUsage;
  } catch (const std::exception& e) {
    body["error"] = error_json("internal", e.what());
    result.exit_code = kUsage;
  }
  result.report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace koszulcy::cli
