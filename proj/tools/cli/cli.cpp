#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "reports.hpp"

#ifndef HEUNLIE_VERSION
#define HEUNLIE_VERSION "unknown"
#endif

namespace heunlie::cli {

namespace {

using reports::Json;

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string command;
  std::string a = "2", q = "0", alpha = "1", beta = "1", gamma = "1", delta = "1", epsilon = "1";
  int n = 0;
  std::optional<std::string> j;
  std::optional<int> N;
  std::string op_kind = "auto";
  std::optional<std::string> expr;
  int K = 32;
  std::optional<int> p;
  std::string s_eval = "0";
  std::string c0 = "1", c1 = "0";
  std::string A = "1", B = "0";
  std::optional<std::string> E;
  std::string lambda = "1";
  std::string sign = "+";
  int l = 1;
  std::optional<std::string> rho, sigma, tau, ab;
  std::string output = "json";
  std::optional<std::string> out;
  std::string sweep_command = "analyze";
  std::vector<std::string> grid;
};

struct Result {
  int code = kOk;
  Json report;
  std::string error;
};

Rational parse_real(const std::string& text, const char* name) {
  const CRat v = parse_crat(text);
  if (!v.is_real()) throw InvalidParams(std::string(name) + " must be real, got " + v.str());
  return v.re();
}

HeunParams make_params(const Options& o) {
  return HeunParams(parse_crat(o.a), parse_crat(o.q), parse_crat(o.alpha), parse_crat(o.beta), parse_crat(o.gamma),
                    parse_crat(o.delta), parse_crat(o.epsilon));
}

void validate(const Options& o) {
  if (o.n < 0 || o.n > 64) throw InvalidParams("n must lie in [0, 64], got " + std::to_string(o.n));
  if (o.K < 2) throw InvalidParams("K must be >= 2, got " + std::to_string(o.K));
  if (o.N && *o.N < 0) throw InvalidParams("N must be >= 0");
  if (o.N && *o.N > 256) throw InvalidParams("N must be <= 256");
  if (o.l < 1) throw InvalidParams("l must be >= 1");
  if (o.output != "json" && o.output != "text") throw InvalidParams("output must be json or text");
  if (o.sign != "+" && o.sign != "-") throw InvalidParams("sign must be + or -");
  if (o.op_kind != "auto" && o.op_kind != "es" && o.op_kind != "heun") {
    throw InvalidParams("operator must be auto, es or heun");
  }
}

std::string canonical(const std::string& text) { return parse_crat(text).str(); }

Json config_json(const Options& o) {
  Json c{{"command", o.command}};
  for (const auto& [key, value] : std::vector<std::pair<const char*, const std::string*>>{
           {"a", &o.a}, {"q", &o.q}, {"alpha", &o.alpha}, {"beta", &o.beta}, {"gamma", &o.gamma},
           {"delta", &o.delta}, {"epsilon", &o.epsilon}}) {
    c[key] = canonical(*value);
  }
  c["n"] = o.n;
  c["j"] = o.j ? Json(canonical(*o.j)) : Json(nullptr);
  c["N"] = o.N ? Json(*o.N) : Json(nullptr);
  c["operator"] = o.op_kind;
  c["expr"] = o.expr ? Json(*o.expr) : Json(nullptr);
  c["K"] = o.K;
  c["p"] = o.p ? Json(*o.p) : Json(nullptr);
  c["s_eval"] = canonical(o.s_eval);
  c["c0"] = canonical(o.c0);
  c["c1"] = canonical(o.c1);
  c["A"] = canonical(o.A);
  c["B"] = canonical(o.B);
  c["E"] = o.E ? Json(canonical(*o.E)) : Json(nullptr);
  c["lambda"] = canonical(o.lambda);
  c["sign"] = o.sign;
  c["l"] = o.l;
  for (const auto& [key, value] : std::vector<std::pair<const char*, const std::optional<std::string>*>>{
           {"rho", &o.rho}, {"sigma", &o.sigma}, {"tau", &o.tau}, {"ab", &o.ab}}) {
    c[key] = *value ? Json(canonical(**value)) : Json(nullptr);
  }
  return c;
}

Json header(const std::string& schema, const Options& o) {
  return Json{{"schema", schema}, {"version", HEUNLIE_VERSION}, {"config", config_json(o)}};
}

Spin resolve_spin(const Options& o) { return o.j ? Spin::from_value(parse_crat(*o.j)) : Spin(o.n); }

// ---- analyze -------------------------------------------------------------

Json exponent_block(const DiffOp& op, const SingularPoint& at) {
  try {
    const ExponentPair ex = indicial_exponents(op, at);
    return Json::array({reports::surd(ex.first), reports::surd(ex.second)});
  } catch (const NotRegularSingular& e) {
    return Json{{"error", e.what()}};
  }
}

Json cmd_analyze(const Options& o) {
  const HeunParams p = make_params(o);
  const Spin spin = resolve_spin(o);

  const DiffOp expanded = build_expanded(p);
  if (!(expanded == build_canonical_cleared(p))) throw OracleMismatch("expanded and cleared canonical forms differ");
  const UEACoeffs uc = uea_heun_coeffs(spin, p);
  const DiffOp full = uea_expand(uc.to_expr(), spin);
  if (!(assemble_from_coeffs(extract_coeffs(full, p.q()), p.a()) == full)) {
    throw OracleMismatch("UEA expansion is not of Heun shape");
  }

  Json doc = header("heun-analysis-v1", o);
  doc["convention"] = DiscrepancyReport{}.convention;
  doc["params"] = reports::params(p);
  doc["constraint_residual"] = reports::exact(check_constraint(p));
  doc["spin"] = reports::exact(spin.value());
  doc["operator"] = format_operator(expanded);
  doc["exponents"] = Json{{"0", exponent_block(expanded, CRat())},
                          {"1", exponent_block(expanded, CRat(1))},
                          {"a", exponent_block(expanded, p.a())},
                          {"inf", exponent_block(expanded, Infinity{})}};
  doc["uea_coeffs"] = Json{{"cPlusZero", reports::exact(uc.cPlusZero)}, {"cPlusMinus", reports::exact(uc.cPlusMinus)},
                           {"cZeroMinus", reports::exact(uc.cZeroMinus)}, {"cPlus", reports::exact(uc.cPlus)},
                           {"cZero", reports::exact(uc.cZero)},          {"cMinus", reports::exact(uc.cMinus)},
                           {"cConst", reports::exact(uc.cConst)}};
  doc["proviso_residual"] = reports::exact(theorem1_proviso(spin, p));

  Json disc = Json::array();
  for (const DiscrepancyReport& r :
       {expanded_form_discrepancies(p), verify_theorem1(spin, p), exponent_discrepancies(p)}) {
    for (auto& e : reports::discrepancies(r)) disc.push_back(e);
  }
  doc["discrepancies"] = disc;

  Json es{{"condition_residual", reports::exact(es_condition(spin, p))}};
  const int n = spin.two_j();
  if (n >= 0) {
    es["n"] = n;
    es["matrix_dim"] = n + 1;
    es["spectrum"] = reports::spectrum(es_spectrum(n, p, n));
  } else {
    es["n"] = n;
    es["matrix_dim"] = 0;
    es["spectrum"] = nullptr;
  }
  doc["es"] = es;
  return doc;
}

// ---- expand --------------------------------------------------------------

Json cmd_expand(const Options& o) {
  const Spin spin = resolve_spin(o);
  UEAExpr expr;
  if (o.expr) {
    expr = parse_uea(*o.expr);
  } else {
    expr = uea_heun(spin, make_params(o));
  }
  const DiffOp op = uea_expand(expr, spin);
  Json doc = header("uea-expand-v1", o);
  doc["spin"] = reports::exact(spin.value());
  doc["expr"] = format_uea(expr);
  doc["operator"] = format_operator(op);
  return doc;
}

// ---- spectrum ------------------------------------------------------------

Json cmd_spectrum(const Options& o) {
  const HeunParams p = make_params(o);
  const Spin spin(o.n);
  const CRat condition = es_condition(spin, p);
  std::string kind = o.op_kind;
  if (kind == "auto") kind = condition.is_zero() ? "es" : "heun";
  const DiffOp op = kind == "es" ? es_operator(o.n, p) : build_expanded(p);
  const int N = o.N.value_or(o.n);

  const ExactMatrix m = qes_matrix(op, N);
  const Spectrum s = matrix_spectrum(m);
  const CRat constant = op.coeff(0).coeff(0);

  Json doc = header("heun-spectrum-v1", o);
  doc["convention"] = DiscrepancyReport{}.convention;
  doc["params"] = reports::params(p);
  doc["n"] = o.n;
  doc["N"] = N;
  doc["operator_kind"] = kind;
  doc["operator"] = format_operator(op);
  doc["es_condition_residual"] = reports::exact(condition);
  doc["matrix"] = reports::matrix(m);
  doc["lower_triangular"] = m.is_lower_triangular();
  doc["upper_triangular"] = m.is_upper_triangular();
  doc["spectrum"] = reports::spectrum(s);
  const CRat stmt = es_eigenvalue_statement(o.n, p);
  const CRat proof = es_eigenvalue_proof(o.n, p);
  doc["eigenvalue_formulas"] = Json{
      {"constant_term", reports::exact(constant)},
      {"statement", Json{{"value", reports::exact(stmt)}, {"residual_vs_constant_term", reports::exact(stmt - constant)}}},
      {"proof", Json{{"value", reports::exact(proof)}, {"residual_vs_constant_term", reports::exact(proof - constant)}}}};
  return doc;
}

// ---- distsol -------------------------------------------------------------

RecurrenceSpec resolve_recurrence(const Options& o, const HeunParams& p) {
  const EsScalars es = es_scalars(o.n, p);
  RecurrenceSpec spec;
  spec.l = o.l;
  spec.rho = o.rho ? parse_crat(*o.rho) : es.rho;
  spec.sigma = o.sigma ? parse_crat(*o.sigma) : es.sigma;
  spec.tau = o.tau ? parse_crat(*o.tau) : es.tau;
  spec.abProduct = o.ab ? parse_crat(*o.ab) : es.abProduct;
  spec.E = o.E ? parse_crat(*o.E) : es.constant;
  spec.a = p.a();
  return spec;
}

Json branch_report(const RecurrenceSpec& spec, Branch branch, const Options& o, std::complex<double> A,
                   std::complex<double> B) {
  Json out;
  try {
    const std::vector<CRat> c = forward_solve(spec, branch, parse_crat(o.c0), parse_crat(o.c1), o.K);
    Json seq = Json::array();
    for (const auto& v : c) seq.push_back(reports::exact(v));
    out["sequence"] = seq;
    Json res = Json::array();
    for (const auto& r : residual_check(c, spec, branch)) res.push_back(Json{{"k", r.k}, {"value", reports::exact(r.value)}});
    out["residuals"] = res;

    Json roots = Json::array();
    for (long k = std::max(2, first_admissible_k(spec, branch)); k <= o.K; ++k) {
      const auto [r1, r2] = branch == Branch::Real ? closed_form_roots_real(spec, k) : closed_form_roots_imag(spec, k);
      const auto quad = root_quadratic(spec, branch, k);
      roots.push_back(Json{{"k", k},
                           {"r1", reports::surd(r1)},
                           {"r2", reports::surd(r2)},
                           {"quadratic_at_sum", eval_quadratic(quad[0], quad[1], quad[2], r1 + r2).str()},
                           {"quadratic_at_difference", eval_quadratic(quad[0], quad[1], quad[2], r1 - r2).str()}});
    }
    out["roots"] = roots;

    const auto ck = paper_ck(A, B, branch, spec, o.K);
    Json ckj = Json::array();
    for (const auto& v : ck) ckj.push_back(reports::number(v));
    Json ckres = Json::array();
    for (const auto& r : residual_check(ck, spec, branch)) ckres.push_back(Json{{"k", r.k}, {"value", reports::number(r.value)}});
    out["paper_ck"] = Json{{"sequence", ckj}, {"residuals", ckres}};
  } catch (const DegenerateLeading& e) {
    out = Json{{"error", e.what()}};
  }
  return out;
}

Json cmd_distsol(const Options& o) {
  const HeunParams p = make_params(o);
  const RecurrenceSpec spec = resolve_recurrence(o, p);
  const CRat A = parse_crat(o.A);
  const CRat B = parse_crat(o.B);
  if (A + B != CRat(1)) throw InvalidParams("A + B must equal 1, got " + (A + B).str());
  parse_crat(o.c0);
  parse_crat(o.c1);

  Json doc = header("distsol-v1", o);
  doc["spec"] = Json{{"l", spec.l},
                     {"rho", reports::exact(spec.rho)},
                     {"sigma", reports::exact(spec.sigma)},
                     {"tau", reports::exact(spec.tau)},
                     {"ab", reports::exact(spec.abProduct)},
                     {"E", reports::exact(spec.E)},
                     {"a", reports::exact(spec.a)}};
  try {
    const WeightExpansion w = weight_expansion(spec.rho, spec.sigma, spec.tau, spec.a);
    Json h = Json::array();
    for (const auto& row : w.h) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(reports::exact(v));
      h.push_back(r);
    }
    doc["weight"] = Json{{"offset", w.offset()}, {"h", h}, {"polynomial", format_polynomial(w.reassemble())}};
  } catch (const NonIntegerExponents& e) {
    doc["weight"] = Json{{"error", e.what()}};
  }
  Json branches;
  for (Branch b : {Branch::Real, Branch::Imag}) {
    branches[branch_name(b)] = branch_report(spec, b, o, A.to_complex(), B.to_complex());
  }
  doc["branches"] = branches;
  return doc;
}

// ---- green / ssf ---------------------------------------------------------

EsScalars resolve_es(const Options& o, const HeunParams& p) {
  EsScalars es = es_scalars(o.n, p);
  if (o.rho) es.rho = parse_crat(*o.rho);
  if (o.sigma) es.sigma = parse_crat(*o.sigma);
  if (o.tau) es.tau = parse_crat(*o.tau);
  if (o.ab) es.abProduct = parse_crat(*o.ab);
  return es;
}

Json cmd_green(const Options& o) {
  const HeunParams p = make_params(o);
  const EsScalars es = resolve_es(o, p);
  const CRat s_eval = parse_crat(o.s_eval);
  const CRat E = o.E ? parse_crat(*o.E) : es.constant;
  const Rational lambda = parse_real(o.lambda, "lambda");

  const GreenKernel g = green_kernel(es, o.p, s_eval);
  const Distribution coincidence = green_coincidence(es, o.sign == "+" ? Sign::Plus : Sign::Minus, E, g.p, s_eval);
  const SSFValue xi = ssf(lambda, coincidence);

  Json pre = Json::array();
  for (const auto& c : g.prefactor.coeffs()) pre.push_back(reports::exact(c));
  auto delta_coeff = [](const Distribution& d) { return d.is_zero() ? CRat() : d.terms().front().coeff; };

  Json doc = header("green-v1", o);
  doc["n"] = es.n;
  doc["scalars"] = Json{{"rho", reports::exact(es.rho)},
                        {"sigma", reports::exact(es.sigma)},
                        {"tau", reports::exact(es.tau)},
                        {"a", reports::exact(es.a)}};
  doc["p_bound"] = g.p;
  doc["p_bound_rule"] = o.p ? "override" : "sigma - rho";
  doc["s_eval"] = reports::exact(g.s_eval);
  doc["prefactor_coeffs"] = pre;
  doc["kernel_coeff"] = reports::exact(g.scalar);
  doc["kp"] = reports::exact(kp_constant(es, g.p, s_eval));
  doc["omega_at_0"] = reports::exact(omega_at_zero(es));
  doc["hs_norm_sq"] = reports::exact(hs_norm_sq(es, g.p, s_eval));
  doc["trace"] = reports::exact(trace_green(g));
  doc["coincidence"] = Json{{"sign", o.sign}, {"E", reports::exact(E)}, {"coeff", reports::exact(delta_coeff(coincidence))}};
  doc["ssf"] = Json{{"lambda", reports::exact(lambda)},
                    {"step", reports::exact(xi.step)},
                    {"value", reports::exact(delta_coeff(xi.kernel))}};
  return doc;
}

// ---- dispatch ------------------------------------------------------------

Json run_single(const Options& o) {
  validate(o);
  if (o.command == "analyze") return cmd_analyze(o);
  if (o.command == "expand") return cmd_expand(o);
  if (o.command == "spectrum") return cmd_spectrum(o);
  if (o.command == "distsol") return cmd_distsol(o);
  if (o.command == "green" || o.command == "ssf") return cmd_green(o);
  throw InvalidParams("unknown command '" + o.command + "'");
}

Result guarded(const Options& o) {
  Result r;
  try {
    r.report = run_single(o);
  } catch (const OverflowColumn& e) {
    r.code = kStructural;
    r.error = std::string("OverflowColumn: ") + e.what();
  } catch (const OracleMismatch& e) {
    r.code = kOracleMismatch;
    r.error = std::string("oracle mismatch: ") + e.what();
  } catch (const IoError& e) {
    r.code = kIo;
    r.error = e.what();
  } catch (const Error& e) {
    r.code = kBadParams;
    r.error = e.what();
  } catch (const std::domain_error& e) {
    r.code = kBadParams;
    r.error = e.what();
  }
  return r;
}

// ---- sweep ---------------------------------------------------------------

using Setter = std::function<void(Options&, const std::string&)>;

int to_int(const std::string& v) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InvalidParams("expected an integer, got '" + v + "'");
  }
}

const std::map<std::string, Setter>& grid_setters() {
  static const std::map<std::string, Setter> setters = {
      {"a", [](Options& o, const std::string& v) { o.a = v; }},
      {"q", [](Options& o, const std::string& v) { o.q = v; }},
      {"alpha", [](Options& o, const std::string& v) { o.alpha = v; }},
      {"beta", [](Options& o, const std::string& v) { o.beta = v; }},
      {"gamma", [](Options& o, const std::string& v) { o.gamma = v; }},
      {"delta", [](Options& o, const std::string& v) { o.delta = v; }},
      {"epsilon", [](Options& o, const std::string& v) { o.epsilon = v; }},
      {"n", [](Options& o, const std::string& v) { o.n = to_int(v); }},
      {"j", [](Options& o, const std::string& v) { o.j = v; }},
      {"N", [](Options& o, const std::string& v) { o.N = to_int(v); }},
      {"K", [](Options& o, const std::string& v) { o.K = to_int(v); }},
      {"p", [](Options& o, const std::string& v) { o.p = to_int(v); }},
      {"l", [](Options& o, const std::string& v) { o.l = to_int(v); }},
      {"s-eval", [](Options& o, const std::string& v) { o.s_eval = v; }},
      {"E", [](Options& o, const std::string& v) { o.E = v; }},
      {"lambda", [](Options& o, const std::string& v) { o.lambda = v; }},
      {"rho", [](Options& o, const std::string& v) { o.rho = v; }},
      {"sigma", [](Options& o, const std::string& v) { o.sigma = v; }},
      {"tau", [](Options& o, const std::string& v) { o.tau = v; }},
      {"ab", [](Options& o, const std::string& v) { o.ab = v; }},
  };
  return setters;
}

struct Axis {
  std::string key;
  std::vector<std::string> values;
};

std::vector<Axis> parse_grid(const std::vector<std::string>& specs) {
  std::vector<Axis> axes;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("grid entry must be key=v1,v2,...: '" + spec + "'");
    Axis axis{spec.substr(0, eq), {}};
    if (!grid_setters().count(axis.key)) throw ParseError("unknown grid key '" + axis.key + "'");
    std::string rest = spec.substr(eq + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      axis.values.push_back(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (std::any_of(axis.values.begin(), axis.values.end(), [](const std::string& v) { return v.empty(); })) {
      throw ParseError("empty grid value in '" + spec + "'");
    }
    axes.push_back(std::move(axis));
  }
  return axes;
}

unsigned sweep_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HEUNLIE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      // ignore a malformed cap
    }
  }
  return n;
}

std::vector<std::string> run_sweep(const Options& base) {
  if (base.sweep_command == "sweep") throw InvalidParams("sweep cannot nest");
  const std::vector<Axis> axes = parse_grid(base.grid);
  std::size_t total = 1;
  for (const auto& ax : axes) total *= ax.values.size();

  std::vector<std::string> lines(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      Options o = base;
      o.command = base.sweep_command;
      o.grid.clear();
      Json point = Json::object();
      std::size_t rem = i;
      // the last axis varies fastest
      std::vector<std::size_t> idx(axes.size());
      for (std::size_t a = axes.size(); a-- > 0;) {
        idx[a] = rem % axes[a].values.size();
        rem /= axes[a].values.size();
      }
      Result r;
      try {
        for (std::size_t a = 0; a < axes.size(); ++a) {
          const std::string& v = axes[a].values[idx[a]];
          point[axes[a].key] = v;
          grid_setters().at(axes[a].key)(o, v);
        }
        r = guarded(o);
      } catch (const Error& e) {
        r.code = kBadParams;
        r.error = e.what();
      }
      Json line{{"index", i}, {"point", point}, {"exit", r.code}};
      if (r.code == kOk) {
        line["report"] = r.report;
      } else {
        line["error"] = r.error;
      }
      lines[i] = line.dump();
    }
  };
  const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(sweep_threads(), std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return lines;
}

// ---- argument parsing ----------------------------------------------------

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--a", o.a, "singular point a (a not in {0,1})");
  sub->add_option("--q", o.q, "accessory parameter");
  sub->add_option("--alpha", o.alpha);
  sub->add_option("--beta", o.beta);
  sub->add_option("--gamma", o.gamma);
  sub->add_option("--delta", o.delta);
  sub->add_option("--epsilon", o.epsilon);
  sub->add_option("--n", o.n, "2j for the exactly solvable operator, 0..64");
  sub->add_option("--j", o.j, "spin j (half-integer); overrides n/2 where a spin is used");
  sub->add_option("--N", o.N, "polynomial space degree bound (default n)");
  sub->add_option("--operator", o.op_kind, "auto|es|heun");
  sub->add_option("--expr", o.expr, "UEA expression for expand");
  sub->add_option("--K", o.K, "recurrence truncation");
  sub->add_option("--p", o.p, "Green summation bound (default sigma - rho)");
  sub->add_option("--s-eval", o.s_eval, "evaluation point of the dual variable s");
  sub->add_option("--c0", o.c0);
  sub->add_option("--c1", o.c1);
  sub->add_option("--A", o.A);
  sub->add_option("--B", o.B);
  sub->add_option("--E", o.E, "eigenvalue (default: ES constant term)");
  sub->add_option("--lambda", o.lambda, "real spectral argument of the SSF");
  sub->add_option("--sign", o.sign, "+|- selects G+ or G-");
  sub->add_option("--l", o.l, "recurrence offset l_j");
  sub->add_option("--rho", o.rho);
  sub->add_option("--sigma", o.sigma);
  sub->add_option("--tau", o.tau);
  sub->add_option("--ab", o.ab, "alpha_j beta_j override");
  sub->add_option("--output", o.output, "json|text");
  sub->add_option("--out", o.out, "write the report to FILE");
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (!o.out) {
    out << text;
    return;
  }
  std::ofstream f(*o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + *o.out + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + *o.out + "' failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Heun operators, sl(2) expansions, distributional solutions and Green kernels", "heunlie"};
  app.require_subcommand(1);
  // a repeated option overrides the earlier one, so defaults can be patched per call
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", std::string(HEUNLIE_VERSION));
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"analyze", "constraint, exponents, UEA coefficients and discrepancy table"},
      {"expand", "expand a UEA expression into a differential operator"},
      {"spectrum", "matrix of an operator on polynomials of degree <= N and its spectrum"},
      {"distsol", "weight expansion, recurrences, closed forms and residuals"},
      {"green", "Green kernel, K_p, Hilbert-Schmidt norm and trace"},
      {"ssf", "spectral shift function at lambda"},
      {"sweep", "run a command over a parameter grid (JSON lines)"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    if (std::string(name) == "sweep") {
      sub->add_option("--command", o.sweep_command, "command run at each grid point");
      sub->add_option("--grid", o.grid, "key=v1,v2,... (repeatable)")->take_all();
    }
    sub->callback([&o, n = std::string(name)] { o.command = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << HEUNLIE_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  }

  try {
    if (o.command == "sweep") {
      validate(o);
      std::string text;
      for (const auto& line : run_sweep(o)) text += line + '\n';
      emit(text, o, out);
      return kOk;
    }
    const Result r = guarded(o);
    if (r.code != kOk) {
      err << "error: " << r.error << '\n';
      return r.code;
    }
    emit(o.output == "json" ? r.report.dump(2) + '\n' : reports::to_text(r.report), o, out);
    return kOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadParams;
  }
}

}  // namespace heunlie::cli
