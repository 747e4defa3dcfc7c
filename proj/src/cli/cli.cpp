#include "spherelab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "spherelab/analysis.hpp"
#include "spherelab/constructors.hpp"
#include "spherelab/io.hpp"
#include "spherelab/reduction.hpp"

namespace spherelab::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::vector<std::string> inputs;
  std::string output;
  std::string mode = "exact";
  std::string format = "json";
  double tol = 1e-7;
  std::uint64_t seed = 20240601;
  std::uint64_t samples = 0;  // 0: verb default
  int max_degree = 50;
};

struct ConstructFlags {
  bool automorphism = false, tensor = false, blaschke = false, linear = false, general = false;
  std::vector<std::string> a, v;
  std::string M, roots, q, basis = "orthonormal";
  int m = -1;
};

// ------------------------------------------------------------ flag values

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  return s;
}

ExactScalar scalar_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_scalar(trim(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<ExactScalar> vector_flag(const std::string& text, const std::string& flag) {
  std::vector<ExactScalar> v;
  for (const auto& part : split(text, ',')) v.push_back(scalar_flag(part, flag));
  if (v.empty()) throw UsageError(flag + ": empty vector");
  return v;
}

ExactMatrix matrix_flag(const std::string& text) {
  std::vector<std::vector<ExactScalar>> rows;
  for (const auto& r : split(text, ';')) rows.push_back(vector_flag(r, "--M"));
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw UsageError("--M: expected a square matrix, rows separated by ';'");
  ExactMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// "e1,...,en:c; ..." -> q
std::pair<int, ExactPolynomial> polynomial_flag(const std::string& text) {
  int n = -1;
  ExactPolynomial q;
  for (const auto& term : split(text, ';')) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw UsageError("--q: each term reads 'exponents:coefficient'");
    std::vector<int> e;
    for (const auto& x : split(term.substr(0, colon), ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(trim(x), &used);
        if (used != trim(x).size() || v < 0) throw std::invalid_argument(x);
        e.push_back(v);
      } catch (const std::exception&) {
        throw UsageError("--q: bad exponent '" + x + "'");
      }
    }
    if (n >= 0 && static_cast<int>(e.size()) != n) throw UsageError("--q: inconsistent number of variables");
    n = static_cast<int>(e.size());
    const ExactScalar c = scalar_flag(term.substr(colon + 1), "--q");
    if (!c.is_zero()) q[MultiIndex(e)] += c;
  }
  if (n < 1) throw UsageError("--q: empty polynomial");
  std::erase_if(q, [](const auto& t) { return t.second.is_zero(); });
  return {n, q};
}

// ------------------------------------------------------------ report pieces

Json complex_json(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

Json point_json(const std::vector<std::complex<double>>& z) {
  Json j = Json::array();
  for (const auto& c : z) j.push_back(complex_json(c));
  return j;
}

Json signature_json(const SignatureTriple& s) {
  Json j;
  j["positive"] = s.positive;
  j["negative"] = s.negative;
  j["zero"] = s.zero;
  return j;
}

Json negative_json(const NegativeDirection& w) {
  Json j;
  j["value"] = to_string(w.value);
  j["coordinates"] = Json::array();
  for (const auto& [a, c] : w.coords) {
    Json e;
    e["alpha"] = io::index_json(a);
    e["value"] = to_string(c);
    j["coordinates"].push_back(std::move(e));
  }
  return j;
}

Json psd_json(const PsdCheck& p) {
  Json j;
  j["psd"] = p.psd;
  if (p.witness) j["witness"] = negative_json(*p.witness);
  return j;
}

Json denominator_json(const DenominatorReport& r) {
  Json j;
  j["exact"] = r.exact;
  j["valid"] = r.valid;
  j["min_abs"] = r.min_abs;
  if (!r.valid) j["witness"] = point_json(r.witness);
  j["bounds"] = Json::array();
  for (const auto& b : r.bounds) {
    Json e;
    e["j"] = b.j;
    e["max_abs"] = b.max_abs;
    e["bound"] = b.bound;
    e["margin"] = b.bound - b.max_abs;
    e["holds"] = b.holds;
    if (!b.holds) e["witness"] = point_json(b.witness);
    j["bounds"].push_back(std::move(e));
  }
  j["bounds_hold"] = r.bounds_hold;
  return j;
}

Json blocks_json(const std::vector<std::pair<int, int>>& blocks) {
  Json j = Json::array();
  for (const auto& [a, b] : blocks) j.push_back(Json::array({a, b}));
  return j;
}

Json map_facts(const SphereMapForm& f, const Common& c) {
  Json j;
  j["n"] = f.gram.n;
  j["N"] = f.gram.rank;
  j["deg_p"] = f.d;
  j["deg_q"] = f.k;
  j["nu"] = f.nu;
  if (c.mode == "float") {
    const auto fs = signature_float(hermitian_form(f));
    j["signature"] = fs.triple ? signature_json(*fs.triple) : Json("indeterminate");
  } else {
    j["signature"] = signature_json(f.signature);
  }
  j["quotient_nonzero"] = !f.quotient.is_zero();
  j["quotient"] = io::form_to_json(f.quotient)["entries"];
  return j;
}

Json gap_json(const GapReport& g) {
  Json j;
  j["all_hold"] = g.all_hold;
  j["checked"] = g.identities.size();
  j["nontrivial"] = std::count_if(g.identities.begin(), g.identities.end(), [](const auto& i) { return !i.trivial(); });
  j["failing_gaps"] = g.failing_gaps;
  return j;
}

SamplingOptions sampling(const Common& c) {
  SamplingOptions o;
  o.seed = c.seed;
  o.tol = c.tol;
  if (c.samples > 0) o.samples = c.samples;
  return o;
}

Json report(const std::string& verb) {
  Json j;
  j["tool"] = "spherelab";
  j["version"] = kVersion;
  j["convention"] = kConvention;
  j["verb"] = verb;
  j["status"] = "fail";
  j["diagnostics"] = Json::object();
  return j;
}

const std::string& single_input(const Common& c) {
  if (c.inputs.size() != 1) throw UsageError("exactly one --input is required");
  return c.inputs.front();
}

io::MapInput load_map(const Common& c) { return io::parse_map(io::read_json_file(single_input(c))); }

// Verifies or fills the report with the failure and returns nothing.
std::optional<SphereMapForm> verify_into(const io::MapInput& in, const Common& c, Json& d) {
  const auto v = verify_sphere_map(in.gram, in.den, sampling(c));
  d["verification"] = to_string(v.status);
  if (v.denominator) d["denominator"] = denominator_json(*v.denominator);
  if (v.ok()) return v.map;
  d["message"] = v.message;
  if (!v.witness.empty()) {
    d["witness"] = point_json(v.witness);
    d["witness_value"] = v.witness_value;
  }
  if (!v.residual_blocks.empty()) d["residual_blocks"] = blocks_json(v.residual_blocks);
  return std::nullopt;
}

// ------------------------------------------------------------ verbs

Json do_verify(const Common& c) {
  Json r = report("verify");
  Json& d = r["diagnostics"];
  const auto in = load_map(c);
  const auto gaps = gap_identities(in.gram, in.den);
  const auto f = verify_into(in, c, d);
  d["gap_identities"] = gap_json(gaps);
  if (f) {
    d["map"] = map_facts(*f, c);
    d["final"] = is_final(*f);
  }
  r["status"] = f && gaps.all_hold ? "pass" : "fail";
  return r;
}

Json do_reduce(const Common& c) {
  Json r = report("reduce");
  Json& d = r["diagnostics"];
  const auto in = load_map(c);
  const auto f = verify_into(in, c, d);
  if (!f) return r;
  const Reduction red = reduce_to_final(*f);
  d["steps"] = red.steps();
  const SphereMapForm& t = red.terminal();
  Json term = map_facts(t, c);
  if (t.k == 0) term["gram_is_norm_power"] = t.gram.G == norm_power(t.gram.n, t.d);
  d["terminal"] = std::move(term);
  const auto cd = canonical_data(t);
  Json can;
  can["m"] = cd.m;
  can["k"] = cd.k;
  can["certificate"] = cd.certificate;
  can["bottom_invertible"] = cd.bottom_invertible;
  if (!cd.diagnostic.empty()) can["diagnostic"] = cd.diagnostic;
  can["bottom"] = io::form_to_json(cd.bottom)["entries"];
  d["canonical"] = std::move(can);
  r["chain"] = io::chain_to_json(red);
  if (!c.output.empty()) io::write_json_file(c.output, r["chain"]);
  r["status"] = cd.certificate ? "pass" : "fail";
  return r;
}

Json do_construct(const Common& c, const ConstructFlags& k) {
  Json r = report("construct");
  Json& d = r["diagnostics"];
  const int kinds = k.automorphism + k.tensor + k.blaschke + k.linear + k.general;
  if (kinds != 1)
    throw UsageError("choose exactly one of --automorphism, --tensor-product, --blaschke, --linear-denom, --general");
  const SamplingOptions opt = sampling(c);
  std::optional<SphereMapForm> out;
  auto need_m = [&] {
    if (k.m < 0) throw UsageError("--m is required");
    return k.m;
  };
  if (k.automorphism) {
    d["kind"] = "automorphism";
    if (k.a.size() != 1) throw UsageError("--automorphism takes one --a");
    out = automorphism_form(vector_flag(k.a[0], "--a"));
  } else if (k.tensor) {
    d["kind"] = "tensor-product";
    std::vector<SphereMapForm> maps;
    for (const auto& a : k.a) maps.push_back(automorphism_form(vector_flag(a, "--a")));
    for (const auto& path : c.inputs) {
      const auto in = io::parse_map(io::read_json_file(path));
      maps.push_back(verified(in.gram, in.den, opt));
    }
    if (maps.empty()) throw UsageError("--tensor-product needs factors (--a or --input)");
    for (const auto& m : maps)
      if (m.gram.n != maps[0].gram.n) throw UsageError("tensor factors must share n");
    const auto tp = tensor_product(maps, opt);
    if (tp.expansion) {
      Json e;
      e["K"] = maps.size();
      e["b0_zero"] = tp.expansion->b0_zero;
      e["b1_closed_form"] = tp.expansion->b1_closed_form;
      e["bK_closed_form"] = tp.expansion->bK_closed_form;
      e["expansion_matches"] = tp.expansion->expansion_matches;
      d["expansion"] = std::move(e);
    }
    out = tp.map;
  } else if (k.blaschke) {
    d["kind"] = "blaschke";
    std::vector<ExactScalar> roots;
    if (!k.roots.empty()) roots = vector_flag(k.roots, "--roots");
    out = blaschke_1d(need_m(), roots, opt);
  } else if (k.linear) {
    d["kind"] = "linear-denom";
    if (k.a.size() != 1 || k.M.empty()) throw UsageError("--linear-denom needs one --a and --M");
    if (k.basis != "orthonormal" && k.basis != "monomial") throw UsageError("--basis is orthonormal or monomial");
    const auto res = construct_linear_denom(vector_flag(k.a[0], "--a"), need_m(), matrix_flag(k.M),
                                            k.basis == "monomial" ? VBasis::monomial : VBasis::orthonormal, opt);
    d["excess"] = io::form_to_json(res.excess)["entries"];
    d["excess_psd"] = psd_json(res.excess_psd);
    if (res.annulus) d["annulus"] = *res.annulus;
    d["top_routes_agree"] = res.top_routes_agree;
    if (!res.message.empty()) d["message"] = res.message;
    out = res.map;
  } else {
    d["kind"] = "general";
    if (k.q.empty() || k.v.empty()) throw UsageError("--general needs --q and --v");
    auto [n, q] = polynomial_flag(k.q);
    std::vector<std::vector<ExactScalar>> v;
    for (const auto& s : k.v) v.push_back(vector_flag(s, "--v"));
    const auto res = construct_general(make_denominator(n, q), need_m(), v, opt);
    d["excess"] = io::form_to_json(res.excess)["entries"];
    d["excess_psd"] = psd_json(res.excess_psd);
    if (!res.message.empty()) d["message"] = res.message;
    out = res.map;
  }
  if (!out) {
    r["status"] = "rejected";
    return r;
  }
  d["map"] = map_facts(*out, c);
  d["gap_identities"] = gap_json(gap_identities(*out));
  r["map"] = io::map_to_json(*out);
  if (!c.output.empty()) io::write_json_file(c.output, r["map"]);
  r["status"] = "pass";
  return r;
}

Json stabilize_one(const HermitianForm& form, const Common& c) {
  const auto s = quillen_degree(form, c.max_degree, c.mode == "float" ? Arithmetic::floating : Arithmetic::exact);
  Json j;
  j["minimal_d"] = s.minimal_d ? Json(*s.minimal_d) : Json(nullptr);
  j["checked_range"] = s.checked_range;
  j["trajectory"] = s.trajectory;
  if (s.witness) j["witness"] = negative_json(*s.witness);
  return j;
}

Json do_stabilize(const Common& c, const std::string& alpha_list) {
  Json r = report("stabilize");
  Json& d = r["diagnostics"];
  if (alpha_list.empty()) {
    const auto form = io::parse_form(io::read_json_file(single_input(c)));
    d = stabilize_one(form, c);
    r["status"] = d["minimal_d"].is_null() ? "fail" : "pass";
    return r;
  }
  if (!c.inputs.empty()) throw UsageError("--alpha-sq and --input are exclusive");
  bool ok = true;
  d["sweep"] = Json::array();
  for (const auto& part : split(alpha_list, ',')) {
    const ExactScalar a = scalar_flag(part, "--alpha-sq");
    if (!a.is_real()) throw UsageError("--alpha-sq: values must be real");
    Json row;
    row["alpha_sq"] = to_string(a.re());
    row["bound"] = model_family_bound(a.re());
    Json s = stabilize_one(model_family_form(a.re()), c);
    row["minimal_d"] = s["minimal_d"];
    row["checked_range"] = s["checked_range"];
    const bool dominated = !s["minimal_d"].is_null() && s["minimal_d"].get<int>() <= row["bound"].get<int>();
    row["bound_dominates"] = dominated;
    ok = ok && dominated;
    d["sweep"].push_back(std::move(row));
  }
  r["status"] = ok ? "pass" : "fail";
  return r;
}

Json do_invariance(const Common& c) {
  Json r = report("invariance");
  Json& d = r["diagnostics"];
  const auto in = load_map(c);
  const auto f = verify_into(in, c, d);
  if (!f) return r;
  d["input_circle_invariant"] = circle_invariant(hermitian_form(*f));
  const SphereMapForm t = reduce_to_final(*f).terminal();
  const bool inv = circle_invariant(hermitian_form(t));
  d["final_circle_invariant"] = inv;
  d["final_deg_p"] = t.d;
  d["final_deg_q"] = t.k;
  std::string cls = "not-invariant";
  if (inv) {
    if (t.d == t.k)
      cls = "equal-degree";
    else if (t.k == 0 && t.gram.G == norm_power(t.gram.n, t.d))
      cls = "tensor-power";
    else
      cls = "counterexample";
  }
  d["classification"] = cls;
  r["status"] = cls == "counterexample" ? "fail" : "pass";
  return r;
}

Json do_count(int n, int dd) {
  Json r = report("count");
  Json& d = r["diagnostics"];
  if (n < 1 || dd < 0) throw UsageError("count needs --n >= 1 and --d >= 0");
  d["n"] = n;
  d["d"] = dd;
  d["K"] = equation_count(n, dd).get_str();
  d["D"] = dim_V(n, dd);
  d["polynomial_degree"] = 2 * n - 1;
  d["polynomial_degree_check"] = equation_count_degree_check(n, std::max(2 * n, 10));
  r["status"] = "pass";
  return r;
}

Json do_volume(const Common& c) {
  Json r = report("volume");
  Json& d = r["diagnostics"];
  const auto in = load_map(c);
  const ExplicitMap f = in.explicit_map ? *in.explicit_map : explicit_from_gram(in.gram);
  if (in.den.degree() != 0) throw UsageError("volume needs a polynomial map (q constant)");
  const auto v = volume_estimate(f, c.samples > 0 ? c.samples : 1000000, c.seed);
  d["value"] = v.value;
  d["standard_error"] = v.standard_error;
  d["samples"] = v.samples;
  d["seed"] = v.seed;
  d["bound"] = v.bound;
  d["gap"] = v.gap;
  r["status"] = v.value - 2 * v.standard_error <= v.bound ? "pass" : "fail";
  return r;
}

Json do_bounds(const Common& c) {
  Json r = report("bounds");
  Json& d = r["diagnostics"];
  const auto in = load_map(c);
  bool ok = true;
  if (in.n >= 2) {
    const auto b = degree_bound_check(in.n, static_cast<int>(in.gram.rank), in.gram.d);
    Json j;
    j["N"] = b.N;
    j["d"] = b.d;
    j["bound"] = to_string(b.bound);
    j["holds"] = b.holds;
    j["conjectured"] = to_string(b.conjectured);
    j["within_conjecture"] = b.within_conjecture;
    j["at_conjecture"] = b.at_conjecture;
    d["degree_bound"] = std::move(j);
    ok = b.holds;
  } else {
    d["degree_bound"] = "not applicable for n = 1";
  }
  const auto v = denominator_valid(in.den, sampling(c));
  d["denominator"] = denominator_json(v.report);
  if (std::isfinite(v.min_margin)) d["min_margin"] = v.min_margin;
  d["proof"] = v.report.exact;
  r["status"] = ok && v.pass ? "pass" : "fail";
  return r;
}

// ------------------------------------------------------------ output

std::string value_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const Json& rep, const Common& c, std::ostream& out) {
  if (c.format == "json") {
    out << rep.dump(2) << '\n';
    return;
  }
  if (c.format == "csv") {
    const Json& sweep = rep["diagnostics"]["sweep"];
    out << "alpha_sq,minimal_d,bound,bound_dominates\n";
    for (const auto& row : sweep)
      out << value_text(row["alpha_sq"]) << ',' << value_text(row["minimal_d"]) << ',' << value_text(row["bound"]) << ','
          << value_text(row["bound_dominates"]) << '\n';
    return;
  }
  const Json flat = rep.flatten();
  for (const auto& [k, v] : flat.items()) out << k.substr(1) << ": " << value_text(v) << '\n';
}

void add_common(CLI::App* sub, Common& c, bool many_inputs = false) {
  auto* in = sub->add_option("--input", c.inputs, "Input file");
  if (!many_inputs) in->expected(1);
  sub->add_option("--output", c.output, "Output file");
  sub->add_option("--mode", c.mode, "Arithmetic")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--tol", c.tol, "Tolerance for vanishing");
  sub->add_option("--seed", c.seed, "Sampling seed");
  sub->add_option("--samples", c.samples, "Sample count");
  sub->add_option("--max-degree", c.max_degree, "Search bound");
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "text", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational sphere map toolkit", "spherelab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common c;
  ConstructFlags k;
  int cn = -1, cd = -1;
  std::string alpha;

  auto* verify = app.add_subcommand("verify", "Verify a map file");
  auto* reduce = app.add_subcommand("reduce", "Reduce to a final descendant");
  auto* construct = app.add_subcommand("construct", "Build a sphere map");
  auto* stabilize = app.add_subcommand("stabilize", "Positivity stabilization degree");
  auto* invariance = app.add_subcommand("invariance", "Circle invariance of the final descendant");
  auto* count = app.add_subcommand("count", "Number of sphere-map equations");
  auto* volume = app.add_subcommand("volume", "Image volume estimate");
  auto* bounds = app.add_subcommand("bounds", "Degree and denominator bounds");
  for (auto* s : {verify, reduce, stabilize, invariance, volume, bounds}) add_common(s, c);
  add_common(construct, c, true);
  add_common(count, c);

  construct->add_flag("--automorphism", k.automorphism, "Ball automorphism at --a");
  construct->add_flag("--tensor-product", k.tensor, "Tensor product of automorphisms (--a ...) and maps (--input ...)");
  construct->add_flag("--blaschke", k.blaschke, "Finite Blaschke product, n = 1");
  construct->add_flag("--linear-denom", k.linear, "Linear denominator 1 + <z, a> with matrix --M");
  construct->add_flag("--general", k.general, "Denominator --q with vectors --v");
  construct->add_option("--a", k.a, "Point, comma separated (repeatable for tensor products)");
  construct->add_option("--m", k.m, "Degree m");
  construct->add_option("--M", k.M, "Matrix, rows separated by ';'");
  construct->add_option("--basis", k.basis, "orthonormal or monomial");
  construct->add_option("--roots", k.roots, "Blaschke roots, comma separated");
  construct->add_option("--q", k.q, "Denominator terms 'e1,...,en:c' separated by ';'");
  construct->add_option("--v", k.v, "Vector v_j, comma separated (repeat in order j = 0..k)");
  stabilize->add_option("--alpha-sq", alpha, "Sweep of |alpha|^2 values for the model family");
  count->add_option("--n", cn, "Dimension")->required();
  count->add_option("--d", cd, "Degree")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    Json rep;
    if (verify->parsed()) rep = do_verify(c);
    else if (reduce->parsed()) rep = do_reduce(c);
    else if (construct->parsed()) rep = do_construct(c, k);
    else if (stabilize->parsed()) rep = do_stabilize(c, alpha);
    else if (invariance->parsed()) rep = do_invariance(c);
    else if (count->parsed()) rep = do_count(cn, cd);
    else if (volume->parsed()) rep = do_volume(c);
    else rep = do_bounds(c);
    if (c.format == "csv" && !rep["diagnostics"].contains("sweep"))
      throw UsageError("--format csv is only available for stabilize --alpha-sq");
    emit(rep, c, out);
    return rep["status"] == "pass" ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const io::SchemaError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace spherelab::cli
