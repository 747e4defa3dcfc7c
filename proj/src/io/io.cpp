#include "spherelab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace spherelab::io {

namespace {

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

int int_field(const Json& j, const std::string& key, const std::string& path, int lo) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer() || v.get<long long>() < lo)
    throw SchemaError(at(path, key), "expected an integer >= " + std::to_string(lo));
  return v.get<int>();
}

MultiIndex parse_index(const Json& j, int n, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " exponents");
  std::vector<int> e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<long long>() < 0)
      throw SchemaError(at(path, i), "exponent must be a non-negative integer");
    e.push_back(j[i].get<int>());
  }
  return MultiIndex(std::move(e));
}

Rational parse_number(const Json& j, const std::string& path, bool allow_float) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (allow_float && j.is_number()) return Rational(j.get<double>());
  throw SchemaError(path, allow_float ? "expected a rational string or a number" : "expected a \"p/q\" string");
}

ExactScalar parse_re_im(const Json& j, const std::string& path, bool allow_float) {
  const Rational re = parse_number(field(j, "re", path), at(path, "re"), allow_float);
  Rational im = 0;
  if (j.contains("im")) im = parse_number(j["im"], at(path, "im"), allow_float);
  return {re, im};
}

HermitianForm parse_entries(const Json& entries, int n, bool allow_float, const std::string& path) {
  if (!entries.is_array()) throw SchemaError(path, "expected an array");
  std::map<HermitianForm::Key, ExactScalar> seen;
  HermitianForm r(n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string p = at(path, i);
    const MultiIndex a = parse_index(field(entries[i], "alpha", p), n, at(p, "alpha"));
    const MultiIndex b = parse_index(field(entries[i], "beta", p), n, at(p, "beta"));
    const ExactScalar c = parse_re_im(entries[i], p, allow_float);
    if (a == b && !c.is_real()) throw SchemaError(p, "diagonal entry must be real");
    const ExactScalar canon = a <= b ? c : c.conj();
    const HermitianForm::Key key = a <= b ? HermitianForm::Key{a, b} : HermitianForm::Key{b, a};
    auto [it, fresh] = seen.emplace(key, canon);
    if (!fresh) {
      if (!(it->second == canon)) throw SchemaError(p, "conflicts with an earlier entry for the same pair");
      continue;
    }
    if (!c.is_zero()) r.set(a, b, c);
  }
  return r;
}

std::string rational_text(const Rational& q) { return to_string(q); }

Json entry_json(const MultiIndex& a, const MultiIndex& b, const ExactScalar& c) {
  Json e;
  e["alpha"] = index_json(a);
  e["beta"] = index_json(b);
  e["re"] = rational_text(c.re());
  if (!c.is_real()) e["im"] = rational_text(c.im());
  return e;
}

}  // namespace

Json index_json(const MultiIndex& a) {
  Json j = Json::array();
  for (int e : a.exponents()) j.push_back(e);
  return j;
}

std::string scalar_text(const ExactScalar& x) { return to_string(x); }

HermitianForm parse_form(const Json& j) {
  const int n = int_field(j, "n", "", 1);
  std::string mode = "exact";
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw SchemaError("/mode", "expected \"exact\" or \"float\"");
    mode = j["mode"].get<std::string>();
    if (mode != "exact" && mode != "float") throw SchemaError("/mode", "expected \"exact\" or \"float\"");
  }
  return parse_entries(field(j, "entries", ""), n, mode == "float", "/entries");
}

Json form_to_json(const HermitianForm& r) {
  Json j;
  j["n"] = r.n();
  j["mode"] = "exact";
  j["entries"] = Json::array();
  for (const auto& [k, v] : r.entries())
    if (k.first <= k.second) j["entries"].push_back(entry_json(k.first, k.second, v));
  return j;
}

MapInput parse_map(const Json& j) {
  MapInput in;
  in.n = int_field(j, "n", "", 1);
  const int n = in.n;
  const Json& num = field(j, "numerator", "");
  const Json& mode = field(num, "mode", "/numerator");
  if (!mode.is_string()) throw SchemaError("/numerator/mode", "expected \"gram\" or \"explicit\"");
  HermitianForm G(n);
  if (mode == "gram") {
    G = parse_entries(field(num, "entries", "/numerator"), n, false, "/numerator/entries");
  } else if (mode == "explicit") {
    const int N = int_field(num, "N", "/numerator", 1);
    const Json& coeffs = field(num, "coefficients", "/numerator");
    if (!coeffs.is_array()) throw SchemaError("/numerator/coefficients", "expected an array");
    std::vector<ExactPolynomial> comps(static_cast<std::size_t>(N));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const std::string p = at("/numerator/coefficients", i);
      const MultiIndex a = parse_index(field(coeffs[i], "alpha", p), n, at(p, "alpha"));
      const Json& vec = field(coeffs[i], "vector", p);
      if (!vec.is_array() || static_cast<int>(vec.size()) != N)
        throw SchemaError(at(p, "vector"), "expected " + std::to_string(N) + " components");
      for (std::size_t c = 0; c < vec.size(); ++c) {
        const std::string pc = at(at(p, "vector"), c);
        if (!vec[c].is_array() || vec[c].size() != 2) throw SchemaError(pc, "expected [re, im]");
        const ExactScalar v(parse_number(vec[c][0], at(pc, 0), false), parse_number(vec[c][1], at(pc, 1), false));
        if (!v.is_zero()) comps[c][a] += v;
      }
    }
    in.explicit_map = explicit_exact(n, comps);
    G = gram_from_explicit(*in.explicit_map).G;
  } else {
    throw SchemaError("/numerator/mode", "expected \"gram\" or \"explicit\"");
  }
  try {
    in.gram = make_gram_map(std::move(G));
  } catch (const std::domain_error& e) {
    throw SchemaError("/numerator", e.what());
  }

  ExactPolynomial q;
  if (j.contains("denominator")) {
    const Json& den = j["denominator"];
    if (!den.is_array()) throw SchemaError("/denominator", "expected an array");
    for (std::size_t i = 0; i < den.size(); ++i) {
      const std::string p = at("/denominator", i);
      const MultiIndex a = parse_index(field(den[i], "alpha", p), n, at(p, "alpha"));
      const ExactScalar c = parse_re_im(den[i], p, false);
      if (!c.is_zero()) q[a] += c;
    }
    std::erase_if(q, [](const auto& e) { return e.second.is_zero(); });
  } else {
    q.emplace(MultiIndex::zero(n), ExactScalar(1));
  }
  try {
    in.den = make_denominator(n, std::move(q));
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/denominator", e.what());
  }
  if (in.explicit_map) {
    in.explicit_map->den = to_float(in.den.coeffs);
    in.explicit_map->exact_den = in.den.coeffs;
  }
  return in;
}

Json map_to_json(const GramMap& g, const Denominator& q) {
  Json j;
  j["n"] = g.n;
  Json num;
  num["mode"] = "gram";
  num["entries"] = Json::array();
  for (const auto& [k, v] : g.G.entries())
    if (k.first <= k.second) num["entries"].push_back(entry_json(k.first, k.second, v));
  j["numerator"] = std::move(num);
  j["denominator"] = Json::array();
  for (const auto& [a, c] : q.coeffs) {
    Json e;
    e["alpha"] = index_json(a);
    e["re"] = rational_text(c.re());
    if (!c.is_real()) e["im"] = rational_text(c.im());
    j["denominator"].push_back(std::move(e));
  }
  return j;
}

Json map_to_json(const SphereMapForm& f) { return map_to_json(f.gram, f.den); }

Json chain_to_json(const Reduction& red) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < red.chain.size(); ++i) {
    Json step;
    step["map"] = map_to_json(red.chain[i]);
    step["S"] = Json::array();
    if (i > 0)
      for (const auto& a : red.sets[i - 1]) step["S"].push_back(index_json(a));
    arr.push_back(std::move(step));
  }
  return arr;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_text(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path, e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace spherelab::io
