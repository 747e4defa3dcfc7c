#include "spherelab/unit_circle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace spherelab {

namespace {

using QPoly = std::vector<Rational>;  // coefficient of t^j at index j

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<long>(j));
  trim(d);
  return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  const int db = deg(b);
  if (db < 0) throw std::domain_error("division by zero polynomial");
  while (deg(a) >= db) {
    const Rational f = a.back() / b.back();
    const int shift = deg(a) - db;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= f * b[static_cast<std::size_t>(j)];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at_infinity(const QPoly& p, bool positive) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (!positive && deg(p) % 2 == 1) s = -s;
  return s;
}

int variations(const std::vector<QPoly>& seq, bool positive) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at_infinity(p, positive);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int distinct_real_roots(const QPoly& g) {
  if (deg(g) <= 0) return 0;
  std::vector<QPoly> seq{g, derivative(g)};
  while (!seq.back().empty()) {
    QPoly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  return variations(seq, false) - variations(seq, true);
}

using CPoly = std::vector<ExactScalar>;

CPoly cmul(const CPoly& a, const CPoly& b) {
  CPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

bool has_root_on_unit_circle(const std::vector<ExactScalar>& coeffs) {
  CPoly q = coeffs;
  while (!q.empty() && q.back().is_zero()) q.pop_back();
  if (q.empty()) throw std::invalid_argument("zero polynomial has roots everywhere");
  const std::size_t k = q.size() - 1;
  if (k == 0) return false;

  ExactScalar at_one;
  for (const auto& c : q) at_one += c;
  if (at_one.is_zero()) return true;

  const CPoly minus{ExactScalar(Rational(0), Rational(-1)), ExactScalar(1)};  // t - i
  const CPoly plus{ExactScalar(Rational(0), Rational(1)), ExactScalar(1)};    // t + i
  std::vector<CPoly> pow_minus{{ExactScalar(1)}}, pow_plus{{ExactScalar(1)}};
  for (std::size_t j = 0; j < k; ++j) {
    pow_minus.push_back(cmul(pow_minus.back(), minus));
    pow_plus.push_back(cmul(pow_plus.back(), plus));
  }
  CPoly big(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    const CPoly term = cmul(pow_minus[j], pow_plus[k - j]);
    for (std::size_t t = 0; t < term.size(); ++t) big[t] += q[j] * term[t];
  }
  QPoly re, im;
  for (const auto& c : big) {
    re.push_back(c.re());
    im.push_back(c.im());
  }
  return distinct_real_roots(gcd(re, im)) > 0;
}

std::optional<std::complex<double>> root_nearest_unit_circle(const std::vector<ExactScalar>& coeffs) {
  std::vector<std::complex<double>> c;
  for (const auto& x : coeffs) c.push_back(x.to_complex());
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) return std::nullopt;
  const auto k = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(k, k);
  for (Eigen::Index i = 1; i < k; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < k; ++i) comp(i, k - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::complex<double> best = es.eigenvalues()(0);
  for (Eigen::Index i = 1; i < k; ++i) {
    const auto r = es.eigenvalues()(i);
    if (std::abs(std::abs(r) - 1.0) < std::abs(std::abs(best) - 1.0)) best = r;
  }
  return best;
}

}  // namespace spherelab
