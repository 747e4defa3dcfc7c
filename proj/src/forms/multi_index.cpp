#include "spherelab/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace spherelab {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
    degree_ += e;
  }
}

MultiIndex MultiIndex::unit(int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.n() != b.n()) throw std::invalid_argument("multi-index dimension mismatch");
  std::vector<int> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
  return MultiIndex(std::move(e));
}

bool MultiIndex::divisible_by(const MultiIndex& b) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < b.exps_[i]) return false;
  return true;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exps_[i];
  return MultiIndex(std::move(e));
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  // larger leading exponent sorts first
  for (std::size_t i = 0; i < a.exps_.size() && i < b.exps_.size(); ++i)
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  return a.exps_.size() <=> b.exps_.size();
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "z" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::size_t dim_V(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("dim_V requires n >= 1 and d >= 0");
  return binomial(d + n - 1, n - 1).get_ui();
}

namespace {

void fill(int var, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  const auto n = static_cast<int>(cur.size());
  if (var == n - 1) {
    cur[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(var)] = e;
    fill(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_degree(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("enumerate_degree requires n >= 1 and d >= 0");
  std::vector<MultiIndex> out;
  out.reserve(dim_V(n, d));
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  fill(0, d, cur, out);
  return out;
}

mpz_class multinomial(const MultiIndex& alpha) {
  mpz_class r = 1;
  long running = 0;
  for (int e : alpha.exponents()) {
    running += e;
    r *= binomial(running, e);
  }
  return r;
}

}  // namespace spherelab
