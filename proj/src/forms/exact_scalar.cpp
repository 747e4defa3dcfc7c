#include "spherelab/exact_scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace spherelab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return Rational(sqrt(num), sqrt(den));
}

ExactScalar ExactScalar::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero scalar");
  return {re_ / n, -im_ / n};
}

ExactScalar parse_scalar(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text.back() != 'i') return ExactScalar(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) -> Rational {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_part(body)};
  return {parse_rational(body.substr(0, split)), imag_part(body.substr(split))};
}

std::string to_string(const ExactScalar& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im = to_string(x.im());
  if (sgn(x.re()) == 0) return im + "i";
  return to_string(x.re()) + (sgn(x.im()) > 0 ? "+" : "") + im + "i";
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << to_string(x); }

}  // namespace spherelab
