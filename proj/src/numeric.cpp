#include "grasshadri/numeric.hpp"

#include "grasshadri/error.hpp"

#include <cctype>

namespace grasshadri {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::SemistableInput: return "SemistableInput";
    case ErrorCode::RankNotAligned: return "RankNotAligned";
    case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZetaUnavailable: return "ZetaUnavailable";
    case ErrorCode::BelowThetaBound: return "BelowThetaBound";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::HypothesisUnavailable: return "HypothesisUnavailable";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::InvalidInput, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational slope_of(const Integer& degree, Rank rank) {
  return make_rational(degree, Integer(static_cast<long>(rank)));
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from_literal(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorCode::InvalidInput,
                "not an integer: '" + std::string(text) + "'");
  }
  return integer_from_literal(text);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::InvalidInput,
                "not a rational: '" + std::string(text) + "'");
  }
  const Integer d = integer_from_literal(den);
  if (d == 0) {
    throw Error(ErrorCode::InvalidInput,
                "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(integer_from_literal(num), d);
}

Integer binomial(Rank n, Rank k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace grasshadri
