#include "qlid/qcore.hpp"

#include <cctype>
#include <string>

namespace qlid {

Scalar pow(const Scalar& base, int n) {
  if (n < 0) {
    if (base == 0) {
      throw DomainError("pow: zero base with negative exponent");
    }
    return pow(Scalar(1) / base, -n);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(n));
  Scalar result(num, den);
  result.canonicalize();
  return result;
}

Scalar parse_rational(std::string_view text) {
  std::string t(text);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t start = 0;
  while (start < t.size() && std::isspace(static_cast<unsigned char>(t[start]))) ++start;
  t = t.substr(start);
  if (t.empty()) {
    throw DomainError("parse_rational: empty input");
  }

  auto parse_int = [&](const std::string& digits) {
    mpz_class z;
    if (digits.empty() || z.set_str(digits, 10) != 0) {
      throw DomainError("parse_rational: malformed rational '" + std::string(text) + "'");
    }
    return z;
  };

  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const mpz_class num = parse_int(t.substr(0, slash));
    const mpz_class den = parse_int(t.substr(slash + 1));
    if (den == 0) {
      throw DomainError("parse_rational: zero denominator in '" + std::string(text) + "'");
    }
    Scalar r(num, den);
    r.canonicalize();
    return r;
  }
  if (const auto dot = t.find('.'); dot != std::string::npos) {
    std::string whole = t.substr(0, dot);
    const std::string frac = t.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole = whole.substr(1);
    }
    if (whole.empty()) whole = "0";
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw DomainError("parse_rational: malformed decimal '" + std::string(text) + "'");
      }
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = parse_int(whole) * scale + (frac.empty() ? mpz_class(0) : parse_int(frac));
    if (negative) num = -num;
    Scalar r(num, scale);
    r.canonicalize();
    return r;
  }
  return Scalar(parse_int(t));
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Scalar& value) { return value.get_d(); }

Scalar abs(const Scalar& value) { return value < 0 ? Scalar(-value) : value; }

// ---------------------------------------------------------------------------

QContext::QContext(Scalar s, int series_order, double float_tol)
    : s_(std::move(s)), series_order_(series_order), float_tol_(float_tol) {
  if (!(s_ > 0 && s_ < 1)) {
    throw DomainError("QContext: s = q^{1/4} must satisfy 0 < s < 1, got " + to_string(s_));
  }
  if (series_order_ < 1) {
    throw DomainError("QContext: series order must be positive");
  }
  if (!(float_tol_ > 0)) {
    throw DomainError("QContext: float tolerance must be positive");
  }
  sqrt_q_ = s_ * s_;
  q_ = sqrt_q_ * sqrt_q_;
  eta_ = (s_ + 1 / s_) / 2;
  gamma_ = 2 * s_ / (1 - q_);
}

QContext QContext::from_q(const Scalar& q, int series_order, double float_tol) {
  if (!(q > 0 && q < 1)) {
    throw DomainError("QContext::from_q: q must satisfy 0 < q < 1");
  }
  auto fourth_root = [](const mpz_class& z, mpz_class& out) {
    mpz_root(out.get_mpz_t(), z.get_mpz_t(), 4);
    mpz_class check;
    mpz_pow_ui(check.get_mpz_t(), out.get_mpz_t(), 4);
    return check == z;
  };
  mpz_class num, den;
  if (!fourth_root(q.get_num(), num) || !fourth_root(q.get_den(), den)) {
    throw DomainError("QContext::from_q: q = " + to_string(q) +
                      " is not the fourth power of a rational; pass s = q^{1/4} instead");
  }
  Scalar s(num, den);
  s.canonicalize();
  return QContext(s, series_order, float_tol);
}

// ---------------------------------------------------------------------------

Scalar q_number(int n, const Scalar& base) {
  if (n < 0) {
    throw DomainError("q_number: n must be non-negative");
  }
  // 1 + base + ... + base^{n-1}; also covers base == 1.
  Scalar sum = 0;
  Scalar power = 1;
  for (int k = 0; k < n; ++k) {
    sum += power;
    power *= base;
  }
  return sum;
}

Scalar q_factorial(int n, const Scalar& base) {
  if (n < 0) {
    throw DomainError("q_factorial: n must be non-negative");
  }
  Scalar product = 1;
  for (int k = 1; k <= n; ++k) {
    product *= q_number(k, base);
  }
  return product;
}

Scalar q_pochhammer(const Scalar& a, const Scalar& base, int n) {
  if (n < 0) {
    throw DomainError("q_pochhammer: n must be non-negative");
  }
  Scalar product = 1;
  Scalar term = a;
  for (int k = 0; k < n; ++k) {
    product *= 1 - term;
    term *= base;
  }
  return product;
}

Scalar q_binomial(int n, int k, const Scalar& base) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  return q_factorial(n, base) / (q_factorial(k, base) * q_factorial(n - k, base));
}

}  // namespace qlid
