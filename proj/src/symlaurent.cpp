#include "qlid/symlaurent.hpp"

#include <algorithm>

namespace qlid {

namespace {

// Full Laurent coefficient array, index k + d holds the z^k coefficient.
std::vector<Scalar> to_laurent(std::span<const Scalar> c) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<Scalar> out(2 * d + 1);
  for (int k = 0; k <= d; ++k) {
    out[d + k] = c[k];
    out[d - k] = c[k];
  }
  return out;
}

Scalar binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

std::vector<SymPoly> basis_table(Basis basis, int degree, const QContext& ctx) {
  const Family family = basis == Basis::monomial ? Family::monomial
                        : basis == Basis::rho    ? Family::rho
                                                 : Family::hermite;
  std::vector<SymPoly> table;
  table.reserve(static_cast<std::size_t>(std::max(degree + 1, 0)));
  for (int n = 0; n <= degree; ++n) table.push_back(special_poly(ctx, family, n));
  return table;
}

}  // namespace

SymPoly::SymPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

SymPoly SymPoly::constant(const Scalar& c) { return SymPoly(std::vector<Scalar>{c}); }

SymPoly SymPoly::e(int k) {
  if (k < 0) throw DomainError("SymPoly::e: negative index");
  if (k == 0) return constant(2);
  std::vector<Scalar> c(static_cast<std::size_t>(k) + 1);
  c[k] = 1;
  return SymPoly(std::move(c));
}

SymPoly SymPoly::x() { return SymPoly(std::vector<Scalar>{0, Scalar(1, 2)}); }

Scalar SymPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void SymPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
  trim();
  return *this;
}

SymPoly& SymPoly::operator*=(const Scalar& factor) {
  if (factor == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= factor;
  return *this;
}

SymPoly& SymPoly::operator*=(const SymPoly& other) {
  if (is_zero() || other.is_zero()) {
    c_.clear();
    return *this;
  }
  const int da = degree();
  const int db = other.degree();
  const auto la = to_laurent(c_);
  const auto lb = to_laurent(other.c_);
  std::vector<Scalar> result(static_cast<std::size_t>(da + db) + 1);
  // Only non-negative output exponents are needed.
  for (int i = -da; i <= da; ++i) {
    const Scalar& ai = la[i + da];
    if (ai == 0) continue;
    for (int j = std::max(-db, -i); j <= db; ++j) {
      result[i + j] += ai * lb[j + db];
    }
  }
  c_ = std::move(result);
  trim();
  return *this;
}

SymPoly SymPoly::reflected() const {
  SymPoly out = *this;
  for (std::size_t k = 1; k < out.c_.size(); k += 2) out.c_[k] = -out.c_[k];
  return out;
}

Scalar SymPoly::max_abs_coeff() const {
  Scalar best = 0;
  for (const auto& c : c_) best = std::max(best, abs(c));
  return best;
}

// ---------------------------------------------------------------------------

std::vector<Scalar> e_values(int degree, const SpecialPoint& pt, const QContext& ctx) {
  std::vector<Scalar> e(static_cast<std::size_t>(std::max(degree, 0)) + 1);
  e[0] = 2;
  switch (pt.tag) {
    case SpecialPoint::Tag::zero: {
      static const int kCycle[4] = {2, 0, -2, 0};
      for (int k = 1; k <= degree; ++k) e[k] = kCycle[k % 4];
      break;
    }
    case SpecialPoint::Tag::eta:
    case SpecialPoint::Tag::minus_eta: {
      const Scalar inv = 1 / ctx.s();
      Scalar zp = 1;  // (1/s)^k
      Scalar zm = 1;  // s^k
      for (int k = 1; k <= degree; ++k) {
        zp *= inv;
        zm *= ctx.s();
        e[k] = zp + zm;
        if (pt.tag == SpecialPoint::Tag::minus_eta && k % 2 == 1) e[k] = -e[k];
      }
      break;
    }
    case SpecialPoint::Tag::rational_x: {
      if (degree >= 1) e[1] = 2 * pt.x;
      for (int k = 2; k <= degree; ++k) e[k] = 2 * pt.x * e[k - 1] - e[k - 2];
      break;
    }
  }
  return e;
}

Scalar eval_at(const SymPoly& p, const SpecialPoint& pt, const QContext& ctx) {
  if (p.is_zero()) return 0;
  const auto e = e_values(p.degree(), pt, ctx);
  Scalar sum = p[0];
  for (int k = 1; k <= p.degree(); ++k) sum += p[k] * e[k];
  return sum;
}

SymPoly phi_poly(const Scalar& a, const Scalar& base, int n) {
  if (n < 0) throw DomainError("phi_poly: n must be non-negative");
  SymPoly result = SymPoly::constant(1);
  Scalar b = a;
  for (int k = 0; k < n; ++k) {
    // (1 - b z)(1 - b/z) = 1 + b^2 - b e_1
    result *= SymPoly(std::vector<Scalar>{1 + b * b, -b});
    b *= base;
  }
  return result;
}

SymPoly special_poly(const QContext& ctx, Family family, int n, const std::optional<Scalar>& param) {
  if (n < 0) throw DomainError("special_poly: n must be non-negative");
  switch (family) {
    case Family::monomial: {
      std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
      const Scalar scale = pow(Scalar(1, 2), n);
      for (int k = n; k >= 0; k -= 2) c[k] = scale * binomial(n, (n - k) / 2);
      return SymPoly(std::move(c));
    }
    case Family::rho:
    case Family::g: {
      if (n == 0) return SymPoly::constant(1);
      // P(Z) = (1 + Z) prod_{j=0}^{n-2} (1 + q^{2-n+2j} Z), rho_n = P(z^2) z^{-n}.
      std::vector<Scalar> poly{1, 1};
      for (int j = 0; j <= n - 2; ++j) {
        const Scalar a = ctx.s_pow(4 * (2 - n + 2 * j));
        std::vector<Scalar> next(poly.size() + 1);
        for (std::size_t m = 0; m < poly.size(); ++m) {
          next[m] += poly[m];
          next[m + 1] += a * poly[m];
        }
        poly = std::move(next);
      }
      std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
      for (int m = 0; m <= n; ++m) {
        const int k = 2 * m - n;
        if (k >= 0) c[k] = poly[m];
      }
      SymPoly rho(std::move(c));
      if (family == Family::g) rho *= ctx.s_pow(n * n);
      return rho;
    }
    case Family::hermite: {
      std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
      for (int k = 0; 2 * k <= n; ++k) c[n - 2 * k] = q_binomial(n, k, ctx.q());
      return SymPoly(std::move(c));
    }
    case Family::phi: {
      if (!param) throw DomainError("special_poly: family phi requires parameter a");
      return phi_poly(*param, ctx.q(), n);
    }
  }
  throw DomainError("special_poly: unknown family");
}

SymPoly aw_derivative(const SymPoly& p, const QContext& ctx, int k) {
  if (k < 0) throw DomainError("aw_derivative: k must be non-negative");
  SymPoly current = p;
  const Scalar denom = ctx.s_pow(2) - ctx.s_pow(-2);
  for (int step = 0; step < k && !current.is_zero(); ++step) {
    const int d = current.degree();
    std::vector<Scalar> out(static_cast<std::size_t>(std::max(d, 1)));
    for (int m = 1; m <= d; ++m) {
      const Scalar& cm = current[m];
      if (cm == 0) continue;
      const Scalar factor = cm * 2 * (ctx.s_pow(2 * m) - ctx.s_pow(-2 * m)) / denom;
      for (int j = m - 1; j >= 0; j -= 2) out[j] += factor;
    }
    current = SymPoly(std::move(out));
  }
  return current;
}

std::vector<Scalar> change_basis(const SymPoly& p, Basis target, const QContext& ctx) {
  const int d = p.degree();
  if (d < 0) return {};
  const auto table = basis_table(target, d, ctx);
  std::vector<Scalar> a(static_cast<std::size_t>(d) + 1);
  SymPoly rest = p;
  for (int n = d; n >= 0; --n) {
    const Scalar top = rest[n];
    if (top == 0) continue;
    a[n] = top / table[n][n];
    rest -= table[n] * a[n];
  }
  if (!rest.is_zero()) {
    throw IntegrityError("change_basis: back-substitution left a remainder");
  }
  return a;
}

SymPoly from_basis(std::span<const Scalar> coeffs, Basis basis, const QContext& ctx) {
  const auto table = basis_table(basis, static_cast<int>(coeffs.size()) - 1, ctx);
  SymPoly out;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] != 0) out += table[n] * coeffs[n];
  }
  return out;
}

SymPoly q_translate(const SymPoly& p, const SpecialPoint& y, const QContext& ctx) {
  const auto a = change_basis(p, Basis::hermite, ctx);
  const int d = static_cast<int>(a.size()) - 1;
  if (d < 0) return {};
  std::vector<Scalar> g(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) g[j] = eval_at(special_poly(ctx, Family::g, j), y, ctx);

  std::vector<Scalar> b(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    if (a[n] == 0) continue;
    for (int m = 0; m <= n; ++m) {
      if (g[n - m] == 0) continue;
      b[m] += a[n] * q_binomial(n, m, ctx.q()) * g[n - m] * ctx.s_pow(m * m - n * n);
    }
  }
  return from_basis(b, Basis::hermite, ctx);
}

}  // namespace qlid
