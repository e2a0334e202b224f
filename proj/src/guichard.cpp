#include "qlid/guichard.hpp"

#include <algorithm>
#include <cmath>

#include "qlid/qpolys.hpp"
#include "qlid/qspecial.hpp"

namespace qlid {

// ---------------------------------------------------------------------------
// ZPoly
// ---------------------------------------------------------------------------

ZPoly::ZPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(int n, const Scalar& c) {
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  v[n] = c;
  return ZPoly(std::move(v));
}

Scalar ZPoly::operator[](int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Scalar(0);
}

Scalar ZPoly::at(const Scalar& z) const {
  Scalar acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ZPoly& ZPoly::operator+=(const ZPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Scalar& factor) {
  for (auto& c : c_) c *= factor;
  trim();
  return *this;
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

// ---------------------------------------------------------------------------
// DeltaSeq
// ---------------------------------------------------------------------------

std::string to_string(DeltaPreset preset) {
  switch (preset) {
    case DeltaPreset::ones: return "ones";
    case DeltaPreset::alsalam_half: return "alsalam_half";
    case DeltaPreset::custom: return "custom";
  }
  return "unknown";
}

DeltaPreset parse_delta_preset(const std::string& text) {
  if (text == "ones") return DeltaPreset::ones;
  if (text == "alsalam_half") return DeltaPreset::alsalam_half;
  if (text == "custom") return DeltaPreset::custom;
  throw UsageError("unknown delta preset '" + text + "' (expected ones, alsalam_half or custom)");
}

DeltaSeq::DeltaSeq(Scalar p, std::vector<Scalar> delta, DeltaPreset preset)
    : p_(std::move(p)), delta_(std::move(delta)), preset_(preset) {
  if (p_ <= 0) throw DomainError("DeltaSeq: p must be positive");
  if (delta_.empty() || delta_[0] != 1) throw DomainError("DeltaSeq: delta_0 must equal 1");
}

DeltaSeq DeltaSeq::ones(const Scalar& p, int N) {
  return DeltaSeq(p, std::vector<Scalar>(static_cast<std::size_t>(std::max(N, 0)) + 1, Scalar(1)),
                  DeltaPreset::ones);
}

DeltaSeq DeltaSeq::alsalam_half(const Scalar& p, int N) {
  std::vector<Scalar> delta;
  for (int k = 0; k <= std::max(N, 0); ++k) delta.push_back(q_pochhammer(Scalar(-1), p, k) / pow(Scalar(2), k));
  return DeltaSeq(p, std::move(delta), DeltaPreset::alsalam_half);
}

DeltaSeq DeltaSeq::custom(const Scalar& p, std::vector<Scalar> delta) {
  return DeltaSeq(p, std::move(delta), DeltaPreset::custom);
}

DeltaSeq DeltaSeq::preset(DeltaPreset preset, const Scalar& p, int N) {
  switch (preset) {
    case DeltaPreset::ones: return ones(p, N);
    case DeltaPreset::alsalam_half: return alsalam_half(p, N);
    case DeltaPreset::custom: break;
  }
  throw UsageError("DeltaSeq::preset: custom sequences need explicit values");
}

const Scalar& DeltaSeq::operator[](int k) const {
  if (k < 0 || k > capacity()) {
    throw CapacityError("delta index " + std::to_string(k) + " exceeds capacity " + std::to_string(capacity()));
  }
  return delta_[k];
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

ZPoly dotplus_translate(const ZPoly& h, const DeltaSeq& d) {
  if (h.degree() > d.capacity()) {
    throw CapacityError("dotplus_translate: degree " + std::to_string(h.degree()) + " needs delta_0..delta_" +
                        std::to_string(h.degree()) + ", only " + std::to_string(d.capacity() + 1) + " given");
  }
  std::vector<Scalar> out(h.coeffs().size());
  for (int n = 0; n <= h.degree(); ++n) {
    if (h[n] == 0) continue;
    for (int k = 0; k <= n; ++k) out[n - k] += h[n] * q_binomial(n, k, d.p()) * d[k];
  }
  return ZPoly(std::move(out));
}

ZPoly p_derivative(const ZPoly& h, const Scalar& p, int k) {
  if (k < 1) throw DomainError("p_derivative: k must be >= 1");
  ZPoly cur = h;
  for (int step = 0; step < k && !cur.is_zero(); ++step) {
    std::vector<Scalar> out(static_cast<std::size_t>(cur.degree()));
    for (int n = 1; n <= cur.degree(); ++n) out[n - 1] = cur[n] * q_number(n, p);
    cur = ZPoly(std::move(out));
  }
  return cur;
}

std::vector<Scalar> bp_numbers(const DeltaSeq& d, int N) {
  if (N < 0) throw DomainError("bp_numbers: N must be non-negative");
  if (d.capacity() < N + 1) {
    throw CapacityError("bp_numbers: B_0..B_" + std::to_string(N) + " need delta_0..delta_" +
                        std::to_string(N + 1) + ", only " + std::to_string(d.capacity() + 1) + " given");
  }
  if (d[1] == 0) throw DomainError("bp_numbers: delta_1 = 0 makes the recurrence singular");
  const Scalar& p = d.p();
  std::vector<Scalar> dk(static_cast<std::size_t>(N) + 2);
  for (int k = 0; k <= N + 1; ++k) dk[k] = d[k] / q_factorial(k, p);
  std::vector<Scalar> b(static_cast<std::size_t>(N) + 1);
  b[0] = 1 / dk[1];
  for (int k = 2; k <= N + 1; ++k) {
    Scalar acc = 0;
    for (int j = 0; j < k - 1; ++j) acc += b[j] * dk[k - j];
    b[k - 1] = -acc / dk[1];
  }
  for (int k = 0; k <= N; ++k) b[k] *= q_factorial(k, p);
  return b;
}

std::vector<ZPoly> bp_polynomials(const DeltaSeq& d, int N) {
  const auto numbers = bp_numbers(d, N);
  const Scalar& p = d.p();
  std::vector<ZPoly> out;
  for (int n = 0; n <= N; ++n) {
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = q_binomial(n, k, p) * numbers[n - k];
    out.emplace_back(std::move(c));
  }
  for (int n = 1; n <= N; ++n) {
    if (!(p_derivative(out[n], p) == out[n - 1] * q_number(n, p))) {
      throw IntegrityError("bp_polynomials: ladder fails at n = " + std::to_string(n));
    }
    ZPoly jump = dotplus_translate(out[n], d) - out[n];
    for (int k = 0; k <= n; ++k) {
      const Scalar value = k == 0 ? jump[0] : p_derivative(jump, p, k)[0];
      const Scalar expected = k == n - 1 ? q_factorial(n, p) : Scalar(0);
      if (value != expected) {
        throw IntegrityError("bp_polynomials: jump property fails at n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
      }
    }
  }
  return out;
}

ZPoly solve_difference(const ZPoly& f, const DeltaSeq& d, int N) {
  if (N < 0) throw DomainError("solve_difference: N must be non-negative");
  const int top = std::min(N, f.degree());
  if (top < 0) return ZPoly();
  const auto family = bp_polynomials(d, top + 1);
  ZPoly g;
  for (int n = 0; n <= top; ++n) {
    if (f[n] == 0) continue;
    g += family[n + 1] * (f[n] / q_number(n + 1, d.p()));
  }
  return g;
}

SolutionCheck verify_solution(const ZPoly& f, const ZPoly& g, const DeltaSeq& d, int order) {
  SolutionCheck check;
  check.order = order;
  const ZPoly diff = dotplus_translate(g, d) - g - f;
  for (int k = 0; k <= order; ++k) {
    if (diff[k] != 0) {
      check.first_bad = k;
      break;
    }
  }
  return check;
}

ZPoly finite_reconstruction(const ZPoly& f, const DeltaSeq& d) {
  const int n = f.degree();
  if (n <= 0) return f;
  const Scalar& p = d.p();
  const auto family = bp_polynomials(d, n);
  ZPoly out = ZPoly::monomial(0, f[0]);
  ZPoly derivative = f;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) derivative = p_derivative(derivative, p);
    const Scalar coefficient = (dotplus_translate(derivative, d)[0] - derivative[0]) / q_factorial(k, p);
    const ZPoly phi = family[k] - ZPoly::monomial(0, family[k][0]);
    out += phi * coefficient;
  }
  return out;
}

std::vector<ZPoly> ismail_mansour_polynomials(const Scalar& q, int N) {
  auto family = bp_polynomials(DeltaSeq::alsalam_half(1 / q, N + 1), N);
  for (int n = 0; n <= N; ++n) family[n] *= pow(q, n * (n - 1) / 2);
  return family;
}

GrowthReport growth_bound_check(const Scalar& q, int N) {
  if (N < 1) throw DomainError("growth_bound_check: N must be >= 1");
  GrowthReport report;
  report.q = to_double(q);
  report.N = N;
  const auto zero = smallest_positive_zero<double>(ZeroKind::Sinq, report.q);
  report.xi1 = zero.value;
  const auto numbers = im_bernoulli_numbers(q, 2 * N);
  std::vector<double> r;
  for (int n = 0; n <= 2 * N; ++n) {
    const double ratio = std::abs(to_double(numbers[n] / q_factorial(n, q)));
    r.push_back(ratio * std::pow(2 * report.xi1, n));
  }
  auto sup_of = [&](int count, double& sup, int& argmax) {
    sup = 0;
    argmax = 0;
    for (int n = 0; n <= count; ++n) {
      if (r[n] > sup) {
        sup = r[n];
        argmax = n;
      }
    }
  };
  sup_of(N, report.sup, report.argmax);
  sup_of(2 * N, report.sup_doubled, report.argmax_doubled);
  report.r.assign(r.begin(), r.begin() + N + 1);
  report.relative_change = (report.sup_doubled - report.sup) / report.sup;
  report.passed = report.argmax <= 6 && report.relative_change <= 0.01;
  return report;
}

}  // namespace qlid
