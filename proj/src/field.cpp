#include "focal/field.hpp"

#include <stdexcept>

namespace focal {

namespace {

using Poly = std::vector<int>;  // coefficients low degree first, in F_p

int pmod(long long v, int p) {
  const long long m = v % p;
  return static_cast<int>(m < 0 ? m + p : m);
}

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = pmod(out[i + j] + static_cast<long long>(a[i]) * b[j], p);
  return trim(std::move(out));
}

// Remainder of a modulo monic m.
Poly poly_rem(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  while (a.size() >= m.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = pmod(a[shift + i] - static_cast<long long>(lead) * m[i], p);
    a = trim(std::move(a));
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  // trial division by all monic polynomials of degree 1..deg/2
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long m = 0; m < count; ++m) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      long long v = m;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

PrimePowerField PrimePowerField::make(int p, int e) {
  if (!is_prime(p))
    throw std::invalid_argument("PrimePowerField: p is not prime");
  if (e < 1) throw std::invalid_argument("PrimePowerField: e must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 1 << 20)
      throw std::invalid_argument("PrimePowerField: p^e too large");
  }
  // first monic irreducible of degree e in base-p encoding order
  std::vector<int> modulus;
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long m = 0; m < count; ++m) {
    Poly f(static_cast<std::size_t>(e) + 1, 0);
    long long v = m;
    for (int i = 0; i < e; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
      v /= p;
    }
    f[static_cast<std::size_t>(e)] = 1;
    if (is_irreducible(f, p)) {
      modulus = f;
      break;
    }
  }
  if (modulus.empty())
    throw std::logic_error("PrimePowerField: no irreducible found");
  return PrimePowerField(p, e, std::move(modulus));
}

PrimePowerField::PrimePowerField(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;
}

std::vector<int> PrimePowerField::to_poly(int a) const {
  if (a < 0 || a >= q_)
    throw std::invalid_argument("field element out of range");
  Poly c;
  while (a) {
    c.push_back(a % p_);
    a /= p_;
  }
  return c;
}

int PrimePowerField::from_poly(const std::vector<int>& c) const {
  int v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
  return v;
}

int PrimePowerField::add(int a, int b) const {
  auto ca = to_poly(a), cb = to_poly(b);
  if (ca.size() < cb.size()) ca.resize(cb.size(), 0);
  for (std::size_t i = 0; i < cb.size(); ++i)
    ca[i] = pmod(ca[i] + cb[i], p_);
  return from_poly(trim(std::move(ca)));
}

int PrimePowerField::neg(int a) const {
  auto c = to_poly(a);
  for (auto& x : c) x = pmod(-x, p_);
  return from_poly(trim(std::move(c)));
}

int PrimePowerField::sub(int a, int b) const { return add(a, neg(b)); }

int PrimePowerField::mul(int a, int b) const {
  return from_poly(poly_rem(poly_mul(to_poly(a), to_poly(b), p_), modulus_,
                            p_));
}

int PrimePowerField::pow(int a, long long exp) const {
  if (exp < 0) throw std::invalid_argument("field pow: negative exponent");
  int out = 1;
  int base = a;
  while (exp) {
    if (exp & 1) out = mul(out, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return out;
}

int PrimePowerField::inv(int a) const {
  if (a == 0) throw std::invalid_argument("field inv: zero");
  // a^(q-2) since the multiplicative group has order q-1
  const int out = pow(a, q_ - 2);
  if (mul(a, out) != 1) throw std::logic_error("field inv failed");
  return out;
}

}  // namespace focal
