#include "focal/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "focal/detect.hpp"

namespace focal {

const BoundValue* BoundReport::find(const std::string& name) const {
  for (const auto& v : values)
    if (v.name == name) return &v;
  return nullptr;
}

std::optional<BigInt> BoundReport::best_admissible_upper() const {
  std::optional<BigInt> best;
  for (const auto& v : values) {
    if (!v.valid || v.conjectural) continue;
    if (v.kind != BoundKind::Upper && v.kind != BoundKind::Exact) continue;
    BigInt f = rat_floor(v.value);
    if (!best || f < *best) best = f;
  }
  return best;
}

namespace {

BigInt int_pow(int base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void push(BoundReport& rep, std::string name, BigRat value, BoundKind kind,
          bool valid, std::string reason, bool conjectural) {
  rep.values.push_back({std::move(name), std::move(value), kind, valid,
                        std::move(reason), conjectural});
}

}  // namespace

BoundReport hypergraph_bounds(int r, int n, int k,
                              const MatchingOptions& mopt) {
  if (r < 3) throw std::invalid_argument("hypergraph_bounds: r >= 3 required");
  if (k < 2 || n < k)
    throw std::invalid_argument("hypergraph_bounds: need n >= k >= 2");

  BoundReport rep;
  rep.code_side = false;
  rep.r = r;
  rep.n = n;
  rep.k = k;
  rep.t = threshold_t(r, k);
  rep.lambda = lambda_of(r, k);
  rep.m = m_resolve(k, k - rep.t, rep.lambda, mopt);

  const BigInt cnt = binom(n, rep.t);
  const BigInt ckt = binom(k, rep.t);
  const BigInt denom = ckt - rep.m.value();
  const bool conj = rep.m.conjectural;

  push(rep, "alonUpper", BigRat(BigInt(r - 1) * cnt, ckt), BoundKind::Upper,
       true, "", false);
  push(rep, "cheapLowerAsym", BigRat(cnt, ckt), BoundKind::LowerAsymptotic,
       true, "(1-o(1)) packing target; informational at finite n", false);

  if (denom <= 0) {
    const std::string why = "nonpositive denominator C(k,t) - m";
    push(rep, "thm22Upper", BigRat(0), BoundKind::Upper, false, why, conj);
    push(rep, "remark23Upper", BigRat(0), BoundKind::Upper, false, why, conj);
    push(rep, "limitDensity", BigRat(0), BoundKind::LimitConstant, false, why,
         conj);
    return rep;
  }

  const BigInt n0 = denom * rep.t + rep.t - 1;
  const bool thm22_ok = BigInt(n) >= std::max(BigInt(k), n0);
  push(rep, "thm22Upper", BigRat(cnt, denom), BoundKind::Upper, thm22_ok,
       thm22_ok ? "n >= max{k, n0 = " + n0.str() + "}"
                : "requires n >= max{k, n0 = " + n0.str() + "}",
       conj);
  push(rep, "remark23Upper", BigRat(cnt, denom) + BigRat(binom(n, rep.t - 1)),
       BoundKind::Upper, true, "", conj);
  push(rep, "limitDensity", BigRat(1, denom), BoundKind::LimitConstant, true,
       "limit of f/C(n,t) as n grows; not a finite-n bound", conj);
  return rep;
}

BoundReport code_bounds(int r, int n, int q, const MatchingOptions& mopt) {
  if (r < 3) throw std::invalid_argument("code_bounds: r >= 3 required");
  if (n < 2 || q < 2)
    throw std::invalid_argument("code_bounds: need n >= 2 and q >= 2");

  BoundReport rep;
  rep.code_side = true;
  rep.r = r;
  rep.n = n;
  rep.q = q;
  rep.t = threshold_t(r, n);
  rep.lambda = lambda_of(r, n);
  rep.m = m_resolve(n, n - rep.t, rep.lambda, mopt);

  const BigInt cnt = binom(n, rep.t);
  const BigInt denom = cnt - rep.m.value();
  const BigInt qt = int_pow(q, rep.t);
  const bool conj = rep.m.conjectural;

  push(rep, "ahCodeUpper", BigRat(BigInt(r - 1) * qt), BoundKind::Upper, true,
       "", false);

  const bool divides = (n + 1) % (r - 1) == 0;
  push(rep, "thm35Upper", BigRat(qt), BoundKind::Upper,
       divides && q >= r - 1,
       divides && q >= r - 1 ? ""
                             : "requires q >= r-1 and r-1 | n+1",
       false);

  {
    const long long p1e1 = min_prime_power_factor(q);
    std::vector<std::string> missing;
    if (!divides) missing.push_back("r-1 | n+1");
    if (!(2 * r - 3 < n)) missing.push_back("2r-3 < n");
    if (!(n <= p1e1 + 1))
      missing.push_back("n <= p1^e1 + 1 = " + std::to_string(p1e1 + 1));
    if (!(q >= r - 1)) missing.push_back("q >= r-1");
    std::string why;
    for (const auto& m : missing) why += (why.empty() ? "fails: " : ", ") + m;
    push(rep, "thm16Exact", BigRat(qt), BoundKind::Exact, missing.empty(), why,
         false);
  }

  push(rep, "ahCodeLowerPrimePower", BigRat(qt), BoundKind::LowerAsymptotic,
       is_prime_power(q) && q >= n,
       is_prime_power(q) && q >= n
           ? "certified lower bound (prime power q >= n)"
           : "requires prime power q >= n",
       false);

  if (denom <= 0) {
    const std::string why = "nonpositive denominator C(n,t) - m";
    push(rep, "thm33Upper", BigRat(0), BoundKind::Upper, false, why, conj);
    push(rep, "remark3Upper", BigRat(0), BoundKind::Upper, false, why, conj);
    push(rep, "limitDensity", BigRat(0), BoundKind::LimitConstant, false, why,
         conj);
    return rep;
  }

  // q-threshold of the counting bound: q >= t/(n-t+1) * (C(n,t) - m).
  const bool q_ok = BigInt(q) * (n - rep.t + 1) >= BigInt(rep.t) * denom;
  push(rep, "thm33Upper", BigRat(cnt * qt, denom), BoundKind::Upper, q_ok,
       q_ok ? "" : "requires q >= t/(n-t+1) * (C(n,t) - m)", conj);
  push(rep, "remark3Upper",
       BigRat(cnt * qt, denom) +
           BigRat(binom(n, rep.t - 1) * int_pow(q, rep.t - 1)),
       BoundKind::Upper, true, "", conj);
  push(rep, "limitDensity", BigRat(cnt, denom), BoundKind::LimitConstant, true,
       "limit of f/q^t as q grows; not a finite-q bound", conj);
  return rep;
}

bool is_packing(const UniformFamily& fam, int t) {
  const auto masks = util::masks_of(fam);
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(masks[i] & masks[j]) >= t) return false;
  return true;
}

bool packing_is_focal_free_check(const UniformFamily& P, int r) {
  const int t = threshold_t(r, P.uniformity());
  if (!is_packing(P, t))
    throw std::invalid_argument(
        "packing_is_focal_free_check: input is not an (n,k,t)-packing for "
        "t = threshold_t(r,k)");
  return !find_focal(P, r).has_value();
}

}  // namespace focal
