#include "focal/orthogonal_array.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "focal/detect.hpp"

namespace focal {

namespace {

long long ipow_ll(int base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > (1LL << 40))
      throw std::invalid_argument("orthogonal array would be too large");
  }
  return out;
}

bool strength_holds_on_rows(const OrthogonalArray& oa,
                            const std::vector<int>& rows) {
  // every tuple of [q]^t appears exactly once <=> all restrictions distinct
  std::unordered_set<long long> seen;
  seen.reserve(oa.columns.size() * 2);
  for (const auto& col : oa.columns) {
    long long key = 0;
    for (int r : rows) key = key * oa.q + (col[static_cast<std::size_t>(r)] - 1);
    if (!seen.insert(key).second) return false;
  }
  return seen.size() == oa.columns.size();
}

}  // namespace

OaCertificate verify_oa(const OrthogonalArray& oa, const OaVerifyOptions& opt) {
  OaCertificate cert;
  const long long expected = ipow_ll(oa.q, oa.t);
  if (static_cast<long long>(oa.columns.size()) != expected) return cert;
  for (const auto& col : oa.columns) {
    if (static_cast<int>(col.size()) != oa.n) return cert;
    for (int s : col)
      if (s < 1 || s > oa.q) return cert;
  }

  // pairwise agreements, exact
  cert.pairwise_ok = true;
  for (std::size_t i = 0; i < oa.columns.size() && cert.pairwise_ok; ++i)
    for (std::size_t j = i + 1; j < oa.columns.size(); ++j) {
      int agree = 0;
      for (int r = 0; r < oa.n; ++r)
        agree += oa.columns[i][static_cast<std::size_t>(r)] ==
                 oa.columns[j][static_cast<std::size_t>(r)];
      cert.max_agreement = std::max(cert.max_agreement, agree);
      if (agree > oa.t - 1) {
        cert.pairwise_ok = false;
        break;
      }
    }

  const BigInt subsets = binom(oa.n, oa.t);
  const bool full = subsets * expected <= opt.full_cap;
  cert.strength_full = full;
  cert.strength_ok = true;
  if (full) {
    for (const auto& rows1 : util::all_subsets(oa.n, oa.t)) {
      std::vector<int> rows;
      for (int r : rows1) rows.push_back(r - 1);
      ++cert.row_subsets_checked;
      if (!strength_holds_on_rows(oa, rows)) {
        cert.strength_ok = false;
        break;
      }
    }
  } else {
    util::Rng rng(opt.sample_seed);
    for (int s = 0; s < opt.sample_subsets; ++s) {
      std::vector<int> all(static_cast<std::size_t>(oa.n));
      for (int i = 0; i < oa.n; ++i) all[static_cast<std::size_t>(i)] = i;
      rng.shuffle(all);
      all.resize(static_cast<std::size_t>(oa.t));
      std::sort(all.begin(), all.end());
      ++cert.row_subsets_checked;
      if (!strength_holds_on_rows(oa, all)) {
        cert.strength_ok = false;
        break;
      }
    }
  }
  return cert;
}

OrthogonalArray oa_prime_power(int t, int n, const PrimePowerField& field) {
  const int q = field.q();
  if (t < 1 || t > n) throw std::invalid_argument("oa: need 1 <= t <= n");
  if (n > q + 1) throw std::invalid_argument("oa: need n <= q+1");

  const long long ncols = ipow_ll(q, t);
  OrthogonalArray oa;
  oa.t = t;
  oa.n = n;
  oa.q = q;
  oa.columns.reserve(static_cast<std::size_t>(ncols));

  const bool with_infinity = n == q + 1;
  const int points = with_infinity ? n - 1 : n;

  std::vector<int> coeff(static_cast<std::size_t>(t), 0);
  for (long long idx = 0; idx < ncols; ++idx) {
    long long v = idx;
    for (int i = 0; i < t; ++i) {
      coeff[static_cast<std::size_t>(i)] = static_cast<int>(v % q);
      v /= q;
    }
    std::vector<int> col;
    col.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < points; ++x) {
      // Horner, high degree first
      int val = 0;
      for (int i = t; i-- > 0;)
        val = field.add(field.mul(val, x), coeff[static_cast<std::size_t>(i)]);
      col.push_back(val + 1);
    }
    if (with_infinity) col.push_back(coeff[static_cast<std::size_t>(t - 1)] + 1);
    oa.columns.push_back(std::move(col));
  }

  oa.cert = verify_oa(oa);
  if (!oa.cert.strength_ok || !oa.cert.pairwise_ok)
    throw std::logic_error("oa_prime_power: certificate failed");
  return oa;
}

OrthogonalArray oa_compose(const OrthogonalArray& a, const OrthogonalArray& b,
                           const OaVerifyOptions& opt) {
  if (a.t != b.t || a.n != b.n)
    throw std::invalid_argument("oa_compose: shape mismatch");
  OrthogonalArray out;
  out.t = a.t;
  out.n = a.n;
  out.q = a.q * b.q;
  ipow_ll(out.q, out.t);
  out.columns.reserve(a.columns.size() * b.columns.size());
  for (const auto& ca : a.columns)
    for (const auto& cb : b.columns) {
      std::vector<int> col(static_cast<std::size_t>(out.n));
      for (int r = 0; r < out.n; ++r)
        col[static_cast<std::size_t>(r)] =
            (ca[static_cast<std::size_t>(r)] - 1) * b.q +
            cb[static_cast<std::size_t>(r)];
      out.columns.push_back(std::move(col));
    }
  out.cert = verify_oa(out, opt);
  if (!out.cert.strength_ok || !out.cert.pairwise_ok)
    throw std::logic_error("oa_compose: certificate failed");
  return out;
}

OrthogonalArray oa_build(int t, int n, int q) {
  if (q < 2) throw std::invalid_argument("oa_build: q >= 2 required");
  std::vector<std::pair<long long, std::pair<int, int>>> ordered;
  for (auto [p, e] : factorize(q)) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    ordered.push_back({pe, {p, e}});
  }
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [pe, f] : ordered)
    if (n > pe + 1)
      throw std::invalid_argument(
          "oa_build: factor " + std::to_string(f.first) + "^" +
          std::to_string(f.second) + " requires n <= " + std::to_string(pe + 1));
  OrthogonalArray oa;
  bool first = true;
  for (const auto& [pe, f] : ordered) {
    auto part = oa_prime_power(t, n, PrimePowerField::make(f.first, f.second));
    oa = first ? std::move(part) : oa_compose(oa, part);
    first = false;
  }
  return oa;
}

QaryCode code_from_oa(const OrthogonalArray& oa, long long distance_pair_cap) {
  QaryCode code(oa.n, oa.q, oa.columns);
  const long long m = static_cast<long long>(code.size());
  if (m >= 2 && m * (m - 1) / 2 <= distance_pair_cap) {
    if (min_distance(code) < oa.n - oa.t + 1)
      throw std::logic_error("code_from_oa: distance below n-t+1");
  }
  return code;
}

QaryCode focal_free_code_build(int r, int n, int q,
                               const CodeBuildOptions& opt) {
  if (r < 3) throw std::invalid_argument("focal_free_code_build: r >= 3");
  if (n < 2 || q < 2)
    throw std::invalid_argument("focal_free_code_build: need n, q >= 2");
  std::vector<std::string> missing;
  if ((n + 1) % (r - 1) != 0) missing.push_back("r-1 | n+1");
  if (!(2 * r - 3 < n)) missing.push_back("2r-3 < n");
  const long long p1e1 = min_prime_power_factor(q);
  if (!(n <= p1e1 + 1))
    missing.push_back("n <= p1^e1 + 1 = " + std::to_string(p1e1 + 1));
  if (!(q >= r - 1)) missing.push_back("q >= r-1");
  if (!missing.empty()) {
    std::string why = "focal_free_code_build preconditions unmet:";
    for (const auto& m : missing) why += " " + m + ";";
    throw std::invalid_argument(why);
  }

  const int t = threshold_t(r, n);
  auto code = code_from_oa(oa_build(t, n, q));
  if (code.size() >= 2 && min_distance(code) <= n / (r - 1))
    throw std::logic_error("focal_free_code_build: distance certificate failed");
  if (opt.verify_focal && code.size() <= opt.focal_verify_cap) {
    if (find_focal(code, r).has_value())
      throw std::logic_error("focal_free_code_build: focal witness found");
  }
  return code;
}

}  // namespace focal
