#pragma once

#include <cstdint>
#include <vector>

#include "focal/core.hpp"
#include "focal/field.hpp"

namespace focal {

struct OaCertificate {
  bool strength_ok = false;
  bool strength_full = false;        // all C(n,t) row subsets, else sampled
  long long row_subsets_checked = 0;
  bool pairwise_ok = false;          // agreements <= t-1, always exact
  int max_agreement = 0;
};

/// An OA(t, n, q): n x q^t symbol matrix stored column-wise, symbols 1..q.
/// Every t-row restriction exhibits each tuple of [q]^t exactly once; any
/// two columns agree in at most t-1 rows.
struct OrthogonalArray {
  int t = 0;
  int n = 0;
  int q = 0;
  std::vector<std::vector<int>> columns;
  OaCertificate cert;
};

struct OaVerifyOptions {
  /// Full strength check when C(n,t) * q^t stays under this; sampled above.
  long long full_cap = 4'000'000;
  int sample_subsets = 64;
  std::uint64_t sample_seed = 0;
};

OaCertificate verify_oa(const OrthogonalArray& oa,
                        const OaVerifyOptions& opt = {});

/// Evaluation construction over GF(q): rows are the field elements in
/// canonical order plus, when n = q+1, a final row reading the leading
/// coefficient; columns are the polynomials of degree < t enumerated as
/// base-q integers. Requires 1 <= t <= n <= q+1 (interpolation gives the
/// strength certificate throughout that range). Construction fails loudly
/// if the certificate does not verify.
OrthogonalArray oa_prime_power(int t, int n, const PrimePowerField& field);

/// Symbol-pairing product: columns are all pairs, symbol (a-1)*q2 + b.
OrthogonalArray oa_compose(const OrthogonalArray& a, const OrthogonalArray& b,
                           const OaVerifyOptions& opt = {});

/// OA(t,n,q) for arbitrary q >= 2: evaluation construction per prime-power
/// factor, composed in ascending p^e order. Each factor needs n <= p^e + 1
/// (reported individually when violated).
OrthogonalArray oa_build(int t, int n, int q);

/// The q^t columns as codewords; minimum distance >= n-t+1 is checked
/// exactly below the pair cap.
QaryCode code_from_oa(const OrthogonalArray& oa,
                      long long distance_pair_cap = 60'000'000);

struct CodeBuildOptions {
  bool verify_focal = true;
  std::size_t focal_verify_cap = 4096;  // max words for the focal re-check
};

/// The lower-bound object behind the exact code value: an OA(t,n,q) code of
/// size q^t with minimum distance above floor(n/(r-1)). Preconditions
/// r-1 | n+1, 2r-3 < n <= p1^e1 + 1, q >= r-1 are reported individually.
QaryCode focal_free_code_build(int r, int n, int q,
                               const CodeBuildOptions& opt = {});

}  // namespace focal
