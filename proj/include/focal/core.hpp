#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace focal {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// ceil((r-2)k/(r-1)); equals k - floor(k/(r-1)). Requires r >= 3.
int threshold_t(int r, int k);

/// The unique lambda in [r-1] with k + lambda == 0 (mod r-1). Requires r >= 3.
int lambda_of(int r, int k);

struct ExactParams {
  int t = 0;
  int lambda = 0;
};

/// threshold_t and lambda_of together, with the identity
/// lambda*(k-t) + (r-1-lambda)*(k-t+1) == k checked.
ExactParams exact_params(int r, int k);

/// Exact binomial coefficient, set-counting convention: 0 when k > n,
/// k < 0 or n < 0.
BigInt binom(long long n, long long k);

/// floor(x) for a rational.
BigInt rat_floor(const BigRat& x);

/// Canonical factorization q = p1^e1 * ... * ps^es by trial division,
/// primes ascending. Requires q >= 2.
std::vector<std::pair<int, int>> factorize(int q);
bool is_prime(int p);
bool is_prime_power(int q);
/// min over the p_i^{e_i} in the canonical factorization.
long long min_prime_power_factor(int q);

/// Decimal rendering of a rational, rounded to `digits` places.
std::string rat_decimal(const BigRat& x, int digits = 6);

/// A k-uniform set system on ground set [n]. Edges are sorted 1-based
/// vertex lists; the edge list itself is kept in lexicographic order and
/// is duplicate-free. Immutable after construction.
class UniformFamily {
 public:
  UniformFamily() = default;  // the empty family on an empty ground set
  UniformFamily(int n, int k, std::vector<std::vector<int>> edges);

  int ground_size() const { return n_; }
  int uniformity() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  /// Convention check: every vertex lies in some edge;
  /// informational, never enforced.
  bool covers_every_vertex() const;

  bool operator==(const UniformFamily&) const = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::vector<int>> edges_;
};

/// A duplicate-free set of length-n words over alphabet [q] = {1..q},
/// kept in lexicographic order. Immutable after construction.
class QaryCode {
 public:
  QaryCode() = default;
  QaryCode(int n, int q, std::vector<std::vector<int>> words);

  int length() const { return n_; }
  int alphabet() const { return q_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::vector<int>>& words() const { return words_; }

  bool operator==(const QaryCode&) const = default;

 private:
  int n_ = 0;
  int q_ = 0;
  std::vector<std::vector<int>> words_;
};

/// Minimum Hamming distance; words() must hold at least two words.
int min_distance(const QaryCode& code);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

struct ReadOptions {
  bool require_vertex_cover = false;
};

// Family file: header "#family n=<n> k=<k>", then one edge per line as
// space-separated 1-based labels. Code file: header "#code n=<n> q=<q>",
// one word per line. UTF-8, LF. The two-argument readers accept header-less
// content given the parameters explicitly.
UniformFamily read_family(std::istream& in, const ReadOptions& opt = {});
UniformFamily read_family(std::istream& in, int n, int k,
                          const ReadOptions& opt = {});
UniformFamily read_family_file(const std::string& path,
                               const ReadOptions& opt = {});
void write_family(std::ostream& out, const UniformFamily& fam);
void write_family_file(const std::string& path, const UniformFamily& fam);

QaryCode read_code(std::istream& in);
QaryCode read_code(std::istream& in, int n, int q);
QaryCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const QaryCode& code);
void write_code_file(const std::string& path, const QaryCode& code);

namespace util {

/// Set-as-bitmask over at most 64 ground elements; bit i-1 <=> element i.
using Mask = std::uint64_t;

Mask mask_of(const std::vector<int>& elems);
std::vector<int> elems_of(Mask m);
std::vector<Mask> masks_of(const UniformFamily& fam);

/// All k-subsets of [n] in lexicographic order of sorted vertex lists.
std::vector<std::vector<int>> all_subsets(int n, int k);

/// Deterministic RNG: the fully specified mt19937_64 stream with an
/// explicitly implemented unbiased bounded draw and Fisher-Yates shuffle.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// First (in index order, preferring small indices) choice of `want`
/// pairwise disjoint masks among `sets`; empty masks are never selected.
std::optional<std::vector<std::size_t>> find_disjoint_system(
    const std::vector<Mask>& sets, int want);
bool has_disjoint_system(const std::vector<Mask>& sets, int want);

/// Same, but the system must additionally avoid the `forced` mask
/// (used when one member of the system is fixed in advance).
bool has_disjoint_system_avoiding(const std::vector<Mask>& sets, Mask forced,
                                  int want);

}  // namespace util
}  // namespace focal
