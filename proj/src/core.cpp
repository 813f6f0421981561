#include "focal/core.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace focal {

int threshold_t(int r, int k) {
  if (r < 3) throw std::invalid_argument("threshold_t: r must be >= 3");
  if (k < 1) throw std::invalid_argument("threshold_t: k must be >= 1");
  const long long a = static_cast<long long>(r - 2) * k;
  const int t = static_cast<int>((a + r - 2) / (r - 1));
  assert(t == k - k / (r - 1));  // the two closed forms coincide
  return t;
}

int lambda_of(int r, int k) {
  if (r < 3) throw std::invalid_argument("lambda_of: r must be >= 3");
  if (k < 0) throw std::invalid_argument("lambda_of: k must be >= 0");
  const int m = r - 1;
  int lambda = (m - k % m) % m;
  if (lambda == 0) lambda = m;
  // identity: lambda*(k-t) + (r-1-lambda)*(k-t+1) == k
  assert(k < 1 || lambda * (k - threshold_t(r, k)) +
                          (m - lambda) * (k - threshold_t(r, k) + 1) ==
                      k);
  return lambda;
}

ExactParams exact_params(int r, int k) {
  ExactParams p;
  p.t = threshold_t(r, k);
  p.lambda = lambda_of(r, k);
  const long long lhs =
      static_cast<long long>(p.lambda) * (k - p.t) +
      static_cast<long long>(r - 1 - p.lambda) * (k - p.t + 1);
  if (lhs != k) throw std::logic_error("exact_params: identity violated");
  return p;
}

BigInt binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step
  }
  return result;
}

BigInt rat_floor(const BigRat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

std::string rat_decimal(const BigRat& x, int digits) {
  const bool neg = x < 0;
  BigRat a = neg ? BigRat(-x) : x;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = boost::multiprecision::numerator(a) * scale;
  BigInt den = boost::multiprecision::denominator(a);
  BigInt scaled = (num + den / 2) / den;  // round half up
  BigInt ip = scaled / scale;
  BigInt fp = scaled % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), digits - static_cast<int>(frac.size()), '0');
  std::string out = ip.str();
  if (digits > 0) out += "." + frac;
  return neg ? "-" + out : out;
}

std::vector<std::pair<int, int>> factorize(int q) {
  if (q < 2) throw std::invalid_argument("factorize: q must be >= 2");
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= q; ++p) {
    if (q % p) continue;
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (q > 1) out.emplace_back(q, 1);
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_prime_power(int q) {
  return q >= 2 && factorize(q).size() == 1;
}

long long min_prime_power_factor(int q) {
  long long best = -1;
  for (auto [p, e] : factorize(q)) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (best < 0 || pe < best) best = pe;
  }
  return best;
}

namespace {

std::vector<int> checked_edge(std::vector<int> e, int n, int k,
                              const char* what) {
  std::sort(e.begin(), e.end());
  if (static_cast<int>(e.size()) != k)
    throw std::invalid_argument(std::string(what) + ": wrong cardinality");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1 || e[i] > n)
      throw std::invalid_argument(std::string(what) + ": element out of [n]");
    if (i > 0 && e[i] == e[i - 1])
      throw std::invalid_argument(std::string(what) + ": repeated element");
  }
  return e;
}

}  // namespace

UniformFamily::UniformFamily(int n, int k, std::vector<std::vector<int>> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("UniformFamily: negative parameters");
  for (auto& e : edges_) e = checked_edge(std::move(e), n_, k_, "edge");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("UniformFamily: duplicate edge");
}

bool UniformFamily::covers_every_vertex() const {
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& e : edges_)
    for (int v : e) seen[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= n_; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return false;
  return true;
}

QaryCode::QaryCode(int n, int q, std::vector<std::vector<int>> words)
    : n_(n), q_(q), words_(std::move(words)) {
  if (n < 0 || q < 1) throw std::invalid_argument("QaryCode: bad parameters");
  for (const auto& w : words_) {
    if (static_cast<int>(w.size()) != n_)
      throw std::invalid_argument("QaryCode: wrong word length");
    for (int s : w)
      if (s < 1 || s > q_)
        throw std::invalid_argument("QaryCode: symbol out of [q]");
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
    throw std::invalid_argument("QaryCode: duplicate codeword");
}

int min_distance(const QaryCode& code) {
  const auto& w = code.words();
  if (w.size() < 2)
    throw std::invalid_argument("min_distance: need at least two words");
  int best = code.length();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      int d = 0;
      for (int c = 0; c < code.length(); ++c) d += (w[i][c] != w[j][c]);
      best = std::min(best, d);
    }
  return best;
}

namespace {

// Shared line-by-line reader for both file formats.
struct LineReader {
  std::istream& in;
  long line_no = 0;
  bool next(std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }
};

std::vector<int> parse_ints(const std::string& s, long line) {
  std::vector<int> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("malformed entry '" + tok + "'", line);
    }
  }
  return out;
}

// Parses 'header' of the shape "#<tag> a=<int> b=<int>".
bool parse_header(const std::string& s, const std::string& tag,
                  const std::string& a, const std::string& b, long line,
                  int& va, int& vb) {
  if (s.rfind("#" + tag, 0) != 0) return false;
  std::istringstream iss(s);
  std::string word;
  iss >> word;  // "#<tag>"
  bool got_a = false, got_b = false;
  while (iss >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos)
      throw ParseError("malformed header field '" + word + "'", line);
    const std::string key = word.substr(0, eq);
    int val = 0;
    try {
      val = std::stoi(word.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed header value in '" + word + "'", line);
    }
    if (key == a) {
      va = val;
      got_a = true;
    } else if (key == b) {
      vb = val;
      got_b = true;
    } else {
      throw ParseError("unknown header field '" + key + "'", line);
    }
  }
  if (!got_a || !got_b)
    throw ParseError("header must declare " + a + " and " + b, line);
  return true;
}

UniformFamily read_family_impl(std::istream& in, std::optional<int> n,
                               std::optional<int> k, const ReadOptions& opt) {
  LineReader lr{in};
  std::string s;
  std::vector<std::vector<int>> edges;
  std::vector<long> lines;
  bool have_header = false;
  while (lr.next(s)) {
    if (!have_header && edges.empty() && s[0] == '#') {
      int hn = 0, hk = 0;
      if (!parse_header(s, "family", "n", "k", lr.line_no, hn, hk))
        throw ParseError("expected '#family n=<n> k=<k>' header", lr.line_no);
      if ((n && *n != hn) || (k && *k != hk))
        throw ParseError("header disagrees with expected parameters",
                         lr.line_no);
      n = hn;
      k = hk;
      have_header = true;
      continue;
    }
    if (!n || !k)
      throw ParseError("missing '#family' header and no parameters given",
                       lr.line_no);
    auto e = parse_ints(s, lr.line_no);
    if (static_cast<int>(e.size()) != *k)
      throw ParseError("edge has " + std::to_string(e.size()) +
                           " entries, expected " + std::to_string(*k),
                       lr.line_no);
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > *n)
        throw ParseError("vertex " + std::to_string(e[i]) + " out of [1," +
                             std::to_string(*n) + "]",
                         lr.line_no);
      if (i > 0 && e[i] == e[i - 1])
        throw ParseError("repeated vertex in edge", lr.line_no);
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == e) throw ParseError("duplicate edge", lr.line_no);
    edges.push_back(std::move(e));
    lines.push_back(lr.line_no);
  }
  if (!n || !k)
    throw ParseError("empty input and no parameters given; cannot infer n, k",
                     lr.line_no);
  UniformFamily fam(*n, *k, std::move(edges));
  if (opt.require_vertex_cover && !fam.covers_every_vertex())
    throw ParseError("family leaves some vertex uncovered", lr.line_no);
  return fam;
}

QaryCode read_code_impl(std::istream& in, std::optional<int> n,
                        std::optional<int> q) {
  LineReader lr{in};
  std::string s;
  std::vector<std::vector<int>> words;
  bool have_header = false;
  while (lr.next(s)) {
    if (!have_header && words.empty() && s[0] == '#') {
      int hn = 0, hq = 0;
      if (!parse_header(s, "code", "n", "q", lr.line_no, hn, hq))
        throw ParseError("expected '#code n=<n> q=<q>' header", lr.line_no);
      if ((n && *n != hn) || (q && *q != hq))
        throw ParseError("header disagrees with expected parameters",
                         lr.line_no);
      n = hn;
      q = hq;
      have_header = true;
      continue;
    }
    if (!n || !q)
      throw ParseError("missing '#code' header and no parameters given",
                       lr.line_no);
    auto w = parse_ints(s, lr.line_no);
    if (static_cast<int>(w.size()) != *n)
      throw ParseError("word has " + std::to_string(w.size()) +
                           " symbols, expected " + std::to_string(*n),
                       lr.line_no);
    for (int sym : w)
      if (sym < 1 || sym > *q)
        throw ParseError("symbol " + std::to_string(sym) + " out of [1," +
                             std::to_string(*q) + "]",
                         lr.line_no);
    for (const auto& prev : words)
      if (prev == w) throw ParseError("duplicate codeword", lr.line_no);
    words.push_back(std::move(w));
  }
  if (!n || !q)
    throw ParseError("empty input and no parameters given; cannot infer n, q",
                     lr.line_no);
  return QaryCode(*n, *q, std::move(words));
}

}  // namespace

UniformFamily read_family(std::istream& in, const ReadOptions& opt) {
  return read_family_impl(in, std::nullopt, std::nullopt, opt);
}

UniformFamily read_family(std::istream& in, int n, int k,
                          const ReadOptions& opt) {
  return read_family_impl(in, n, k, opt);
}

UniformFamily read_family_file(const std::string& path,
                               const ReadOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_family(in, opt);
}

void write_family(std::ostream& out, const UniformFamily& fam) {
  out << "#family n=" << fam.ground_size() << " k=" << fam.uniformity()
      << "\n";
  for (const auto& e : fam.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

void write_family_file(const std::string& path, const UniformFamily& fam) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_family(out, fam);
}

QaryCode read_code(std::istream& in) {
  return read_code_impl(in, std::nullopt, std::nullopt);
}

QaryCode read_code(std::istream& in, int n, int q) {
  return read_code_impl(in, n, q);
}

QaryCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const QaryCode& code) {
  out << "#code n=" << code.length() << " q=" << code.alphabet() << "\n";
  for (const auto& w : code.words()) {
    for (std::size_t i = 0; i < w.size(); ++i)
      out << (i ? " " : "") << w[i];
    out << "\n";
  }
}

void write_code_file(const std::string& path, const QaryCode& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_code(out, code);
}

namespace util {

Mask mask_of(const std::vector<int>& elems) {
  Mask m = 0;
  for (int e : elems) {
    if (e < 1 || e > 64)
      throw std::invalid_argument("mask_of: element outside [1,64]");
    m |= Mask{1} << (e - 1);
  }
  return m;
}

std::vector<int> elems_of(Mask m) {
  std::vector<int> out;
  while (m) {
    const int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> masks_of(const UniformFamily& fam) {
  if (fam.ground_size() > 64)
    throw std::invalid_argument("masks_of: ground set larger than 64");
  std::vector<Mask> out;
  out.reserve(fam.size());
  for (const auto& e : fam.edges()) out.push_back(mask_of(e));
  return out;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = gen_();
  } while (v >= limit);
  return v % bound;
}

namespace {

bool disjoint_dfs(const std::vector<Mask>& sets, std::size_t start, Mask used,
                  int need, std::vector<std::size_t>* chosen) {
  if (need == 0) return true;
  for (std::size_t i = start; i + static_cast<std::size_t>(need) <= sets.size();
       ++i) {
    if (sets[i] == 0 || (sets[i] & used)) continue;
    if (chosen) chosen->push_back(i);
    if (disjoint_dfs(sets, i + 1, used | sets[i], need - 1, chosen))
      return true;
    if (chosen) chosen->pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_disjoint_system(
    const std::vector<Mask>& sets, int want) {
  if (want <= 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> chosen;
  if (disjoint_dfs(sets, 0, 0, want, &chosen)) return chosen;
  return std::nullopt;
}

bool has_disjoint_system(const std::vector<Mask>& sets, int want) {
  if (want <= 0) return true;
  return disjoint_dfs(sets, 0, 0, want, nullptr);
}

bool has_disjoint_system_avoiding(const std::vector<Mask>& sets, Mask forced,
                                  int want) {
  if (want <= 0) return true;
  return disjoint_dfs(sets, 0, forced, want, nullptr);
}

}  // namespace util
}  // namespace focal
