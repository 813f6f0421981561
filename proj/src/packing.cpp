#include "focal/packing.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>
#include <unordered_set>

#include "focal/detect.hpp"

namespace focal {

namespace {
using util::Mask;

BigInt int_pow(int base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}
}  // namespace

TemplateFG template_F_from_G(int r, int k, bool use_bruteforced_G,
                             const MatchingOptions& mopt) {
  if (r < 3 || k < 2)
    throw std::invalid_argument("template_F_from_G: need r >= 3, k >= 2");
  TemplateFG out{r,
                 k,
                 threshold_t(r, k),
                 lambda_of(r, k),
                 UniformFamily(k, 0, {}),
                 UniformFamily(k, 0, {}),
                 0,
                 use_bruteforced_G};
  const int s = k - out.t;
  const int lambda = out.lambda;

  std::vector<std::vector<int>> g_edges;
  if (lambda == 1) {
    // m = 0: G stays empty
  } else if (s == 0) {
    g_edges.push_back({});  // the empty edge; no two disjoint 0-sets exist
  } else if (use_bruteforced_G) {
    auto bf = m_bruteforce(k, s, lambda, mopt);
    g_edges = bf.extremal.edges();
  } else {
    // formula-extremal candidates: s-sets meeting [lambda-1] versus all
    // s-subsets of the first min(s*lambda - 1, k) vertices
    std::vector<std::vector<int>> star, clique;
    const int cap = std::min(s * lambda - 1, k);
    for (const auto& e : util::all_subsets(k, s)) {
      if (e.front() <= lambda - 1) star.push_back(e);
      if (e.back() <= cap) clique.push_back(e);
    }
    g_edges = star.size() >= clique.size() ? star : clique;
  }
  out.G = UniformFamily(k, s, g_edges);
  if (has_lambda_matching(out.G, lambda))
    throw std::logic_error("template_F_from_G: G contains a lambda-matching");

  // F = C([k], t) \ { [k] \ A : A in G }
  std::vector<std::vector<int>> complements;
  for (const auto& a : out.G.edges()) {
    std::vector<int> comp;
    for (int v = 1; v <= k; ++v)
      if (!std::binary_search(a.begin(), a.end(), v)) comp.push_back(v);
    complements.push_back(std::move(comp));
  }
  std::sort(complements.begin(), complements.end());
  std::vector<std::vector<int>> f_edges;
  for (const auto& e : util::all_subsets(k, out.t))
    if (!std::binary_search(complements.begin(), complements.end(), e))
      f_edges.push_back(e);
  out.F = UniformFamily(k, out.t, std::move(f_edges));
  out.expected_f_size = binom(k, out.t) - BigInt(out.G.size());
  if (BigInt(out.F.size()) != out.expected_f_size)
    throw std::logic_error("template_F_from_G: |F| mismatch");

  // the complement family of the non-F t-sets must be lambda-matching-free
  std::vector<std::vector<int>> back;
  for (const auto& e : util::all_subsets(k, out.t)) {
    const auto& fe = out.F.edges();
    if (std::binary_search(fe.begin(), fe.end(), e)) continue;
    std::vector<int> comp;
    for (int v = 1; v <= k; ++v)
      if (!std::binary_search(e.begin(), e.end(), v)) comp.push_back(v);
    back.push_back(std::move(comp));
  }
  if (has_lambda_matching(UniformFamily(k, s, back), lambda))
    throw std::logic_error(
        "template_F_from_G: complement family has a lambda-matching");
  return out;
}

double InducedPacking::density() const {
  if (target == 0) return 0.0;
  return BigRat(BigRat(copies.size()) / target).convert_to<double>();
}

namespace {

std::vector<std::vector<int>> mapped_edges(const UniformFamily& templ,
                                           const std::vector<int>& map) {
  std::vector<std::vector<int>> out;
  out.reserve(templ.size());
  for (const auto& e : templ.edges()) {
    std::vector<int> img;
    img.reserve(e.size());
    for (int v : e) img.push_back(map[static_cast<std::size_t>(v - 1)]);
    std::sort(img.begin(), img.end());
    out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PackingCopy make_copy(const UniformFamily& templ, std::vector<int> map) {
  PackingCopy c;
  c.vertices = map;
  std::sort(c.vertices.begin(), c.vertices.end());
  c.edges = mapped_edges(templ, map);
  c.map = std::move(map);
  return c;
}

}  // namespace

bool verify_induced_packing(const InducedPacking& p, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int host_vertices = p.multipartite ? p.n * p.q : p.n;
  const int k = p.templ.ground_size();
  if (p.multipartite && k != p.n)
    return fail("multipartite template must live on [n]");

  for (std::size_t i = 0; i < p.copies.size(); ++i) {
    const auto& c = p.copies[i];
    if (static_cast<int>(c.map.size()) != k)
      return fail("copy map has wrong arity");
    std::vector<int> img = c.map;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
      return fail("copy map is not injective");
    if (img != c.vertices) return fail("vertex set disagrees with map image");
    for (int v : c.vertices)
      if (v < 1 || v > host_vertices)
        return fail("condition (i): vertex outside the host");
    if (c.edges != mapped_edges(p.templ, c.map))
      return fail("condition (ii): edge set is not the template image");
    if (p.multipartite) {
      // faithful: template vertex i lands in part i
      for (int v = 1; v <= k; ++v) {
        const int host = c.map[static_cast<std::size_t>(v - 1)];
        if ((host - 1) / p.q + 1 != v)
          return fail("faithfulness: vertex maps outside its part");
      }
    }
  }

  for (std::size_t i = 0; i < p.copies.size(); ++i)
    for (std::size_t j = i + 1; j < p.copies.size(); ++j) {
      const auto& a = p.copies[i];
      const auto& b = p.copies[j];
      for (const auto& e : a.edges)
        if (std::binary_search(b.edges.begin(), b.edges.end(), e))
          return fail("condition (iii): shared edge between copies " +
                      std::to_string(i) + "," + std::to_string(j));
      std::vector<int> inter;
      std::set_intersection(a.vertices.begin(), a.vertices.end(),
                            b.vertices.begin(), b.vertices.end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) > p.t)
        return fail("condition (iv): copies " + std::to_string(i) + "," +
                    std::to_string(j) + " overlap in more than t vertices");
      if (static_cast<int>(inter.size()) == p.t) {
        if (std::binary_search(a.edges.begin(), a.edges.end(), inter) ||
            std::binary_search(b.edges.begin(), b.edges.end(), inter))
          return fail("condition (v): t-overlap of copies " +
                      std::to_string(i) + "," + std::to_string(j) +
                      " is an edge");
      }
    }
  return true;
}

InducedPacking induced_packing_greedy(int n, const TemplateFG& templ,
                                      std::uint64_t seed,
                                      const GreedyPackingOptions& opt) {
  const int k = templ.k;
  if (n < k) throw std::invalid_argument("induced_packing_greedy: n < k");
  if (n > 64)
    throw std::invalid_argument("induced_packing_greedy: n above 64");
  InducedPacking out;
  out.multipartite = false;
  out.n = n;
  out.t = templ.t;
  out.templ = templ.F;
  out.attempts = opt.attempts;
  out.target = templ.F.size() == 0
                   ? BigRat(0)
                   : BigRat(binom(n, templ.t), BigInt(templ.F.size()));
  if (templ.F.size() == 0) return out;

  util::Rng rng(seed);
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::unordered_set<Mask> used_edges;
  std::unordered_set<Mask> used_vertex_sets;
  std::vector<Mask> copy_vmask;
  std::vector<std::vector<Mask>> copy_emask;

  for (std::size_t trial = 0; trial < opt.attempts; ++trial) {
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(verts);
    std::vector<int> map(verts.begin(), verts.begin() + k);

    auto copy = make_copy(templ.F, map);
    const Mask vmask = util::mask_of(copy.vertices);
    if (used_vertex_sets.count(vmask)) continue;
    std::vector<Mask> emask;
    emask.reserve(copy.edges.size());
    bool ok = true;
    for (const auto& e : copy.edges) {
      const Mask m = util::mask_of(e);
      if (used_edges.count(m)) {
        ok = false;
        break;
      }
      emask.push_back(m);
    }
    if (!ok) continue;
    for (std::size_t c = 0; c < copy_vmask.size() && ok; ++c) {
      const Mask inter = vmask & copy_vmask[c];
      const int overlap = std::popcount(inter);
      if (overlap > templ.t) ok = false;
      if (overlap == templ.t) {
        if (std::find(emask.begin(), emask.end(), inter) != emask.end() ||
            std::find(copy_emask[c].begin(), copy_emask[c].end(), inter) !=
                copy_emask[c].end())
          ok = false;
      }
    }
    if (!ok) continue;
    for (Mask m : emask) used_edges.insert(m);
    used_vertex_sets.insert(vmask);
    copy_vmask.push_back(vmask);
    copy_emask.push_back(std::move(emask));
    out.copies.push_back(std::move(copy));
  }
  return out;
}

InducedPacking induced_packing_greedy_faithful(
    int n, int q, const TemplateFG& templ, std::uint64_t seed,
    const GreedyPackingOptions& opt) {
  if (templ.k != n)
    throw std::invalid_argument(
        "induced_packing_greedy_faithful: template must live on [n]");
  if (n > 64)
    throw std::invalid_argument("induced_packing_greedy_faithful: n above 64");
  if (q < 1) throw std::invalid_argument("bad q");

  InducedPacking out;
  out.multipartite = true;
  out.n = n;
  out.q = q;
  out.t = templ.t;
  out.templ = templ.F;
  out.attempts = opt.attempts;
  out.target = templ.F.size() == 0
                   ? BigRat(0)
                   : BigRat(binom(n, templ.t) * int_pow(q, templ.t),
                            BigInt(templ.F.size()));
  if (templ.F.size() == 0) return out;

  // index-level masks of the template edges
  std::vector<Mask> f_masks;
  for (const auto& e : templ.F.edges()) f_masks.push_back(util::mask_of(e));
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  util::Rng rng(seed);
  std::vector<std::vector<int>> accepted;  // words

  for (std::size_t trial = 0; trial < opt.attempts; ++trial) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      word[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng.below(q));
    bool ok = true;
    for (const auto& y : accepted) {
      Mask agree = 0;
      for (int i = 0; i < n; ++i)
        if (word[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(i)])
          agree |= Mask{1} << i;
      if (agree == full) {  // duplicate word
        ok = false;
        break;
      }
      const int overlap = std::popcount(agree);
      if (overlap > templ.t) {
        ok = false;
        break;
      }
      // shared edges are exactly the template edges inside the agreement
      // set; at overlap == t condition (v) additionally forbids the
      // agreement set itself
      for (Mask fm : f_masks)
        if ((fm & ~agree) == 0) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;
    accepted.push_back(word);
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      map[static_cast<std::size_t>(i)] =
          i * q + word[static_cast<std::size_t>(i)];
    out.copies.push_back(make_copy(templ.F, map));
  }
  return out;
}

UniformFamily family_of_packing(const InducedPacking& p, int n, int k) {
  std::vector<std::vector<int>> edges;
  edges.reserve(p.copies.size());
  for (const auto& c : p.copies) edges.push_back(c.vertices);
  return UniformFamily(n, k, std::move(edges));
}

QaryCode code_of_packing(const InducedPacking& p) {
  if (!p.multipartite)
    throw std::invalid_argument("code_of_packing: not a multipartite packing");
  std::vector<std::vector<int>> words;
  for (const auto& c : p.copies) {
    std::vector<int> w(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i)
      w[static_cast<std::size_t>(i)] = c.map[static_cast<std::size_t>(i)] -
                                       i * p.q;
    words.push_back(std::move(w));
  }
  return QaryCode(p.n, p.q, std::move(words));
}

namespace {

// Walks the lower-bound proof on a concrete witness to localize which
// packing condition the witness contradicts; used only on the (never
// expected) failure path.
std::string explain_focal_witness(const InducedPacking& p,
                                  const FocalWitness& w, int k) {
  std::string out = "focal witness against induced packing:";
  int t_overlaps = 0;
  for (const auto& m : w.members) {
    int overlap = 0;
    if (w.code) {
      for (std::size_t i = 0; i < m.size(); ++i) overlap += m[i] == w.focus[i];
    } else {
      overlap = std::popcount(util::mask_of(w.focus) & util::mask_of(m));
    }
    if (overlap > p.t) return out + " condition (iv) violated";
    if (overlap == p.t) ++t_overlaps;
  }
  if (t_overlaps < lambda_of(w.r, k))
    return out + " fewer than lambda overlaps of size t (arithmetic broken)";
  return out + " lambda t-overlaps present, so condition (v) or the "
               "template's matching-freeness failed";
}

template <class Builder>
InducedPacking best_packing(int restarts, int threads, Builder&& build) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  threads = std::max(1, threads);
  std::vector<InducedPacking> results(static_cast<std::size_t>(restarts));
  if (threads == 1 || restarts == 1) {
    for (int i = 0; i < restarts; ++i)
      results[static_cast<std::size_t>(i)] = build(i);
  } else {
    std::vector<std::future<void>> futs;
    for (int w = 0; w < threads; ++w)
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (int i = w; i < restarts; i += threads)
          results[static_cast<std::size_t>(i)] = build(i);
      }));
    for (auto& f : futs) f.get();
  }
  // deterministic reduction: most copies, then canonical vertex-set order
  std::size_t best = 0;
  auto key = [](const InducedPacking& p) {
    std::vector<std::vector<int>> vs;
    for (const auto& c : p.copies) vs.push_back(c.vertices);
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  auto best_key = key(results[0]);
  for (std::size_t i = 1; i < results.size(); ++i) {
    auto k = key(results[i]);
    if (results[i].copies.size() > results[best].copies.size() ||
        (results[i].copies.size() == results[best].copies.size() &&
         k < best_key)) {
      best = i;
      best_key = std::move(k);
    }
  }
  return std::move(results[best]);
}

}  // namespace

InducedPacking best_family_packing(int r, int n, int k, std::uint64_t seed,
                                   int restarts, int threads) {
  const auto templ = template_F_from_G(r, k);
  return best_packing(restarts, threads, [&](int i) {
    return induced_packing_greedy(n, templ, seed + static_cast<std::uint64_t>(i));
  });
}

InducedPacking best_code_packing(int r, int n, int q, std::uint64_t seed,
                                 int restarts, int threads) {
  const auto templ = template_F_from_G(r, n);
  return best_packing(restarts, threads, [&](int i) {
    return induced_packing_greedy_faithful(
        n, q, templ, seed + static_cast<std::uint64_t>(i));
  });
}

UniformFamily focal_free_family_build(int r, int n, int k, std::uint64_t seed,
                                      int restarts, int threads) {
  auto packing = best_family_packing(r, n, k, seed, restarts, threads);
  auto fam = family_of_packing(packing, n, k);
  if (auto w = find_focal(fam, r))
    throw std::logic_error(explain_focal_witness(packing, *w, k));
  return fam;
}

QaryCode focal_free_code_build_packing(int r, int n, int q, std::uint64_t seed,
                                       int restarts, int threads) {
  auto packing = best_code_packing(r, n, q, seed, restarts, threads);
  auto code = code_of_packing(packing);
  if (auto w = find_focal(code, r))
    throw std::logic_error(explain_focal_witness(packing, *w, n));
  return code;
}

}  // namespace focal
