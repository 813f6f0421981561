#include "focal/json_io.hpp"

#include <algorithm>

namespace focal {

const char* maximality_name(Maximality m) {
  switch (m) {
    case Maximality::Exhaustive:
      return "Exhaustive";
    case Maximality::BranchAndBoundComplete:
      return "BranchAndBoundComplete";
    case Maximality::Timeout:
      return "Timeout";
  }
  return "?";
}

const char* regime_name(MatchingRegime r) {
  switch (r) {
    case MatchingRegime::TrivialLambda1:
      return "TrivialLambda1";
    case MatchingRegime::BruteForced:
      return "BruteForced";
    case MatchingRegime::FormulaOnly:
      return "FormulaOnly";
  }
  return "?";
}

Json rational_json(const BigRat& value) {
  Json j;
  j["rational"] = boost::multiprecision::numerator(value).str() + "/" +
                  boost::multiprecision::denominator(value).str();
  j["decimal"] = rat_decimal(value);
  j["floor"] = rat_floor(value).str();
  return j;
}

Json witness_json(const FocalWitness& w) {
  Json j;
  j["schema"] = "focal-lab/witness-v1";
  j["type"] = w.code ? "code" : "hypergraph";
  j["r"] = w.r;
  j["focus"] = w.focus;
  j["members"] = w.members;
  j["matchCounts"] = w.match_counts;
  // re-validate before claiming anything
  int bound = 0;
  for (int v : w.focus) bound = std::max(bound, v);
  for (const auto& m : w.members)
    for (int v : m) bound = std::max(bound, v);
  const auto chk = w.code ? is_focal_tuple_code(w.focus, w.members, bound)
                          : is_focal_tuple(w.focus, w.members, bound);
  j["verified"] = chk.focal && chk.match_counts == w.match_counts;
  return j;
}

Json matching_json(const MatchingNumberResult& m) {
  Json j;
  j["schema"] = "focal-lab/matching-v1";
  j["n"] = m.n;
  j["s"] = m.s;
  j["lambda"] = m.lambda;
  j["value"] = m.value().str();
  j["formulaValue"] = m.formula_value.str();
  j["franklBound"] = m.frankl.str();
  j["exactValue"] = m.exact_value ? Json(m.exact_value->str()) : Json(nullptr);
  j["regime"] = regime_name(m.regime);
  j["conjectural"] = m.conjectural;
  j["hypothesisHolds"] = m.hypothesis_holds;
  if (m.extremal) {
    Json edges = Json::array();
    for (const auto& e : m.extremal->edges()) edges.push_back(e);
    j["extremalFamily"] = edges;
  }
  return j;
}

Json bound_report_json(const BoundReport& rep) {
  Json j;
  j["schema"] = "focal-lab/bounds-v1";
  j["side"] = rep.code_side ? "code" : "hypergraph";
  j["r"] = rep.r;
  j["n"] = rep.n;
  if (rep.code_side)
    j["q"] = rep.q;
  else
    j["k"] = rep.k;
  j["t"] = rep.t;
  j["lambda"] = rep.lambda;
  j["matching"] = matching_json(rep.m);
  Json values = Json::array();
  for (const auto& v : rep.values) {
    Json e;
    e["name"] = v.name;
    e["value"] = rational_json(v.value);
    switch (v.kind) {
      case BoundKind::Upper:
        e["kind"] = "upper";
        break;
      case BoundKind::LowerAsymptotic:
        e["kind"] = "lowerAsymptotic";
        break;
      case BoundKind::Exact:
        e["kind"] = "exact";
        break;
      case BoundKind::LimitConstant:
        e["kind"] = "limitConstant";
        break;
    }
    e["valid"] = v.valid;
    e["reason"] = v.reason;
    e["conjectural"] = v.conjectural;
    values.push_back(e);
  }
  j["values"] = values;
  return j;
}

namespace {

template <class Result>
Json search_common(const Result& res) {
  Json j;
  j["schema"] = "focal-lab/search-v1";
  j["r"] = res.r;
  j["n"] = res.n;
  j["optimum"] = res.optimum;
  j["proofOfMaximality"] = maximality_name(res.proof);
  j["nodesExplored"] = res.nodes_explored;
  j["upperCap"] = res.upper_cap ? Json(res.upper_cap->str()) : Json(nullptr);
  return j;
}

}  // namespace

Json search_json(const HypergraphSearchResult& res) {
  Json j = search_common(res);
  j["side"] = "hypergraph";
  j["k"] = res.k;
  Json edges = Json::array();
  for (const auto& e : res.extremal.edges()) edges.push_back(e);
  j["extremal"] = edges;
  return j;
}

Json search_json(const CodeSearchResult& res) {
  Json j = search_common(res);
  j["side"] = "code";
  j["q"] = res.q;
  Json words = Json::array();
  for (const auto& w : res.extremal.words()) words.push_back(w);
  j["extremal"] = words;
  return j;
}

Json oa_certificate_json(const OaCertificate& cert) {
  Json j;
  j["schema"] = "focal-lab/oa-cert-v1";
  j["strengthOk"] = cert.strength_ok;
  j["strengthFull"] = cert.strength_full;
  j["rowSubsetsChecked"] = cert.row_subsets_checked;
  j["pairwiseOk"] = cert.pairwise_ok;
  j["maxAgreement"] = cert.max_agreement;
  return j;
}

}  // namespace focal
