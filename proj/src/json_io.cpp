// Copyright 2026 The digraph-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "digraph_energy/json_io.hpp"

#include <limits>

#include "digraph_energy/errors.hpp"

namespace digraph_energy {

namespace {

Json arcs_json(std::span<const Arc> arcs) {
  Json out = Json::array();
  for (const Arc& arc : arcs) out.push_back({arc.from, arc.to});
  return out;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json ratio_json(const Ratio& r) { return r.to_string(); }

Json parameters(const Structure& s) {
  struct Visitor {
    Json operator()(const NotApplicable&) const { return Json::object(); }
    Json operator()(const RRegular& x) const { return {{"r", x.r}}; }
    Json operator()(const SemiregularBipartite& x) const { return {{"r1", x.r1}, {"r2", x.r2}}; }
    Json operator()(const Complete& x) const { return {{"n", x.n}}; }
    Json operator()(const PerfectMatchingUnion& x) const { return {{"copies", x.copies}}; }
    Json operator()(const StronglyRegular& x) const {
      const auto& p = x.parameters;
      return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
    }
    Json operator()(const PseudoRegular& x) const { return {{"p", ratio_json(x.p)}}; }
    Json operator()(const PseudoSemiregularBipartite& x) const {
      return {{"p1", ratio_json(x.p1)}, {"p2", ratio_json(x.p2)}};
    }
    Json operator()(const EmptyGraph& x) const { return {{"n", x.n}}; }
    Json operator()(const NoStructure&) const { return Json::object(); }
  };
  return std::visit(Visitor{}, s);
}

}  // namespace

Json to_json(const Digraph& d) {
  return {{"n", d.order()}, {"a", d.arc_count()}, {"arcs", arcs_json(d.arcs())}};
}

Digraph digraph_from_json(const Json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& pair : j.at("arcs")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("arc must be a [from, to] pair", 0);
      arcs.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Digraph(j.at("n").get<int>(), std::move(arcs));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed digraph JSON: ") + e.what(), 0);
  }
}

Json to_json(const ClosedWalkProfile& p) {
  return {{"c2_seq", p.c2_seq},       {"t2_seq", p.t2_seq},       {"a", p.a},
          {"c2", p.c2_total},         {"sum_c2_sq", p.sum_c2_sq}, {"sum_t2_sq", p.sum_t2_sq},
          {"q", walk_ratio(p)}};
}

Json to_json(const CharPoly& phi) {
  Json coeffs = Json::array();
  for (const BigInt& c : phi.coeffs) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      coeffs.push_back(c.convert_to<std::int64_t>());
    } else {
      coeffs.push_back(c.str());
    }
  }
  return {{"coefficients", coeffs}, {"text", phi.to_string()}};
}

Json to_json(const Spectrum& s) {
  Json values = Json::array();
  for (const auto& z : s.eigenvalues) values.push_back({z.real(), z.imag()});
  return {{"eigenvalues", values}, {"rho", s.rho},           {"energy", s.energy},
          {"sum_re_sq", s.sum_re_sq}, {"sum_im_sq", s.sum_im_sq}, {"residual", s.residual}};
}

Json to_json(const BoundReport& r) {
  Json out;
  for (BoundId id : kAllBounds) out[std::string(bound_name(id))] = optional_number(r.value(id));
  out["q"] = r.q;
  out["rho"] = r.rho;
  out["energy"] = r.energy;
  out["in_gamma"] = r.in_gamma;
  out["chain_ok"] = r.chain_ok;
  out["absent"] = r.absent;
  out["chain_failures"] = r.chain_failures;
  return out;
}

Json to_json(const StructureVerdict& v) {
  return {{"kind", std::string(v.kind())},
          {"parameters", parameters(v.structure)},
          {"predicted_equality", v.predicted_equality},
          {"note", v.note},
          {"extra_noncycle_arcs", arcs_json(v.extra_noncycle_arcs)}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::object();
  for (const auto& [name, t] : r.checks) {
    checks[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
  }
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"index", v.index},
                          {"digraph", v.digraph},
                          {"check", v.check},
                          {"detail", v.detail},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"gap", v.gap}});
  }
  return {{"n", r.n},
          {"mode", r.mode},
          {"digraphs_checked", r.digraphs_checked},
          {"checks", checks},
          {"violations", violations},
          {"bound_inapplicable", r.bound_inapplicable},
          {"elapsed_seconds", r.elapsed_seconds},
          {"ok", r.ok()}};
}

}  // namespace digraph_energy
