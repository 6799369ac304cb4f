#include "hzeta/sumrules.hpp"

#include <json.hpp>

#include <algorithm>

namespace hz::rules {

using nlohmann::json;

namespace {

json coefficient_json(const CycloNumber& c) {
  json powers = json::array();
  const auto& q = c.coeffs();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] != 0) powers.push_back(json::array({k, q[k].str()}));
  }
  return {{"conductor", c.conductor()}, {"powers", powers}};
}

CycloNumber coefficient_from(const json& j) {
  int m = j.at("conductor").get<int>();
  CycloNumber c(Rational(0), m);
  for (const auto& p : j.at("powers")) {
    c += CycloNumber(Rational(p.at(1).get<std::string>()), m) * CycloNumber::zeta(m, p.at(0).get<long>());
  }
  return c;
}

json poly_json(const SymPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coef] : p.terms()) {
    json factors = json::array();
    for (const auto& [sym, e] : mono) {
      factors.push_back({{"symbol", alg::to_string(sym.kind)}, {"order", sym.order}, {"exponent", e}});
    }
    terms.push_back({{"coefficient", coefficient_json(coef)}, {"monomial", factors}});
  }
  return terms;
}

SymPoly poly_from(const json& j) {
  SymPoly p;
  for (const auto& t : j) {
    alg::Monomial mono;
    for (const auto& f : t.at("monomial")) {
      mono.emplace_back(ZSymbol{alg::zkind_from_string(f.at("symbol").get<std::string>()), f.at("order").get<int>()},
                        f.at("exponent").get<int>());
    }
    std::sort(mono.begin(), mono.end());
    p += SymPoly::term(mono, coefficient_from(t.at("coefficient")));
  }
  return p;
}

}  // namespace

std::string to_json(const std::vector<SumRuleIdentity>& ids, int indent) {
  json out = json::array();
  for (const auto& id : ids) {
    out.push_back({{"N", id.N},
                   {"order", id.order},
                   {"classification", to_string(id.classification)},
                   {"basis", id.basis == Basis::plusminus ? "plusminus" : "fulltwisted"},
                   {"degenerate", id.degenerate},
                   {"exp_scale", id.exp_scale},
                   {"lhs", poly_json(id.lhs)},
                   {"rhs", poly_json(id.rhs)},
                   {"text", id.to_string()}});
  }
  return out.dump(indent);
}

std::vector<SumRuleIdentity> identities_from_json(const std::string& text) {
  try {
    std::vector<SumRuleIdentity> ids;
    auto doc = json::parse(text);
    if (!doc.is_array()) throw Error(ErrorCode::invalid_argument, "identity json: expected an array");
    for (const auto& j : doc) {
      SumRuleIdentity id;
      id.N = j.at("N").get<int>();
      id.order = j.at("order").get<int>();
      id.classification = classification_from_string(j.at("classification").get<std::string>());
      std::string basis = j.at("basis").get<std::string>();
      if (basis != "plusminus" && basis != "fulltwisted") {
        throw Error(ErrorCode::invalid_argument, "identity json: unknown basis '" + basis + "'");
      }
      id.basis = basis == "plusminus" ? Basis::plusminus : Basis::fulltwisted;
      id.degenerate = j.at("degenerate").get<bool>();
      id.exp_scale = j.at("exp_scale").get<int>();
      id.lhs = poly_from(j.at("lhs"));
      id.rhs = poly_from(j.at("rhs"));
      ids.push_back(std::move(id));
    }
    return ids;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("identity json: ") + e.what());
  }
}

std::string to_text(const std::vector<SumRuleIdentity>& ids) {
  std::string out;
  for (const auto& id : ids) out += id.to_string() + "\n";
  return out;
}

}  // namespace hz::rules
