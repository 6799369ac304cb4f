#include "hzeta/exactalg.hpp"

#include <algorithm>

namespace hz::alg {

std::string to_string(ZKind k) {
  switch (k) {
    case ZKind::Zplus: return "Zplus";
    case ZKind::Zminus: return "Zminus";
    case ZKind::Zfull: return "Zfull";
    case ZKind::Ztwisted: return "Ztwisted";
    case ZKind::ZplusPrime0: return "ZplusPrime0";
    case ZKind::ZminusPrime0: return "ZminusPrime0";
    case ZKind::Pi: return "Pi";
  }
  return "?";
}

ZKind zkind_from_string(const std::string& s) {
  for (ZKind k : {ZKind::Zplus, ZKind::Zminus, ZKind::Zfull, ZKind::Ztwisted, ZKind::ZplusPrime0,
                  ZKind::ZminusPrime0, ZKind::Pi}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::invalid_argument, "unknown symbol kind '" + s + "'");
}

int ZSymbol::weight() const {
  switch (kind) {
    case ZKind::ZplusPrime0:
    case ZKind::ZminusPrime0: return 0;
    case ZKind::Pi: return 1;
    default: return order;
  }
}

std::string ZSymbol::to_string() const {
  if (kind == ZKind::Pi) return "pi";
  if (kind == ZKind::ZplusPrime0 || kind == ZKind::ZminusPrime0) return alg::to_string(kind);
  return alg::to_string(kind) + "(" + std::to_string(order) + ")";
}

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& [s, e] : m) w += s.weight() * e;
  return w;
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : m) {
    if (!out.empty()) out += "*";
    out += s.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

void accumulate(SymPoly::Terms& terms, Monomial m, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

SymPoly::SymPoly(const CycloNumber& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

SymPoly SymPoly::var(ZSymbol s, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::invalid_argument, "SymPoly::var: negative exponent");
  SymPoly p;
  if (exponent == 0) return SymPoly(1L);
  p.terms_.emplace(Monomial{{s, exponent}}, CycloNumber(1L));
  return p;
}

SymPoly SymPoly::term(const Monomial& m, const CycloNumber& c) {
  SymPoly p;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].second <= 0 || (i > 0 && !(m[i - 1].first < m[i].first))) {
      throw Error(ErrorCode::invalid_argument, "SymPoly::term: monomial not in canonical form");
    }
  }
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

CycloNumber SymPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycloNumber() : it->second;
}

CycloNumber SymPoly::linear_coefficient(ZSymbol s) const { return coefficient(Monomial{{s, 1}}); }

bool SymPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int SymPoly::min_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) {
    int mw = monomial_weight(m);
    w = (w < 0) ? mw : std::min(w, mw);
  }
  return w;
}

int SymPoly::max_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
  return w;
}

bool SymPoly::is_homogeneous(int weight) const {
  for (const auto& [m, c] : terms_) {
    if (monomial_weight(m) != weight) return false;
  }
  return true;
}

std::set<ZSymbol> SymPoly::symbols() const {
  std::set<ZSymbol> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m) out.insert(s);
  }
  return out;
}

int SymPoly::max_order() const {
  int n = -1;
  for (const auto& s : symbols()) {
    if (s.kind != ZKind::Pi) n = std::max(n, s.order);
  }
  return n;
}

SymPoly SymPoly::substitute(ZSymbol s, const SymPoly& value) const {
  return substitute([&](ZSymbol t) -> const SymPoly* { return t == s ? &value : nullptr; });
}

SymPoly SymPoly::substitute(const std::function<const SymPoly*(ZSymbol)>& f) const {
  SymPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    SymPoly factor(c);
    for (const auto& [s, e] : m) {
      const SymPoly* v = f(s);
      if (v) {
        factor = factor * v->pow(e);
      } else {
        kept.emplace_back(s, e);
      }
    }
    for (const auto& [fm, fc] : factor.terms_) accumulate(out.terms_, monomial_product(kept, fm), fc);
  }
  return out;
}

num::BigComplex SymPoly::evaluate(const std::function<num::BigComplex(ZSymbol)>& value, int digits) const {
  PrecisionScope scope(digits + kGuardDigits);
  std::map<ZSymbol, num::BigComplex> cache;
  num::BigComplex sum(0);
  for (const auto& [m, c] : terms_) {
    num::BigComplex t = c.embed(digits);
    for (const auto& [s, e] : m) {
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, value(s)).first;
      t = t * num::pow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const CycloNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void SymPoly::add_scaled(const SymPoly& b, const CycloNumber& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : b.terms_) accumulate(terms_, m, v * c);
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) accumulate(out.terms_, monomial_product(ma, mb), ca * cb);
  }
  return out;
}

SymPoly SymPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::invalid_argument, "SymPoly::pow: negative exponent");
  SymPoly result(1L);
  SymPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    if (!m.empty()) out += "*" + monomial_to_string(m);
  }
  return out;
}

}  // namespace hz::alg
