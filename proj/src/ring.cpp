#include "stablemaps/ring.hpp"

#include <sstream>

#include <json.hpp>

#include "stablemaps/errors.hpp"

namespace stablemaps {

int Monomial::total_degree() const {
  int deg = h + psi + aux;
  for (const auto& [key, e] : t) deg += e;
  return deg;
}

bool Monomial::operator<(const Monomial& other) const {
  if (h != other.h) return h > other.h;
  if (psi != other.psi) return psi > other.psi;
  if (t != other.t) return t < other.t;
  return aux > other.aux;
}

RingExpression RingExpression::constant(const Rational& c) {
  RingExpression e;
  if (c != 0) e.terms_.emplace(Monomial{}, c);
  return e;
}

RingExpression RingExpression::h_class() {
  RingExpression e;
  e.terms_.emplace(Monomial{.h = 1}, Rational(1));
  return e;
}

RingExpression RingExpression::psi_class() {
  RingExpression e;
  e.terms_.emplace(Monomial{.psi = 1}, Rational(1));
  return e;
}

RingExpression RingExpression::t_class(const std::vector<Label>& key) {
  RingExpression e;
  Monomial m;
  m.t[key] = 1;
  e.terms_.emplace(std::move(m), Rational(1));
  return e;
}

RingExpression RingExpression::t_class(const TwoPartition& part) {
  return t_class(std::vector<Label>(part.h().begin(), part.h().end()));
}

RingExpression RingExpression::aux_t() {
  RingExpression e;
  e.terms_.emplace(Monomial{.aux = 1}, Rational(1));
  return e;
}

RingExpression RingExpression::from_term(const Monomial& mono, const Rational& c) {
  RingExpression e;
  if (c != 0) e.terms_.emplace(mono, c);
  return e;
}

void RingExpression::add_term(const Monomial& mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingExpression RingExpression::operator+(const RingExpression& other) const {
  RingExpression out = *this;
  out += other;
  return out;
}

RingExpression& RingExpression::operator+=(const RingExpression& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

RingExpression RingExpression::operator-(const RingExpression& other) const {
  return *this + other.scale(-1);
}

RingExpression RingExpression::operator*(const RingExpression& other) const {
  RingExpression out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      m.h += mb.h;
      m.psi += mb.psi;
      m.aux += mb.aux;
      for (const auto& [key, e] : mb.t) m.t[key] += e;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

RingExpression RingExpression::scale(const Rational& c) const {
  RingExpression out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
  return out;
}

RingExpression RingExpression::pow(int e) const {
  if (e < 0) throw InvalidQuery("RingExpression::pow requires e >= 0");
  RingExpression out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

RingExpression RingExpression::substitute_aux(const std::vector<Label>* key) const {
  RingExpression out;
  for (const auto& [mono, c] : terms_) {
    if (mono.aux == 0) {
      out.add_term(mono, c);
      continue;
    }
    if (key == nullptr) continue;  // t := 0 kills the term
    Monomial m = mono;
    m.t[*key] += m.aux;
    m.aux = 0;
    out.add_term(m, c);
  }
  return out;
}

bool RingExpression::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int deg = terms_.begin()->first.total_degree();
  for (const auto& [mono, c] : terms_)
    if (mono.total_degree() != deg) return false;
  return true;
}

namespace {

std::string t_key_string(const std::vector<Label>& key) {
  std::string out;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) out += ",";
    out += key[i].to_string();
  }
  return out;
}

}  // namespace

std::string RingExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    if (mono.h > 0) factors.push_back(mono.h == 1 ? "H" : "H^" + std::to_string(mono.h));
    if (mono.psi > 0)
      factors.push_back(mono.psi == 1 ? "psi" : "psi^" + std::to_string(mono.psi));
    for (const auto& [key, e] : mono.t) {
      std::string f = "T{" + t_key_string(key) + "}";
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    if (mono.aux > 0) factors.push_back(mono.aux == 1 ? "t" : "t^" + std::to_string(mono.aux));
    if (factors.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << " ";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " ";
        os << factors[i];
      }
    }
  }
  return os.str();
}

std::string RingExpression::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mono, c] : terms_) {
    nlohmann::json term;
    std::ostringstream coeff;
    coeff << c;
    term["coeff"] = coeff.str();
    term["H"] = mono.h;
    term["psi"] = mono.psi;
    nlohmann::json tmap = nlohmann::json::object();
    for (const auto& [key, e] : mono.t) tmap[t_key_string(key)] = e;
    term["T"] = std::move(tmap);
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

}  // namespace stablemaps
