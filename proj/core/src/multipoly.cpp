#include "flopwall/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flopwall::numkernel {

namespace {
int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void require_same(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MultiPoly: variable count mismatch");
}
}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total(a), db = total(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::linear(const std::vector<Rational>& coeffs, const Rational& c) {
  int m = static_cast<int>(coeffs.size());
  MultiPoly p = constant(m, c);
  for (int i = 0; i < m; ++i) {
    Exponent e(m, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total(terms_.rbegin()->first); }

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) == d) out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::truncated(int d) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) <= d) out.terms_.emplace(e, c);
  return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("MultiPoly: point size");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t *= pow(point[i], static_cast<unsigned>(e[i]));
    sum += t;
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
  require_same(a, b);
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = total(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (max_degree >= 0 && da + total(eb) > max_degree) break;  // grlex: later terms only grow
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::mul_truncated(a, b, -1); }

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int i = 0; i < nvars_; ++i)
      if (it->first[i]) os << "*v" << i << (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
  }
  return os.str();
}

}  // namespace flopwall::numkernel
