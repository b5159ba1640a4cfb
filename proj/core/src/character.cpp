#include "flopwall/character.hpp"

#include <map>

#include <sstream>
#include <stdexcept>

namespace flopwall::ktheory {

VirtualCharacter VirtualCharacter::monomial(const Weight& w, std::int64_t c) {
  VirtualCharacter v(static_cast<int>(w.size()));
  v.add_term(w, c);
  return v;
}

std::int64_t VirtualCharacter::rank() const {
  std::int64_t s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

void VirtualCharacter::add_term(const Weight& w, std::int64_t c) {
  if (static_cast<int>(w.size()) != nparams_) throw std::invalid_argument("VirtualCharacter: weight size");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VirtualCharacter VirtualCharacter::dual() const {
  VirtualCharacter out(nparams_);
  for (const auto& [w, c] : terms_) out.add_term(flopgeom::operator-(w), c);
  return out;
}

Complex VirtualCharacter::evaluate(const WeightPoint& p) const {
  // Expanded products of (1 - e^w) cancel heavily at small weights; extended precision keeps the digits.
  using LC = std::complex<long double>;
  LC s = 0.0L;
  for (const auto& [w, c] : terms_) {
    LC a = 0.0L;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) a += static_cast<long double>(w[i]) * LC(p[i].real(), p[i].imag());
    s += static_cast<long double>(c) * std::exp(a);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::optional<VirtualCharacter> VirtualCharacter::divide_one_minus(const Weight& u) const {
  if (flopgeom::is_zero(u)) return std::nullopt;
  std::size_t i0 = 0;
  while (u[i0] == 0) ++i0;
  auto floor_div = [](long a, long b) {
    long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
  };
  // Split into cosets b + Z u; on each coset this is division of a Laurent
  // polynomial in one variable t by 1 - t, solved by partial sums.
  std::map<Weight, std::map<long, std::int64_t>> cosets;
  for (const auto& [e, c] : terms_) {
    long k = floor_div(e[i0], u[i0]);
    Weight b = e;
    for (std::size_t i = 0; i < b.size(); ++i) b[i] -= static_cast<int>(k * u[i]);
    cosets[b][k] += c;
  }
  VirtualCharacter quot(nparams_);
  for (const auto& [b, line] : cosets) {
    std::int64_t partial = 0;
    long prev = line.begin()->first;
    for (const auto& [k, c] : line) {
      if (partial != 0)
        for (long j = prev; j < k; ++j) {
          Weight e = b;
          for (std::size_t i = 0; i < e.size(); ++i) e[i] += static_cast<int>(j * u[i]);
          quot.add_term(e, partial);
        }
      partial += c;
      prev = k;
    }
    if (partial != 0) return std::nullopt;
  }
  return quot;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  if (nparams_ == 0) nparams_ = o.nparams_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  if (nparams_ == 0) nparams_ = o.nparams_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= k;
  return *this;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) {
  VirtualCharacter out(a.nparams_ ? a.nparams_ : b.nparams_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(flopgeom::operator+(wa, wb), ca * cb);
  return out;
}

std::string VirtualCharacter::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << c << "*e^(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    first = false;
  }
  return os.str();
}

VirtualCharacter wedge_dual_expand(const VirtualCharacter& base) {
  VirtualCharacter out = VirtualCharacter::one(base.nparams());
  for (const auto& [w, c] : base.terms()) {
    if (c < 0) throw std::invalid_argument("wedge_dual_expand: base must be effective");
    VirtualCharacter f = VirtualCharacter::one(base.nparams());
    f.add_term(flopgeom::operator-(w), -1);
    for (std::int64_t k = 0; k < c; ++k) out = out * f;
  }
  return out;
}

VirtualCharacter wedge_dual_expand(const std::vector<Weight>& lines, int nparams) {
  VirtualCharacter out = VirtualCharacter::one(nparams);
  for (const auto& w : lines) {
    VirtualCharacter f = VirtualCharacter::one(nparams);
    f.add_term(flopgeom::operator-(w), -1);
    out = out * f;
  }
  return out;
}

Complex wedge_dual_value(const std::vector<Weight>& lines, const WeightPoint& p) {
  Complex v = 1.0;
  for (const auto& w : lines) v *= 1.0 - std::exp(-flopgeom::evaluate(w, p));
  return v;
}

}  // namespace flopwall::ktheory
