#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flopwall/config.hpp"

namespace flopwall::ktheory {

using flopgeom::Weight;
using flopgeom::WeightPoint;
using numkernel::Complex;

/// Finite integer combination of torus characters e^{<w, (x,z)>}.
class VirtualCharacter {
 public:
  using Terms = std::map<Weight, std::int64_t>;

  VirtualCharacter() = default;
  explicit VirtualCharacter(int nparams) : nparams_(nparams) {}

  static VirtualCharacter one(int nparams) { return monomial(Weight(nparams, 0), 1); }
  static VirtualCharacter monomial(const Weight& w, std::int64_t c = 1);

  int nparams() const { return nparams_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t rank() const;

  void add_term(const Weight& w, std::int64_t c);
  VirtualCharacter dual() const;

  /// Sum of c * exp(<w, p>).
  Complex evaluate(const WeightPoint& p) const;

  /// Exact quotient by (1 - e^u), or nullopt when it does not divide.
  std::optional<VirtualCharacter> divide_one_minus(const Weight& u) const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(std::int64_t c);
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int nparams_ = 0;
  Terms terms_;
};

/// prod over the lines w of `base` of (1 - e^{-w}); base must be effective.
VirtualCharacter wedge_dual_expand(const VirtualCharacter& base);

/// Same product, with the lines given as a list.
VirtualCharacter wedge_dual_expand(const std::vector<Weight>& lines, int nparams);

/// Numeric value of prod (1 - e^{-w(p)}).
Complex wedge_dual_value(const std::vector<Weight>& lines, const WeightPoint& p);

}  // namespace flopwall::ktheory
