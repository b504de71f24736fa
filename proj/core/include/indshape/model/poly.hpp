#ifndef INDSHAPE_MODEL_POLY_HPP
#define INDSHAPE_MODEL_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indshape/fol/term.hpp"

namespace indshape::model {

using Int = boost::multiprecision::cpp_int;

namespace detail {

// Z[X] as little-endian coefficient vectors without trailing zeros; the
// zero polynomial is the empty vector. Coefficients are arbitrary-precision,
// so overflow cannot occur anywhere in the model.
using ZPoly = std::vector<Int>;

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly a);
bool zp_is_zero(const ZPoly& a);
// nonzero with positive leading coefficient
bool zp_pos_leading(const ZPoly& a);
// exact quotient num / den in Z[X], nullopt if den is zero or does not
// divide num exactly (including non-integral coefficient quotients)
std::optional<ZPoly> zp_div_exact(const ZPoly& num, const ZPoly& den);
std::string zp_to_string(const ZPoly& a);

}  // namespace detail

/**
 * Element of Z[X]+, the non-negative part of Z[X]: zero or positive leading
 * coefficient. Closed under + and *; the order p < q holds iff q - p is
 * nonzero with positive leading coefficient. This is the nonstandard model
 * used for refutation by evaluation.
 */
class PolyPlus {
 public:
  PolyPlus() = default;  // zero

  static PolyPlus constant(const Int& c);          // c >= 0
  static PolyPlus indeterminate();                 // X
  static PolyPlus from_coeffs(detail::ZPoly c);    // checks the invariant

  const detail::ZPoly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // zero: -1

  PolyPlus operator+(const PolyPlus& o) const;
  PolyPlus operator*(const PolyPlus& o) const;
  bool operator==(const PolyPlus& o) const { return c_ == o.c_; }
  bool operator!=(const PolyPlus& o) const { return c_ != o.c_; }
  bool less(const PolyPlus& o) const;

  std::string to_string() const;  // e.g. "X^2 + 2*X - 5", "0", "X"
  // Inverse of to_string; accepts signed integer-coefficient polynomials in
  // X and rejects values outside Z[X]+.
  static PolyPlus parse(std::string_view text);

 private:
  detail::ZPoly c_;
};

using ZxEnv = std::map<std::string, PolyPlus>;

// Exact interpretation of a term; throws std::out_of_range on an unbound
// variable.
PolyPlus poly_eval(const fol::TermPtr& t, const ZxEnv& env);

}  // namespace indshape::model

#endif
