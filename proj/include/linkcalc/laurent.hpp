#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>

namespace linkcalc {

using bigint = boost::multiprecision::cpp_int;

/// Integer-coefficient Laurent polynomial in the bracket variable A.
///
/// The term map (exponent -> nonzero coefficient) is the canonical form:
/// two values are equal iff their term maps are equal. All operations are
/// pure; values are safe to share across threads.
class laurent {
 public:
  laurent() = default;
  explicit laurent(long long constant);

  static laurent monomial(bigint coeff, int exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, bigint>& terms() const { return terms_; }
  bigint coeff(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;

  laurent& operator+=(const laurent& rhs);
  laurent& operator-=(const laurent& rhs);
  laurent& operator*=(const laurent& rhs);
  friend laurent operator+(laurent a, const laurent& b) { return a += b; }
  friend laurent operator-(laurent a, const laurent& b) { return a -= b; }
  friend laurent operator*(const laurent& a, const laurent& b);
  laurent operator-() const;
  bool operator==(const laurent&) const = default;

  /// Substitute A -> A^-1 (negate every exponent).
  laurent invert_variable() const;

  /// Multiply by coeff * A^exp.
  laurent shifted(int exp, const bigint& coeff = 1) const;

  std::string render_a() const;

  /// Render in t with t = A^-4, so exponent e of A prints as t^(-e/4).
  /// Half-integer exponents print as fractions ("t^3/2"). Requires every
  /// exponent of A to be even; otherwise throws errc::odd_exponent.
  std::string render_t() const;

  /// Exact inverse of render_a. Throws errc::parse_error with a position.
  static laurent parse_a(std::string_view text);

 private:
  void insert_term(int exp, const bigint& c);
  std::map<int, bigint> terms_;
};

}  // namespace linkcalc
