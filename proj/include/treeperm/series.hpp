#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace treeperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense table of exact coefficients indexed by one to three exponents.
// Exponent d of every stored term lies in [0, bound(d)]; anything outside
// reads as zero.
class SeriesTable {
 public:
  using Exponents = std::vector<std::size_t>;

  SeriesTable(std::string name, std::vector<std::string> vars, Exponents bounds);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t dims() const noexcept { return bounds_.size(); }
  std::size_t bound(std::size_t dim) const { return bounds_.at(dim); }

  BigInt at(const Exponents& e) const;
  BigInt& ref(const Exponents& e);

  // Nonzero terms in increasing exponent order.
  std::vector<std::pair<Exponents, BigInt>> terms() const;

  // Sum of the terms whose first exponent equals `lead`.
  BigInt row_sum(std::size_t lead) const;

  // "x + 3*x^3*y^2 + ...", increasing exponents; "0" when empty.
  std::string to_text() const;
  // {"name":..,"vars":[..],"n":..,"coeffs":[[e0,e1,..,"value"],..]}
  std::string to_json() const;

  bool operator==(const SeriesTable& other) const {
    return bounds_ == other.bounds_ && coeffs_ == other.coeffs_;
  }

 private:
  std::size_t offset(const Exponents& e) const;
  bool in_bounds(const Exponents& e) const;

  std::string name_;
  std::vector<std::string> vars_;
  Exponents bounds_;
  std::vector<BigInt> coeffs_;
};

}  // namespace treeperm
