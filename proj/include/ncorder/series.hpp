#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "ncorder/bigint.hpp"

namespace ncorder {

/// Which generating function a series encodes; decides how x^n is read off.
enum class SeriesFamily { Plain, B, A };

/// Bookkeeping shared by the operands of every series operation.
///
/// `x_degree` is the t-degree of one power of x: r+s for B, lcm(r,s) for A,
/// 1 for a plain series in x.
struct SeriesMeta {
  SeriesFamily family = SeriesFamily::Plain;
  unsigned r = 1;
  unsigned s = 1;
  unsigned x_degree = 1;

  friend bool operator==(const SeriesMeta&, const SeriesMeta&) = default;
};

/// Exponents of t^t y^y z^z.
struct SeriesKey {
  std::uint32_t t = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

class SeriesMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Power series in t with polynomial markers y, z and exact coefficients,
/// truncated above a fixed t-degree. Zero coefficients are never stored.
class TruncatedSeries {
 public:
  using Terms = std::map<SeriesKey, BigInt>;

  explicit TruncatedSeries(std::uint32_t truncation = 0, SeriesMeta meta = {});

  static TruncatedSeries one(std::uint32_t truncation, SeriesMeta meta = {});
  /// c * t^t y^y z^z, or zero when the monomial lies beyond the truncation.
  static TruncatedSeries monomial(std::uint32_t truncation, SeriesMeta meta, SeriesKey key, const BigInt& c = 1);

  std::uint32_t truncation() const { return truncation_; }
  const SeriesMeta& meta() const { return meta_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt at(SeriesKey key) const;
  void add_term(SeriesKey key, const BigInt& c);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  TruncatedSeries scaled(const BigInt& c) const;
  /// Product with c * t^t y^y z^z without a full multiplication.
  TruncatedSeries shifted(SeriesKey key, const BigInt& c = 1) const;
  TruncatedSeries power(unsigned exponent) const;

  /// Replaces t, y, z by the given monomials (the zero key means 1).
  TruncatedSeries substitute_monomial(SeriesKey t_image, SeriesKey y_image, SeriesKey z_image) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_compatible(const TruncatedSeries& other) const;

  std::uint32_t truncation_;
  SeriesMeta meta_;
  Terms terms_;
};

/// Coefficient of x^n y^j (resp. x^n y^j z^i). Throws std::out_of_range when
/// x^n lies beyond the truncation.
BigInt coeff(const TruncatedSeries& series, unsigned n, unsigned j);
BigInt coeff(const TruncatedSeries& series, unsigned n, unsigned j, unsigned i);

}  // namespace ncorder
