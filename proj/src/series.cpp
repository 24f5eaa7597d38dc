#include "ncorder/series.hpp"

#include <string>

namespace ncorder {

TruncatedSeries::TruncatedSeries(std::uint32_t truncation, SeriesMeta meta) : truncation_(truncation), meta_(meta) {}

TruncatedSeries TruncatedSeries::one(std::uint32_t truncation, SeriesMeta meta) {
  return monomial(truncation, meta, {}, 1);
}

TruncatedSeries TruncatedSeries::monomial(std::uint32_t truncation, SeriesMeta meta, SeriesKey key, const BigInt& c) {
  TruncatedSeries out(truncation, meta);
  out.add_term(key, c);
  return out;
}

BigInt TruncatedSeries::at(SeriesKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(SeriesKey key, const BigInt& c) {
  if (key.t > truncation_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const {
  if (truncation_ != other.truncation_) {
    throw SeriesMismatch("series truncations differ: " + std::to_string(truncation_) + " vs " +
                         std::to_string(other.truncation_));
  }
  if (!(meta_ == other.meta_)) throw SeriesMismatch("series metadata differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  lhs.require_compatible(rhs);
  TruncatedSeries out(lhs.truncation_, lhs.meta_);
  for (const auto& [ka, ca] : lhs.terms_) {
    const std::uint32_t room = lhs.truncation_ - ka.t;
    for (const auto& [kb, cb] : rhs.terms_) {
      // Keys are ordered by t first, so nothing later fits either.
      if (kb.t > room) break;
      out.add_term({ka.t + kb.t, ka.y + kb.y, ka.z + kb.z}, ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const BigInt& c) const {
  TruncatedSeries out(truncation_, meta_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

TruncatedSeries TruncatedSeries::shifted(SeriesKey key, const BigInt& c) const {
  TruncatedSeries out(truncation_, meta_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) {
    if (k.t + key.t > truncation_) break;
    out.terms_.emplace(SeriesKey{k.t + key.t, k.y + key.y, k.z + key.z}, v * c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::power(unsigned exponent) const {
  TruncatedSeries result = one(truncation_, meta_);
  TruncatedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::substitute_monomial(SeriesKey t_image, SeriesKey y_image, SeriesKey z_image) const {
  TruncatedSeries out(truncation_, meta_);
  for (const auto& [k, v] : terms_) {
    const std::uint64_t t = std::uint64_t{k.t} * t_image.t + std::uint64_t{k.y} * y_image.t + std::uint64_t{k.z} * z_image.t;
    if (t > truncation_) continue;
    out.add_term({static_cast<std::uint32_t>(t), k.t * t_image.y + k.y * y_image.y + k.z * z_image.y,
                  k.t * t_image.z + k.y * y_image.z + k.z * z_image.z},
                 v);
  }
  return out;
}

namespace {

std::uint32_t x_position(const TruncatedSeries& series, unsigned n) {
  const std::uint64_t t = std::uint64_t{series.meta().x_degree} * n;
  if (t > series.truncation()) {
    throw std::out_of_range("x^" + std::to_string(n) + " is beyond the series truncation (t-order " +
                            std::to_string(series.truncation()) + ")");
  }
  return static_cast<std::uint32_t>(t);
}

}  // namespace

BigInt coeff(const TruncatedSeries& series, unsigned n, unsigned j) {
  const std::uint32_t t = x_position(series, n);
  BigInt total = 0;
  for (auto it = series.terms().lower_bound({t, j, 0}); it != series.terms().end(); ++it) {
    if (it->first.t != t || it->first.y != j) break;
    total += it->second;
  }
  return total;
}

BigInt coeff(const TruncatedSeries& series, unsigned n, unsigned j, unsigned i) {
  return series.at({x_position(series, n), j, i});
}

}  // namespace ncorder
