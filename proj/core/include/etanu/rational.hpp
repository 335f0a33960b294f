#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "etanu/errors.hpp"

namespace etanu {

// Exact rational with 64-bit parts.  Values that appear here are ratios of
// small set sizes and homological indices, far from overflow.
class Frac {
 public:
  constexpr Frac() : num_(0), den_(1) {}
  Frac(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Frac operator+(const Frac& o) const { return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  Frac operator-(const Frac& o) const { return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  Frac operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }

  bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  bool operator<(const Frac& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Frac& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Frac& o) const { return o < *this; }
  bool operator>=(const Frac& o) const { return o <= *this; }

  std::int64_t ceil() const { return num_ >= 0 ? (num_ + den_ - 1) / den_ : num_ / den_; }
  std::int64_t floor() const { return num_ >= 0 ? num_ / den_ : (num_ - den_ + 1) / den_; }
  bool is_integer() const { return den_ == 1; }

  // Canonical serialized form, always "num/den" with den >= 1.
  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  // Short human form: "4" instead of "4/1".
  std::string pretty() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Frac parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Frac(std::stoll(text));
      return Frac(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
      throw ParseError("not a rational: '" + text + "'");
    }
  }

 private:
  void normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace etanu
