#include "confspace/morph/formal_sqrt.hpp"

#include <stdexcept>
#include <utility>

namespace confspace {

namespace {

const MultiPoly& common_base(const FormalSqrt& a, const FormalSqrt& b) {
  if (!(a.base() == b.base())) throw std::invalid_argument("formal square roots of different radicands");
  return a.base();
}

}  // namespace

FormalSqrt::FormalSqrt(MultiPoly base, MultiPoly u, MultiPoly v)
    : base_(std::move(base)), u_(std::move(u)), v_(std::move(v)) {}

MultiPoly FormalSqrt::norm() const { return u_ * u_ - v_ * v_ * base_; }

FormalSqrt operator+(const FormalSqrt& a, const FormalSqrt& b) {
  return FormalSqrt(common_base(a, b), a.u_ + b.u_, a.v_ + b.v_);
}

FormalSqrt operator-(const FormalSqrt& a, const FormalSqrt& b) {
  return FormalSqrt(common_base(a, b), a.u_ - b.u_, a.v_ - b.v_);
}

FormalSqrt operator*(const FormalSqrt& a, const FormalSqrt& b) {
  const MultiPoly& base = common_base(a, b);
  return FormalSqrt(base, a.u_ * b.u_ + a.v_ * b.v_ * base, a.u_ * b.v_ + a.v_ * b.u_);
}

FormalSqrt operator*(const FormalSqrt& a, const MultiPoly& s) {
  return FormalSqrt(a.base_, a.u_ * s, a.v_ * s);
}

bool operator==(const FormalSqrt& a, const FormalSqrt& b) {
  common_base(a, b);
  return a.u_ == b.u_ && a.v_ == b.v_;
}

std::string FormalSqrt::to_string() const {
  return "(" + u_.to_string() + ") + (" + v_.to_string() + ")*sqrt(" + base_.to_string() + ")";
}

QuadFraction::QuadFraction(FormalSqrt num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

QuadFraction operator+(const QuadFraction& a, const QuadFraction& b) {
  if (a.den_ == b.den_) return QuadFraction(a.num_ + b.num_, a.den_);
  return QuadFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QuadFraction operator-(const QuadFraction& a, const QuadFraction& b) { return a + (-b); }

QuadFraction operator*(const QuadFraction& a, const QuadFraction& b) {
  return QuadFraction(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const QuadFraction& a, const QuadFraction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool QuadFraction::is_one() const {
  return num_ == FormalSqrt(num_.base(), den_, MultiPoly());
}

}  // namespace confspace
