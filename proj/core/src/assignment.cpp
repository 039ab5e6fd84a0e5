#include "sbnet/assignment.hpp"

namespace sbnet {

namespace {

void check_scale(int n) {
  if (n < 0 || n > 30) throw ContractError("scale n out of supported range");
}

}  // namespace

SignAssignment::SignAssignment(int n, int fill) : n_(n) {
  check_scale(n);
  if (fill != 1 && fill != -1) throw ContractError("signs must be +-1");
  table_.assign(hyperbolic_table_size(n), static_cast<std::int8_t>(fill));
}

void SignAssignment::set(int k, std::uint64_t ix, std::uint64_t iy, int value) {
  if (value != 1 && value != -1) throw ContractError("signs must be +-1");
  if (k < 0 || k > n_ || ix >= (std::uint64_t{1} << k) || iy >= (std::uint64_t{1} << (n_ - k)))
    throw ContractError("box index out of range");
  table_[hyperbolic_offset(n_, k, ix, iy)] = static_cast<std::int8_t>(value);
}

int SignAssignment::sign_of(const DyadicBox2& R) const {
  const int k = R.x_interval.level;
  if (k > n_ || R.y_interval.level != n_ - k)
    throw ContractError("box volume is not 2^-n");
  return sign(k, R.x_interval.index, R.y_interval.index);
}

DyadicBox2 SignAssignment::box(int k, std::uint64_t ix, std::uint64_t iy) const {
  return {DyadicInterval(k, ix), DyadicInterval(n_ - k, iy)};
}

SignAssignment SignAssignment::negated() const {
  SignAssignment out = *this;
  for (auto& s : out.table_) s = static_cast<std::int8_t>(-s);
  return out;
}

SignAssignment SignAssignment::random(int n, std::uint64_t seed) {
  check_scale(n);
  SignAssignment out(n);
  std::mt19937_64 rng(seed);
  std::uint64_t bits = 0;
  int avail = 0;
  for (auto& s : out.table_) {
    if (avail == 0) {
      bits = rng();
      avail = 64;
    }
    s = (bits & 1) ? std::int8_t{1} : std::int8_t{-1};
    bits >>= 1;
    --avail;
  }
  return out;
}

CoefficientAssignment::CoefficientAssignment(int n, const Rational& fill) : n_(n) {
  check_scale(n);
  table_.assign(hyperbolic_table_size(n), fill);
}

CoefficientAssignment::CoefficientAssignment(const SignAssignment& signs) : n_(signs.n()) {
  table_.reserve(hyperbolic_table_size(n_));
  for (int k = 0; k <= n_; ++k)
    for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << k); ++ix)
      for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << (n_ - k)); ++iy)
        table_.emplace_back(signs.sign(k, ix, iy));
}

void CoefficientAssignment::set(int k, std::uint64_t ix, std::uint64_t iy, Rational value) {
  if (k < 0 || k > n_ || ix >= (std::uint64_t{1} << k) || iy >= (std::uint64_t{1} << (n_ - k)))
    throw ContractError("box index out of range");
  table_[hyperbolic_offset(n_, k, ix, iy)] = std::move(value);
}

CoefficientAssignment CoefficientAssignment::random(int n, std::uint64_t seed) {
  check_scale(n);
  CoefficientAssignment out(n);
  std::mt19937_64 rng(seed);
  // Nonzero numerators in [-99,99], denominators in [1,8].
  for (auto& a : out.table_) {
    long long num = 0;
    while (num == 0) num = static_cast<long long>(rng() % 199) - 99;
    const long long den = static_cast<long long>(rng() % 8) + 1;
    a = Rational(num, den);
  }
  return out;
}

}  // namespace sbnet
