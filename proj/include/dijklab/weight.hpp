#pragma once

#include <compare>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace dijklab {

template <typename T>
concept WeightScalar = std::floating_point<T> || std::signed_integral<T>;

/// Storage encoding of the unreachable sentinel inside dense matrices.
/// Only used at the matrix boundary; everywhere else Weight carries an
/// explicit finite flag.
template <WeightScalar Scalar>
struct SentinelTraits {
  static constexpr Scalar encoded() noexcept {
    if constexpr (std::numeric_limits<Scalar>::has_infinity) {
      return std::numeric_limits<Scalar>::infinity();
    } else {
      return std::numeric_limits<Scalar>::max();
    }
  }
  static constexpr bool is_sentinel(Scalar x) noexcept { return x == encoded(); }
};

/// A distance: either a finite value or INFINITY. INFINITY compares greater
/// than every finite value and is absorbing under addition.
template <WeightScalar Scalar>
class Weight {
 public:
  using scalar_type = Scalar;

  constexpr Weight() noexcept = default;  // zero
  constexpr Weight(Scalar value) noexcept : value_(value) {}  // NOLINT(implicit)

  static constexpr Weight infinity() noexcept {
    Weight w;
    w.finite_ = false;
    return w;
  }

  /// Decodes a matrix entry, mapping the storage sentinel to INFINITY.
  static constexpr Weight from_encoded(Scalar x) noexcept {
    return SentinelTraits<Scalar>::is_sentinel(x) ? infinity() : Weight(x);
  }

  constexpr Scalar encoded() const noexcept {
    return finite_ ? value_ : SentinelTraits<Scalar>::encoded();
  }

  constexpr bool is_finite() const noexcept { return finite_; }
  constexpr bool is_infinite() const noexcept { return !finite_; }

  /// Finite value. Calling this on INFINITY is a logic error.
  constexpr Scalar value() const {
    if (!finite_) throw std::logic_error("value() on INFINITY weight");
    return value_;
  }

  friend constexpr bool operator==(const Weight& a, const Weight& b) noexcept {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend constexpr std::partial_ordering operator<=>(const Weight& a, const Weight& b) noexcept {
    if (!a.finite_ || !b.finite_) {
      return static_cast<int>(!a.finite_) <=> static_cast<int>(!b.finite_);
    }
    return a.value_ <=> b.value_;
  }

 private:
  Scalar value_{0};
  bool finite_{true};
};

/// Addition with INFINITY absorbing. Finite integer overflow throws rather
/// than wrapping or silently turning into the sentinel.
template <WeightScalar Scalar>
constexpr Weight<Scalar> saturating_add(Weight<Scalar> a, Weight<Scalar> b) {
  if (a.is_infinite() || b.is_infinite()) return Weight<Scalar>::infinity();
  if constexpr (std::is_integral_v<Scalar>) {
    Scalar out{};
    if (__builtin_add_overflow(a.value(), b.value(), &out) || SentinelTraits<Scalar>::is_sentinel(out)) {
      throw std::overflow_error("finite weight sum overflows the scalar type");
    }
    return Weight<Scalar>(out);
  } else {
    return Weight<Scalar>(a.value() + b.value());
  }
}

template <WeightScalar Scalar>
constexpr Weight<Scalar> min(Weight<Scalar> a, Weight<Scalar> b) noexcept {
  return (b < a) ? b : a;
}

}  // namespace dijklab
