#ifndef FOCKALG_SCALAR_HPP
#define FOCKALG_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace fockalg {

using Rational = mpq_class;
using ComplexFloat = std::complex<double>;

/// Exact complex number with rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  ComplexRational conj() const { return {re, Rational(-im)}; }
  Rational abs2() const { return Rational(re * re + im * im); }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

enum class ScalarMode { ExactRational = 0, ExactComplexRational = 1, ComplexFloat = 2 };

std::string_view to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative tolerance used for zero tests on floating scalars.
inline constexpr double kDefaultTolerance = 1e-9;

/// A value from the scalar tower. Arithmetic promotes to the wider mode
/// (rational < complex rational < complex float); nothing ever narrows
/// implicitly.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(Rational v) : value_(std::move(v)) {}
  Scalar(ComplexRational v) : value_(std::move(v)) {}
  Scalar(ComplexFloat v) : value_(v) {}

  /// num/den in lowest terms; throws on a zero denominator.
  static Scalar rational(long num, long den);
  static Scalar complex(Rational re, Rational im);
  static Scalar floating(double re, double im = 0.0);

  /// Parses "n", "n/d" or an exact decimal such as "1.25".
  static Scalar parse(std::string_view text);

  ScalarMode mode() const { return static_cast<ScalarMode>(value_.index()); }
  bool is_exact() const { return mode() != ScalarMode::ComplexFloat; }

  /// Exact modes compare literally against zero; floats use |v| <= tol.
  bool is_zero(double tol = kDefaultTolerance) const;
  bool is_real() const;

  Scalar conj() const;
  /// |v|^2, exact for exact modes.
  Scalar abs2() const;
  Scalar real() const;
  Scalar imag() const;

  ComplexFloat to_complex() const;
  double to_double() const;  // real part

  /// Converts to `target`. Float -> exact and complex -> real with nonzero
  /// imaginary part are rejected.
  Scalar to_mode(ScalarMode target) const;

  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  const ComplexRational* as_complex_rational() const {
    return std::get_if<ComplexRational>(&value_);
  }
  const ComplexFloat* as_complex_float() const { return std::get_if<ComplexFloat>(&value_); }

  /// Exact form as ComplexRational (throws for floats).
  ComplexRational exact_complex() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality after promotion. Floats compare bit-for-bit; use
  /// approx_equal for tolerant comparisons.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable text: "n/d", "re+im*i" (exact complex), or decimal.
  std::string str() const;

 private:
  std::variant<Rational, ComplexRational, ComplexFloat> value_;
};

ScalarMode wider(ScalarMode a, ScalarMode b);
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance);

Scalar pow(const Scalar& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace fockalg

#endif  // FOCKALG_SCALAR_HPP
