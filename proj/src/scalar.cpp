#include "fockalg/scalar.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fockalg {

std::string_view to_string(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::ExactRational:
      return "exact";
    case ScalarMode::ExactComplexRational:
      return "exact-complex";
    case ScalarMode::ComplexFloat:
      return "float";
  }
  return "?";
}

ScalarMode parse_scalar_mode(std::string_view text) {
  if (text == "exact" || text == "rational") return ScalarMode::ExactRational;
  if (text == "exact-complex" || text == "complex-rational") return ScalarMode::ExactComplexRational;
  if (text == "float") return ScalarMode::ComplexFloat;
  throw ScalarError("unknown scalar mode '" + std::string(text) + "'");
}

ScalarMode wider(ScalarMode a, ScalarMode b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ScalarError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::complex(Rational re, Rational im) {
  return Scalar(ComplexRational(std::move(re), std::move(im)));
}

Scalar Scalar::floating(double re, double im) { return Scalar(ComplexFloat(re, im)); }

namespace {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  // strip whitespace
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw ScalarError("empty scalar literal");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find_first_of("eE/") != std::string::npos)
      throw ScalarError("unsupported exact decimal literal '" + s + "'");
    bool negative = s[0] == '-';
    std::string digits = s.substr(negative || s[0] == '+' ? 1 : 0);
    dot = digits.find('.');
    std::string whole = digits.substr(0, dot) + digits.substr(dot + 1);
    std::size_t scale = digits.size() - dot - 1;
    if (whole.empty() || whole.find_first_not_of("0123456789") != std::string::npos)
      throw ScalarError("malformed decimal literal '" + s + "'");
    mpz_class num(whole, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  }

  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  try {
    r = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ScalarError("malformed rational literal '" + s + "'");
  }
  if (r.get_den() == 0) throw ScalarError("rational with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

Rational to_rational_checked(const ComplexRational& c) {
  if (c.im != 0) throw ScalarError("complex value has nonzero imaginary part");
  return c.re;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Scalar(parse_rational(text)); }

bool Scalar::is_zero(double tol) const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return sgn(*as_rational()) == 0;
    case ScalarMode::ExactComplexRational:
      return as_complex_rational()->re == 0 && as_complex_rational()->im == 0;
    case ScalarMode::ComplexFloat:
      return std::abs(*as_complex_float()) <= tol;
  }
  return false;
}

bool Scalar::is_real() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return true;
    case ScalarMode::ExactComplexRational:
      return as_complex_rational()->im == 0;
    case ScalarMode::ComplexFloat:
      return as_complex_float()->imag() == 0.0;
  }
  return false;
}

Scalar Scalar::conj() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return *this;
    case ScalarMode::ExactComplexRational:
      return Scalar(as_complex_rational()->conj());
    case ScalarMode::ComplexFloat:
      return Scalar(std::conj(*as_complex_float()));
  }
  return *this;
}

Scalar Scalar::abs2() const {
  switch (mode()) {
    case ScalarMode::ExactRational: {
      const Rational& r = *as_rational();
      return Scalar(Rational(r * r));
    }
    case ScalarMode::ExactComplexRational:
      return Scalar(ComplexRational(as_complex_rational()->abs2(), Rational(0)));
    case ScalarMode::ComplexFloat:
      return Scalar(ComplexFloat(std::norm(*as_complex_float()), 0.0));
  }
  return *this;
}

Scalar Scalar::real() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return *this;
    case ScalarMode::ExactComplexRational:
      return Scalar(ComplexRational(as_complex_rational()->re, Rational(0)));
    case ScalarMode::ComplexFloat:
      return Scalar(ComplexFloat(as_complex_float()->real(), 0.0));
  }
  return *this;
}

Scalar Scalar::imag() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return Scalar(Rational(0));
    case ScalarMode::ExactComplexRational:
      return Scalar(ComplexRational(as_complex_rational()->im, Rational(0)));
    case ScalarMode::ComplexFloat:
      return Scalar(ComplexFloat(as_complex_float()->imag(), 0.0));
  }
  return *this;
}

ComplexFloat Scalar::to_complex() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return {as_rational()->get_d(), 0.0};
    case ScalarMode::ExactComplexRational:
      return {as_complex_rational()->re.get_d(), as_complex_rational()->im.get_d()};
    case ScalarMode::ComplexFloat:
      return *as_complex_float();
  }
  return {};
}

double Scalar::to_double() const { return to_complex().real(); }

ComplexRational Scalar::exact_complex() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return {*as_rational(), Rational(0)};
    case ScalarMode::ExactComplexRational:
      return *as_complex_rational();
    case ScalarMode::ComplexFloat:
      break;
  }
  throw ScalarError("float scalar cannot be converted to an exact value");
}

Scalar Scalar::to_mode(ScalarMode target) const {
  if (target == mode()) return *this;
  switch (target) {
    case ScalarMode::ExactRational:
      if (mode() == ScalarMode::ComplexFloat)
        throw ScalarError("float scalar cannot be converted to an exact value");
      return Scalar(to_rational_checked(*as_complex_rational()));
    case ScalarMode::ExactComplexRational:
      return Scalar(exact_complex());
    case ScalarMode::ComplexFloat:
      return Scalar(to_complex());
  }
  return *this;
}

Scalar Scalar::operator-() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return Scalar(Rational(-*as_rational()));
    case ScalarMode::ExactComplexRational:
      return Scalar(ComplexRational(Rational(-as_complex_rational()->re),
                                    Rational(-as_complex_rational()->im)));
    case ScalarMode::ComplexFloat:
      return Scalar(-*as_complex_float());
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  ScalarMode m = wider(mode(), o.mode());
  if (m == ScalarMode::ExactRational) {
    std::get<Rational>(value_) += *o.as_rational();
  } else if (m == ScalarMode::ExactComplexRational) {
    value_ = exact_complex() + o.exact_complex();
  } else {
    value_ = to_complex() + o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  ScalarMode m = wider(mode(), o.mode());
  if (m == ScalarMode::ExactRational) {
    std::get<Rational>(value_) -= *o.as_rational();
  } else if (m == ScalarMode::ExactComplexRational) {
    value_ = exact_complex() - o.exact_complex();
  } else {
    value_ = to_complex() - o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  ScalarMode m = wider(mode(), o.mode());
  if (m == ScalarMode::ExactRational) {
    std::get<Rational>(value_) *= *o.as_rational();
  } else if (m == ScalarMode::ExactComplexRational) {
    value_ = exact_complex() * o.exact_complex();
  } else {
    value_ = to_complex() * o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact() ? o.is_zero() : o.to_complex() == ComplexFloat(0.0, 0.0))
    throw ScalarError("division by zero");
  ScalarMode m = wider(mode(), o.mode());
  if (m == ScalarMode::ExactRational) {
    std::get<Rational>(value_) /= *o.as_rational();
  } else if (m == ScalarMode::ExactComplexRational) {
    ComplexRational den = o.exact_complex();
    Rational n2 = den.abs2();
    ComplexRational num = exact_complex() * den.conj();
    value_ = ComplexRational(Rational(num.re / n2), Rational(num.im / n2));
  } else {
    value_ = to_complex() / o.to_complex();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  ScalarMode m = wider(a.mode(), b.mode());
  if (m == ScalarMode::ExactRational) return *a.as_rational() == *b.as_rational();
  if (m == ScalarMode::ExactComplexRational) return a.exact_complex() == b.exact_complex();
  return a.to_complex() == b.to_complex();
}

bool approx_equal(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  ComplexFloat x = a.to_complex();
  ComplexFloat y = b.to_complex();
  double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  if (base.mode() != ScalarMode::ExactRational) result = result.to_mode(base.mode());
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  switch (mode()) {
    case ScalarMode::ExactRational:
      return as_rational()->get_str();
    case ScalarMode::ExactComplexRational: {
      const auto& c = *as_complex_rational();
      if (c.im == 0) return c.re.get_str();
      std::string im = c.im.get_str();
      if (c.re == 0) return im + "*i";
      return c.re.get_str() + (sgn(c.im) > 0 ? "+" : "") + im + "*i";
    }
    case ScalarMode::ComplexFloat: {
      const auto& z = *as_complex_float();
      if (z.imag() == 0.0) return format_double(z.real());
      return format_double(z.real()) + (z.imag() >= 0 ? "+" : "") + format_double(z.imag()) +
             "*i";
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace fockalg
