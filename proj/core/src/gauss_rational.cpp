#include "mackey/gauss_rational.hpp"

#include <sstream>

#include "mackey/errors.hpp"

namespace mackey {

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational n = o.norm();
  if (n == 0) throw InvalidArgument("division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string GaussRational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  if (z.im == 0) return os << z.re;
  if (z.re == 0) return os << z.im << "i";
  return os << "(" << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
}

GaussRational pow(const GaussRational& z, int e) {
  if (e < 0) throw InvalidArgument("negative exponent");
  GaussRational acc(1);
  for (int k = 0; k < e; ++k) acc *= z;
  return acc;
}

}  // namespace mackey
