#include "hypants/complex_value.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hypants {

ComplexValue::ComplexValue(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("ComplexValue: finite value has non-finite coordinates");
  }
}

ComplexValue ComplexValue::infinity() {
  ComplexValue v;
  v.infinite_ = true;
  return v;
}

Complex ComplexValue::value() const {
  if (infinite_) throw std::domain_error("ComplexValue: value() called on infinity");
  return z_;
}

bool ComplexValue::approx_equal(const ComplexValue& other, double eps) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  const double scale = std::max(std::abs(z_), std::abs(other.z_));
  return std::abs(z_ - other.z_) <= scaled_tolerance(eps, scale);
}

std::string ComplexValue::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(12);
  os << z_.real() << (z_.imag() < 0 ? "-" : "+") << std::abs(z_.imag()) << "i";
  return os.str();
}

}  // namespace hypants
