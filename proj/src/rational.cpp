#include "murm/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace murm {

using boost::multiprecision::gcd;

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Rational Rational::from_i128(i128 v) {
    bool neg = v < 0;
    u128 a = neg ? (u128)(-v) : (u128)v;
    BigInt hi = (u64)(a >> 64);
    BigInt n = (hi << 64) + (u64)a;
    if (neg) n = -n;
    return Rational(n);
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

double Rational::to_double() const {
    // exact conversion of both parts, then one rounding
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Rational Rational::pow_int(long long p, long long e) {
    BigInt b = boost::multiprecision::pow(BigInt(p), (unsigned)(e < 0 ? -e : e));
    if (e >= 0) return Rational(b);
    return Rational(BigInt(1), b);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace murm
