#pragma once

#include <complex>
#include <string>
#include <vector>

#include "logverlinde/rational.hpp"

namespace verlinde {

// Element of the cyclotomic field Q(zeta) with zeta = e^{i pi / p}, i.e. a
// primitive 2p-th root of unity.  Stored as a coefficient vector of length
// phi(2p), reduced modulo the 2p-th cyclotomic polynomial, so equality and
// zero tests are exact.
class CycloNum {
  public:
    CycloNum() = default;
    CycloNum(int p, const Rational& value);
    CycloNum(int p, std::vector<Rational> coeffs);  // reduces mod Phi_{2p}

    static CycloNum zero(int p) { return CycloNum(p, Rational(0)); }
    static CycloNum one(int p) { return CycloNum(p, Rational(1)); }
    // zeta^k for any integer k (k taken mod 2p).
    static CycloNum zeta_pow(int p, long k);

    int p() const { return p_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;        // all coefficients beyond degree 0 vanish
    Rational rational_part() const;  // valid when is_rational()

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator/(const CycloNum& o) const;  // exact; throws on zero divisor
    CycloNum operator*(const Rational& r) const;
    CycloNum inverse() const;

    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // Re-express in Q(zeta_{2*m*p}) via zeta_{2p} = (zeta_{2mp})^m.
    CycloNum lift(int m) const;

    // Evaluate at zeta = e^{i pi / p} with at least `precision_bits` working
    // precision (>= 53); result narrowed to machine complex.
    std::complex<double> embed(int precision_bits = 64) const;

    // Coefficient vector as "c0,c1,..." (the wire format for exact values).
    std::string to_string() const;

  private:
    int p_ = 0;
    std::vector<Rational> c_;
};

// 2 cos(pi k / p) = zeta^k + zeta^{-k}; always lies in Q(zeta_{2p}).
CycloNum two_cos(int p, long k);

// sin(pi a / p) / sin(pi b / p) = (zeta^a - zeta^{-a}) / (zeta^b - zeta^{-b}).
// Requires b != 0 mod p.
CycloNum sin_ratio(int a, int b, int p);

// sin(pi a / p) as an element of Q(zeta_{4p}), i.e. a CycloNum with parameter 2p.
CycloNum sin_in_double_field(int p, long a);

// cos(pi a / p) as an element of Q(zeta_{4p}).
CycloNum cos_in_double_field(int p, long a);

// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<Rational>& cyclotomic_polynomial(int n);

}  // namespace verlinde
