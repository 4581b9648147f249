#include "logverlinde/cyclo.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace verlinde {

namespace {

// Exact polynomial division, asserting zero remainder.
std::vector<Rational> poly_div_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Rational c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::map<int, std::vector<Rational>> g_phi_cache;
std::mutex g_phi_mutex;

const std::vector<Rational>& cyclotomic_unlocked(int n) {
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    std::vector<Rational> poly(n + 1, Rational(0));
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_unlocked(d));
    }
    // map nodes are pointer-stable, so returned references stay valid
    return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_unlocked(n);
}

CycloNum::CycloNum(int p, const Rational& value) : p_(p) {
    if (p < 1) throw std::invalid_argument("CycloNum: p must be >= 1");
    c_.assign(cyclotomic_polynomial(2 * p).size() - 1, Rational(0));
    c_[0] = value;
    c_[0].canonicalize();
}

CycloNum::CycloNum(int p, std::vector<Rational> coeffs) : p_(p) {
    if (p < 1) throw std::invalid_argument("CycloNum: p must be >= 1");
    const auto& mod = cyclotomic_polynomial(2 * p);
    const size_t deg = mod.size() - 1;
    while (coeffs.size() > deg) {
        Rational lead = coeffs.back();
        coeffs.pop_back();
        if (lead != 0) {
            size_t k = coeffs.size() - deg;
            for (size_t j = 0; j < deg; ++j) coeffs[k + j] -= lead * mod[j];
        }
    }
    coeffs.resize(deg, Rational(0));
    for (auto& c : coeffs) c.canonicalize();
    c_ = std::move(coeffs);
}

CycloNum CycloNum::zeta_pow(int p, long k) {
    long n = 2 * p;
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return CycloNum(p, std::move(c));
}

bool CycloNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycloNum::rational_part() const {
    if (!is_rational()) throw std::domain_error("CycloNum: not a rational value");
    return c_.empty() ? Rational(0) : c_[0];
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycloNum: mismatched field parameter");
    CycloNum r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycloNum: mismatched field parameter");
    std::vector<Rational> prod(2 * c_.size(), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return CycloNum(p_, std::move(prod));
}

CycloNum CycloNum::operator*(const Rational& r) const {
    CycloNum out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

namespace {

int poly_deg(const std::vector<Rational>& v) {
    for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
        if (v[d] != 0) return d;
    return -1;
}

}  // namespace

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum: division by zero");
    // Extended Euclid in Q[x] against Phi_{2p}; the gcd is a nonzero constant
    // because Phi_{2p} is irreducible over Q.
    const auto& mod = cyclotomic_polynomial(2 * p_);
    std::vector<Rational> r0(mod.begin(), mod.end()), r1 = c_;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
    while (poly_deg(r1) > 0) {
        int d0 = poly_deg(r0), d1 = poly_deg(r1);
        std::vector<Rational> quot(std::max(d0 - d1 + 1, 0), Rational(0));
        auto rr = r0;
        while (poly_deg(rr) >= d1) {
            int sh = poly_deg(rr) - d1;
            Rational cf = rr[poly_deg(rr)] / r1[d1];
            quot[sh] += cf;
            for (int j = 0; j <= d1; ++j) rr[sh + j] -= cf * r1[j];
        }
        auto snew = s0;
        snew.resize(std::max(snew.size(), s1.size() + quot.size()), Rational(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= quot[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    if (poly_deg(r1) != 0) throw std::domain_error("CycloNum: division by zero");
    Rational lead = r1[0];
    for (auto& x : s1) x /= lead;
    return CycloNum(p_, std::move(s1));
}

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

bool CycloNum::operator==(const CycloNum& o) const { return p_ == o.p_ && c_ == o.c_; }

CycloNum CycloNum::lift(int m) const {
    if (m < 1) throw std::invalid_argument("CycloNum::lift: m must be >= 1");
    if (m == 1) return *this;
    std::vector<Rational> out(c_.size() * m, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i * m] = c_[i];
    return CycloNum(m * p_, std::move(out));
}

std::complex<double> CycloNum::embed(int precision_bits) const {
    if (precision_bits < 53) throw std::invalid_argument("CycloNum::embed: precision must be >= 53");
    mpfr_prec_t prec = precision_bits + 16;
    mpfr_t pi, ang, co, si, re, im, t, coef;
    mpfr_inits2(prec, pi, ang, co, si, re, im, t, coef, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpq_t q;
    mpq_init(q);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpq_set(q, c_[k].get_mpq_t());
        mpfr_set_q(coef, q, MPFR_RNDN);
        // zeta^k = cos(k pi / p) + i sin(k pi / p)
        mpfr_mul_si(ang, pi, static_cast<long>(k), MPFR_RNDN);
        mpfr_div_si(ang, ang, p_, MPFR_RNDN);
        mpfr_sin_cos(si, co, ang, MPFR_RNDN);
        mpfr_mul(t, coef, co, MPFR_RNDN);
        mpfr_add(re, re, t, MPFR_RNDN);
        mpfr_mul(t, coef, si, MPFR_RNDN);
        mpfr_add(im, im, t, MPFR_RNDN);
    }
    mpq_clear(q);
    std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(pi, ang, co, si, re, im, t, coef, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i].get_str();
    }
    return os.str();
}

CycloNum two_cos(int p, long k) { return CycloNum::zeta_pow(p, k) + CycloNum::zeta_pow(p, -k); }

CycloNum sin_ratio(int a, int b, int p) {
    if (b % p == 0) throw std::domain_error("sin_ratio: singular denominator (b = 0 mod p)");
    CycloNum num = CycloNum::zeta_pow(p, a) - CycloNum::zeta_pow(p, -a);
    CycloNum den = CycloNum::zeta_pow(p, b) - CycloNum::zeta_pow(p, -b);
    return num / den;
}

CycloNum sin_in_double_field(int p, long a) {
    // sin(pi a / p) = -i (zeta'^{2a} - zeta'^{-2a}) / 2 with zeta' = e^{i pi/(2p)},
    // and -i = -zeta'^{p}.
    int pp = 2 * p;
    CycloNum t = CycloNum::zeta_pow(pp, 2 * a) - CycloNum::zeta_pow(pp, -2 * a);
    return t * CycloNum::zeta_pow(pp, p) * Rational(-1, 2);
}

CycloNum cos_in_double_field(int p, long a) {
    int pp = 2 * p;
    return two_cos(pp, 2 * a) * Rational(1, 2);
}

}  // namespace verlinde
