#include "logverlinde/modular.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "logverlinde/hopf.hpp"
#include "logverlinde/linalg.hpp"

namespace verlinde {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

int sgn_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Tau Tau::parse(const std::string& s) {
    // accepts "a+bi", "a-bi", "bi", "a" (with optional spaces)
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("Tau::parse: empty string");
    double re = 0, im = 0;
    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        // split at the last +/- that is not the leading sign or an exponent sign
        size_t split = std::string::npos;
        for (size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        try {
            if (split == std::string::npos) {
                im = t.empty() ? 1.0 : std::stod(t);
            } else {
                re = std::stod(t.substr(0, split));
                std::string imp = t.substr(split);
                im = (imp == "+" || imp == "-") ? (imp == "+" ? 1.0 : -1.0) : std::stod(imp);
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("Tau::parse: cannot parse '" + s + "'");
        }
    } else {
        try {
            re = std::stod(t);
        } catch (const std::exception&) {
            throw std::invalid_argument("Tau::parse: cannot parse '" + s + "'");
        }
    }
    if (im <= 0) throw std::invalid_argument("Tau::parse: imaginary part must be positive");
    return {re, im};
}

std::complex<double> eta(Tau tau, int trunc) {
    if (trunc < 1) throw std::invalid_argument("eta: trunc must be >= 1");
    cplx t = tau.val();
    cplx q = std::exp(cplx(0, 2 * kPi) * t);
    cplx out = std::exp(cplx(0, kPi / 12.0) * t);
    cplx qn = 1.0;
    for (int n = 1; n <= trunc; ++n) {
        qn *= q;
        out *= (1.0 - qn);
    }
    return out;
}

namespace {

// window so that the Gaussian tail drops below 1e-30
long theta_window(int p, double im) {
    double bound = 30.0 * std::log(10.0) * 2.0 * p / (kPi * im);
    return static_cast<long>(std::sqrt(bound)) / (2 * p) + 2;
}

}  // namespace

std::complex<double> theta(int s, int p, Tau tau) {
    cplx t = tau.val();
    long N = theta_window(p, tau.im);
    cplx out = 0;
    for (long n = -N; n <= N; ++n) {
        double j = static_cast<double>(s + 2.0 * p * n);
        out += std::exp(cplx(0, kPi) * t * (j * j / (2.0 * p)));
    }
    return out;
}

std::complex<double> theta_prime(int s, int p, Tau tau) {
    cplx t = tau.val();
    long N = theta_window(p, tau.im);
    cplx out = 0;
    for (long n = -N; n <= N; ++n) {
        double j = static_cast<double>(s + 2.0 * p * n);
        out += (j / (2.0 * p)) * std::exp(cplx(0, kPi) * t * (j * j / (2.0 * p)));
    }
    return out;
}

std::string CharId::str() const {
    switch (kind) {
        case CharKind::ChX: return std::string("ch[X") + (sign > 0 ? "+" : "-") + std::to_string(index) + "]";
        case CharKind::ChP: return std::string("ch[P") + (sign > 0 ? "+" : "-") + std::to_string(index) + "]";
        case CharKind::Pch: return std::string("pch[X") + (sign > 0 ? "+" : "-") + std::to_string(index) + "]";
        case CharKind::SfCh: return std::string("ch[SF") + (sign > 0 ? "+" : "-") + "]";
        case CharKind::SfChTheta: return std::string("ch[SFt") + (sign > 0 ? "+" : "-") + "]";
        case CharKind::SfHat: return std::string("ch[SFhat") + (sign > 0 ? "+" : "-") + "]";
    }
    return "?";
}

std::complex<double> char_value(const CharId& c, int p, Tau tau, int trunc) {
    cplx et = eta(tau, trunc);
    switch (c.kind) {
        case CharKind::ChX: {
            int s = c.index;
            if (c.sign > 0) return ((double(s) / p) * theta(p - s, p, tau) + 2.0 * theta_prime(p - s, p, tau)) / et;
            return ((double(s) / p) * theta(s, p, tau) - 2.0 * theta_prime(s, p, tau)) / et;
        }
        case CharKind::ChP: {
            int s = (c.sign > 0) ? c.index : p - c.index;  // ch[P-_{p-s}] = ch[P+_s]
            CharId xp{CharKind::ChX, +1, s};
            CharId xm{CharKind::ChX, -1, p - s};
            return 2.0 * char_value(xp, p, tau, trunc) + 2.0 * char_value(xm, p, tau, trunc);
        }
        case CharKind::Pch: {
            int s = c.index;
            cplx i4tau = cplx(0, 4) * tau.val();
            if (c.sign > 0) return -i4tau * theta_prime(p - s, p, tau) / et;
            return i4tau * theta_prime(s, p, tau) / et;
        }
        default:
            throw std::invalid_argument("char_value: not a W_p character id");
    }
}

std::complex<double> sf_char_value(const CharId& c, int d, Tau tau, int trunc) {
    cplx e1 = eta(tau, trunc);
    cplx e2 = eta({2 * tau.re, 2 * tau.im}, trunc);
    cplx eh = eta({tau.re / 2, tau.im / 2}, trunc);
    cplx ratio = std::pow(e2 / e1, 2 * d);
    switch (c.kind) {
        case CharKind::SfCh:
            return (ratio + double(c.sign) * std::pow(e1, 2 * d)) / 2.0;
        case CharKind::SfChTheta:
            return (std::pow(e1, 4 * d) / (std::pow(e2, 2 * d) * std::pow(eh, 2 * d)) +
                    double(c.sign) * std::pow(eh / e1, 2 * d)) /
                   2.0;
        case CharKind::SfHat:
            return std::pow(2.0, 2 * d - 1) * ratio;
        default:
            throw std::invalid_argument("sf_char_value: not an SF character id");
    }
}

namespace {

std::vector<CharId> schi_basis(int p) {
    std::vector<CharId> b;
    for (int l = 1; l < p; ++l) b.push_back({CharKind::ChP, +1, l});
    for (int l = 1; l < p; ++l) b.push_back({CharKind::ChX, +1, l});
    for (int l = 1; l < p; ++l) b.push_back({CharKind::Pch, +1, l});
    b.push_back({CharKind::ChX, +1, p});
    b.push_back({CharKind::ChX, -1, p});
    return b;
}

}  // namespace

std::vector<LawResidual> verify_s_transform_wp(int p, Tau tau, double tol, int trunc) {
    if (tau.im < 0.2 || tau.s_transform().im < 0.2)
        throw std::invalid_argument("verify_s_transform_wp: tau too close to the real axis");
    std::vector<LawResidual> out;
    Tau st = tau.s_transform();
    const double scale = 1.0 / std::sqrt(2.0 * p);

    double worst_pch = 0, worst_chx = 0, worst_chp = 0;
    for (int s = 1; s < p; ++s) {
        // pch[X+_s](-1/tau) = (4/sqrt(2p)) sum_l (-1)^{l+s+p} sin(pi l s/p) (ch[X+_l] - l/(2p) ch[P+_l])
        cplx rhs = 0;
        for (int l = 1; l < p; ++l) {
            double coeff = 4.0 * sgn_pow(l + s + p) * std::sin(kPi * l * s / p);
            rhs += coeff * (char_value({CharKind::ChX, +1, l}, p, tau, trunc) -
                            (double(l) / (2 * p)) * char_value({CharKind::ChP, +1, l}, p, tau, trunc));
        }
        rhs *= scale;
        worst_pch = std::max(worst_pch, std::abs(char_value({CharKind::Pch, +1, s}, p, st, trunc) - rhs));

        // ch[X+_s](-1/tau) = (1/sqrt(2p)) [ (s/p) ch[X+_p] + (-1)^{p+s} (s/p) ch[X-_p]
        //    + sum_l (-1)^{p+s+l} ((s/p) cos(pi s l/p) ch[P+_l] + sin(pi s l/p) pch[X+_l]) ]
        rhs = (double(s) / p) * char_value({CharKind::ChX, +1, p}, p, tau, trunc) +
              double(sgn_pow(p + s)) * (double(s) / p) * char_value({CharKind::ChX, -1, p}, p, tau, trunc);
        for (int l = 1; l < p; ++l) {
            rhs += double(sgn_pow(p + s + l)) *
                   ((double(s) / p) * std::cos(kPi * s * l / p) * char_value({CharKind::ChP, +1, l}, p, tau, trunc) +
                    std::sin(kPi * s * l / p) * char_value({CharKind::Pch, +1, l}, p, tau, trunc));
        }
        rhs *= scale;
        worst_chx = std::max(worst_chx, std::abs(char_value({CharKind::ChX, +1, s}, p, st, trunc) - rhs));

        // ch[P+_s](-1/tau) = (1/sqrt(2p)) [ 2 ch[X+_p] + 2 (-1)^{p+s} ch[X-_p]
        //    + sum_l (-1)^{p+l+s} 2 cos(pi l s/p) ch[P+_l] ]
        rhs = 2.0 * char_value({CharKind::ChX, +1, p}, p, tau, trunc) +
              2.0 * sgn_pow(p + s) * char_value({CharKind::ChX, -1, p}, p, tau, trunc);
        for (int l = 1; l < p; ++l)
            rhs += 2.0 * sgn_pow(p + l + s) * std::cos(kPi * l * s / p) *
                   char_value({CharKind::ChP, +1, l}, p, tau, trunc);
        rhs *= scale;
        worst_chp = std::max(worst_chp, std::abs(char_value({CharKind::ChP, +1, s}, p, st, trunc) - rhs));
    }
    out.push_back({"pch[X+_s] S-law", worst_pch, worst_pch < tol});
    out.push_back({"ch[X+_s] S-law", worst_chx, worst_chx < tol});
    out.push_back({"ch[P+_s] S-law", worst_chp, worst_chp < tol});
    return out;
}

std::vector<LawResidual> verify_sf_modular(int d, Tau tau, double tol, int trunc) {
    std::vector<LawResidual> out;
    Tau st = tau.s_transform();
    Tau tt{tau.re + 1, tau.im};
    auto chi = [&](int sign, Tau t) { return sf_char_value({CharKind::SfCh, sign, 1}, d, t, trunc); };
    auto chit = [&](int sign, Tau t) { return sf_char_value({CharKind::SfChTheta, sign, 1}, d, t, trunc); };

    double worst_s = 0, worst_st = 0, worst_t = 0, worst_tt = 0;
    for (int sign : {+1, -1}) {
        cplx mitau = cplx(0, -1) * tau.val();
        cplx rhs = double(sign) * std::pow(mitau, d) / 2.0 * (chi(+1, tau) - chi(-1, tau)) +
                   (chit(+1, tau) - chit(-1, tau)) / std::pow(2.0, d + 1);
        worst_s = std::max(worst_s, std::abs(chi(sign, st) - rhs));

        rhs = double(sign) * std::pow(2.0, d - 1) * (chi(+1, tau) + chi(-1, tau)) +
              (chit(+1, tau) + chit(-1, tau)) / 2.0;
        worst_st = std::max(worst_st, std::abs(chit(sign, st) - rhs));

        worst_t = std::max(worst_t, std::abs(chi(sign, tt) - std::exp(cplx(0, kPi * d / 6.0)) * chi(sign, tau)));
        worst_tt = std::max(worst_tt, std::abs(chit(sign, tt) -
                                               double(sign) * std::exp(cplx(0, -kPi * d / 12.0)) * chit(sign, tau)));
    }
    out.push_back({"chi^pm S-law", worst_s, worst_s < tol});
    out.push_back({"chi_theta^pm S-law", worst_st, worst_st < tol});
    out.push_back({"chi^pm T-law", worst_t, worst_t < tol});
    out.push_back({"chi_theta^pm T-law", worst_tt, worst_tt < tol});
    return out;
}

SChiMatrix::SChiMatrix(int p) : p_(p), basis_(schi_basis(p)) {
    e_.assign(basis_.size() * basis_.size(), SChiEntry{CycloNum::zero(2 * p), 1});
}

int SChiMatrix::index_of(const CharId& c) const {
    for (size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].kind == c.kind && basis_[i].sign == c.sign && basis_[i].index == c.index)
            return static_cast<int>(i);
    throw std::invalid_argument("SChiMatrix: unknown basis id " + c.str());
}

std::complex<double> SChiMatrix::embed(int r, int c) const {
    const auto& en = at(r, c);
    return en.cyclo.embed() * std::pow(2.0 * p_, -0.5 * en.sqrt2p_power);
}

nlohmann::json SChiMatrix::to_json(int embed_precision) const {
    nlohmann::json j;
    j["p"] = p_;
    j["basis"] = nlohmann::json::array();
    for (const auto& b : basis_) j["basis"].push_back(b.str());
    auto entries = nlohmann::json::array();
    for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c) {
            if (at(r, c).cyclo.is_zero()) continue;
            nlohmann::json e = {{"row", basis_[r].str()},
                                {"col", basis_[c].str()},
                                {"cyclo", at(r, c).cyclo.to_string()},
                                {"sqrt2pPower", at(r, c).sqrt2p_power}};
            if (embed_precision > 0) {
                auto v = at(r, c).cyclo.embed(embed_precision) * std::pow(2.0 * p_, -0.5 * at(r, c).sqrt2p_power);
                e["re"] = v.real();
                e["im"] = v.imag();
            }
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    return j;
}

SChiMatrix assemble_schi(int p) {
    if (p < 2) throw std::invalid_argument("assemble_schi: p must be >= 2");
    SChiMatrix m(p);
    const int pp = 2 * p;
    auto set = [&](const CharId& r, const CharId& c, const CycloNum& v) {
        m.at(m.index_of(r), m.index_of(c)) = SChiEntry{v, 1};
    };
    CharId xpp{CharKind::ChX, +1, p}, xmp{CharKind::ChX, -1, p};

    for (int s = 1; s < p; ++s) {
        CharId rowP{CharKind::ChP, +1, s}, rowX{CharKind::ChX, +1, s}, rowp{CharKind::Pch, +1, s};
        set(rowP, xpp, CycloNum(pp, Rational(2)));
        set(rowP, xmp, CycloNum(pp, Rational(2L * sgn_pow(p + s))));
        set(rowX, xpp, CycloNum(pp, make_rational(s, p)));
        set(rowX, xmp, CycloNum(pp, make_rational(static_cast<long>(s) * sgn_pow(p + s), p)));
        for (int l = 1; l < p; ++l) {
            CharId colP{CharKind::ChP, +1, l}, colX{CharKind::ChX, +1, l}, colp{CharKind::Pch, +1, l};
            set(rowP, colP, cos_in_double_field(p, static_cast<long>(l) * s) * Rational(2L * sgn_pow(p + l + s)));
            set(rowX, colP, cos_in_double_field(p, static_cast<long>(s) * l) *
                                make_rational(static_cast<long>(sgn_pow(p + s + l)) * s, p));
            set(rowX, colp, sin_in_double_field(p, static_cast<long>(s) * l) * Rational(sgn_pow(p + s + l)));
            set(rowp, colX, sin_in_double_field(p, static_cast<long>(l) * s) * Rational(4L * sgn_pow(l + s + p)));
            set(rowp, colP, sin_in_double_field(p, static_cast<long>(l) * s) *
                                make_rational(-4L * sgn_pow(l + s + p) * l, 2L * p));
        }
    }
    set(xpp, xpp, CycloNum::one(pp));
    set(xpp, xmp, CycloNum::one(pp));
    set(xmp, xpp, CycloNum::one(pp));
    set(xmp, xmp, CycloNum(pp, Rational(static_cast<long>(sgn_pow(p)))));
    for (int l = 1; l < p; ++l) {
        set(xpp, {CharKind::ChP, +1, l}, CycloNum::one(pp));
        set(xmp, {CharKind::ChP, +1, l}, CycloNum(pp, Rational(static_cast<long>(sgn_pow(p - l)))));
    }
    return m;
}

namespace {

// Solve the small complex linear system A x = b by Gaussian elimination.
std::vector<cplx> solve_complex(std::vector<std::vector<cplx>> a, std::vector<cplx> b) {
    int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            cplx f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<cplx> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// low-lying, well-spread sample points: the evaluation matrix is close to a
// Vandermonde in fractional q-powers, so small Im(tau) and scattered Re(tau)
// keep it conditioned
std::vector<Tau> sample_taus(int count) {
    std::vector<Tau> out;
    for (int k = 0; k < count; ++k) {
        double fr = std::fmod(0.6180339887498949 * k, 1.0);
        out.push_back({1.9 * (fr - 0.5), 0.12 + 0.004 * k});
    }
    return out;
}

}  // namespace

double schi_numeric_residual(const SChiMatrix& s, int trunc) {
    int n = s.dim();
    auto taus = sample_taus(n);
    std::vector<std::vector<cplx>> vals(n, std::vector<cplx>(n));
    for (int k = 0; k < n; ++k)
        for (int c = 0; c < n; ++c) vals[k][c] = char_value(s.basis()[c], s.p(), taus[k], trunc);
    // column equilibration keeps the solve well scaled
    std::vector<double> colmax(n, 0.0);
    for (int c = 0; c < n; ++c) {
        for (int k = 0; k < n; ++k) colmax[c] = std::max(colmax[c], std::abs(vals[k][c]));
        for (int k = 0; k < n; ++k) vals[k][c] /= colmax[c];
    }
    double worst = 0;
    for (int r = 0; r < n; ++r) {
        std::vector<cplx> b(n);
        for (int k = 0; k < n; ++k) b[k] = char_value(s.basis()[r], s.p(), taus[k].s_transform(), trunc);
        auto row = solve_complex(vals, b);
        for (int c = 0; c < n; ++c) worst = std::max(worst, std::abs(row[c] / colmax[c] - s.embed(r, c)));
    }
    return worst;
}

double schi_involution_residual(const SChiMatrix& s, Tau tau, int trunc) {
    int n = s.dim();
    double worst = 0;
    for (int r = 0; r < n; ++r) {
        cplx direct = char_value(s.basis()[r], s.p(), tau, trunc);
        cplx via = 0;
        for (int c = 0; c < n; ++c) via += s.embed(r, c) * char_value(s.basis()[c], s.p(), tau.s_transform(), trunc);
        worst = std::max(worst, std::abs(direct - via));
    }
    return worst;
}

double basis_independence_det(int p, int trunc) {
    int n = 3 * p - 1;
    auto basis = schi_basis(p);
    auto taus = sample_taus(n);
    std::vector<std::vector<cplx>> a(n, std::vector<cplx>(n));
    for (int k = 0; k < n; ++k)
        for (int c = 0; c < n; ++c) a[k][c] = char_value(basis[c], p, taus[k], trunc);
    // sup-norm row/column equilibration so the determinant measures
    // independence rather than the graded magnitudes of the q-expansions
    for (int it = 0; it < 8; ++it) {
        for (int r = 0; r < n; ++r) {
            double mx = 0;
            for (int c = 0; c < n; ++c) mx = std::max(mx, std::abs(a[r][c]));
            for (int c = 0; c < n; ++c) a[r][c] /= mx;
        }
        for (int c = 0; c < n; ++c) {
            double mx = 0;
            for (int r = 0; r < n; ++r) mx = std::max(mx, std::abs(a[r][c]));
            for (int r = 0; r < n; ++r) a[r][c] /= mx;
        }
    }
    // LU determinant with partial pivoting
    cplx det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (piv != c) {
            std::swap(a[c], a[piv]);
            det = -det;
        }
        det *= a[c][c];
        if (a[c][c] == 0.0) return 0.0;
        for (int r = c + 1; r < n; ++r) {
            cplx f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return std::abs(det);
}

namespace {

// gamma-table machinery -------------------------------------------------

struct TableLabel {
    enum Kind { P, X, X0, Xp } kind;
    int arg;  // index s for P/X/X0; sign for Xp
};

std::vector<TableLabel> table_labels(int p) {
    std::vector<TableLabel> out;
    for (int s = 1; s < p; ++s) out.push_back({TableLabel::P, s});
    for (int s = 1; s < p; ++s) out.push_back({TableLabel::X, s});
    for (int s = 1; s < p; ++s) out.push_back({TableLabel::X0, s});
    out.push_back({TableLabel::Xp, +1});
    out.push_back({TableLabel::Xp, -1});
    return out;
}

std::string table_label_str(const TableLabel& l, int p) {
    switch (l.kind) {
        case TableLabel::P: return "P+" + std::to_string(l.arg);
        case TableLabel::X: return "X+" + std::to_string(l.arg);
        case TableLabel::X0: return "X0" + std::to_string(l.arg);
        case TableLabel::Xp: return l.arg > 0 ? "X+" + std::to_string(p) : "X-" + std::to_string(p);
    }
    return "?";
}

Gamma gamma_of(const TableLabel& y, const TableLabel& w) {
    using K = TableLabel::Kind;
    auto row = y.kind, col = w.kind;
    if (row == K::X0) {
        if (col == K::P) return Gamma::X;
        if (col == K::X0) return Gamma::ModP;
        return Gamma::None;
    }
    if (col == K::X0) return Gamma::None;
    return Gamma::ModP;
}

bool ydd_is_pch(const TableLabel& y, const TableLabel& w) {
    // Y'' = X0_1 for the cells (X0_s, P+_l) and (X+_s, X+_l); else X+_1.
    using K = TableLabel::Kind;
    return (y.kind == K::X0 && w.kind == K::P) || (y.kind == K::X && w.kind == K::X);
}

QuantumLabel quantum_of(const TableLabel& l, int p) {
    switch (l.kind) {
        case TableLabel::P: return r_label(+1, l.arg);
        case TableLabel::X:
        case TableLabel::X0: return u_label(+1, l.arg);
        case TableLabel::Xp: return u_label(l.arg, p);
    }
    throw std::logic_error("quantum_of: bad label");
}

CharId char_of(const TableLabel& l, int p) {
    switch (l.kind) {
        case TableLabel::P: return {CharKind::ChP, +1, l.arg};
        case TableLabel::X: return {CharKind::ChX, +1, l.arg};
        case TableLabel::X0: return {CharKind::Pch, +1, l.arg};
        case TableLabel::Xp: return {CharKind::ChX, l.arg, p};
    }
    throw std::logic_error("char_of: bad label");
}

bool label_projective(const QuantumLabel& q, int p) { return q.projective_cover || q.index == p; }

// Hopf-side value with the modified trace extended by zero off the projective
// ideal, the nilpotent insertion meaning the identity on U^pm_p, and the
// ordinary trace vanishing whenever either argument is projective.
CycloNum hopf_side(const TableLabel& y, const TableLabel& w, Gamma g, int p) {
    QuantumLabel V = quantum_of(y, p), W = quantum_of(w, p);
    if (g == Gamma::None) return ordinary_hopf_S(V, W, p).value;
    if (!label_projective(W, p)) return CycloNum::zero(p);
    if (g == Gamma::ModP) return log_hopf_S(V, W, Insertion::ModP, p).value;
    if (!W.projective_cover) return log_hopf_S(V, W, Insertion::ModP, p).value;  // x = Id there
    return log_hopf_S(V, W, Insertion::X, p).value;
}

}  // namespace

RatioReport check_ratio_identity(int p) {
    RatioReport rep;
    SChiMatrix s = assemble_schi(p);
    auto labels = table_labels(p);
    auto schi_at = [&](const TableLabel& r, const TableLabel& c) {
        return s.at(s.index_of(char_of(r, p)), s.index_of(char_of(c, p))).cyclo;
    };
    for (const auto& y : labels)
        for (const auto& w : labels) {
            Gamma g = gamma_of(y, w);
            TableLabel y2 = ydd_is_pch(y, w) ? TableLabel{TableLabel::X0, 1} : TableLabel{TableLabel::X, 1};
            RatioCell cell;
            cell.row = table_label_str(y, p);
            cell.col = table_label_str(w, p);
            cell.gamma = g;
            CycloNum sN = schi_at(y, w), sD = schi_at(y2, w);
            CycloNum hN = hopf_side(y, w, g, p).lift(2);
            CycloNum hD = hopf_side(y2, w, g, p).lift(2);
            CycloNum lhs = sN * hD, rhs = sD * hN;
            if (g != Gamma::None) {
                cell.pass = (lhs == rhs);
                if (!cell.pass) {
                    cell.detail = "cross-multiplied ratios differ: S-side " + lhs.to_string() +
                                  " vs Hopf-side " + rhs.to_string();
                    rep.all_nonempty_pass = false;
                }
            } else {
                bool lhs_zero = sN.is_zero(), rhs_zero = hN.is_zero();
                bool lhs_undef = !lhs_zero && sD.is_zero();
                bool rhs_undef = !rhs_zero && hD.is_zero();
                cell.pass = (lhs_zero && rhs_zero) || lhs_undef || rhs_undef || (lhs == rhs);
                if (!cell.pass) {
                    cell.detail = "empty cell: sides conflict";
                    rep.all_empty_consistent = false;
                }
            }
            rep.cells.push_back(std::move(cell));
        }
    return rep;
}

ScalarFit fit_scalars(int p) {
    ScalarFit fit;
    SChiMatrix s = assemble_schi(p);
    auto labels = table_labels(p);
    auto schi_at = [&](const TableLabel& r, const TableLabel& c) {
        return s.at(s.index_of(char_of(r, p)), s.index_of(char_of(c, p))).cyclo;
    };
    // c^chi per column from a ModP pivot (c^hopf(ModP) := 1); then the
    // nilpotent insertion is rescaled per projective target so that the X
    // cells close with c^hopf(x) = 1 as well.
    std::vector<std::optional<CycloNum>> col_scalar(labels.size());
    bool ok = true;
    for (size_t wq = 0; wq < labels.size(); ++wq) {
        for (const auto& y : labels) {
            if (gamma_of(y, labels[wq]) != Gamma::ModP) continue;
            CycloNum sv = schi_at(y, labels[wq]);
            CycloNum hv = hopf_side(y, labels[wq], Gamma::ModP, p).lift(2);
            if (!sv.is_zero() && !hv.is_zero()) {
                col_scalar[wq] = hv / sv;
                break;
            }
        }
    }
    // verify all ModP cells against the pinned column scalars
    for (size_t wq = 0; wq < labels.size(); ++wq) {
        if (!col_scalar[wq]) continue;
        for (const auto& y : labels) {
            if (gamma_of(y, labels[wq]) != Gamma::ModP) continue;
            CycloNum sv = schi_at(y, labels[wq]);
            CycloNum hv = hopf_side(y, labels[wq], Gamma::ModP, p).lift(2);
            if (!(sv * *col_scalar[wq] == hv)) ok = false;
        }
    }
    // per-target x rescalings
    std::optional<CycloNum> global_x;
    bool global_x_ok = true;
    for (size_t wq = 0; wq < labels.size(); ++wq) {
        if (labels[wq].kind != TableLabel::P || !col_scalar[wq]) continue;
        std::optional<CycloNum> alpha;
        for (const auto& y : labels) {
            if (gamma_of(y, labels[wq]) != Gamma::X) continue;
            CycloNum sv = schi_at(y, labels[wq]);
            CycloNum hv = hopf_side(y, labels[wq], Gamma::X, p).lift(2);
            if (sv.is_zero() || hv.is_zero()) {
                if (sv.is_zero() != hv.is_zero()) ok = false;
                continue;
            }
            CycloNum need = *col_scalar[wq] * sv / hv;  // alpha_l making the cell close
            if (!alpha)
                alpha = need;
            else if (!(*alpha == need))
                ok = false;
            if (!global_x)
                global_x = need;
            else if (!(*global_x == need))
                global_x_ok = false;
        }
        if (alpha) {
            if (alpha->is_zero()) ok = false;
            fit.x_rescalings.emplace_back(table_label_str(labels[wq], p), alpha->to_string());
        }
    }
    fit.exists = ok;
    fit.single_global_x_scalar_works = global_x_ok;
    for (size_t wq = 0; wq < labels.size(); ++wq)
        if (col_scalar[wq])
            fit.column_scalars.emplace_back(table_label_str(labels[wq], p), col_scalar[wq]->to_string());

    // negative control: all scalars forced to one
    bool unit_ok = true;
    for (const auto& y : labels)
        for (const auto& w : labels) {
            Gamma g = gamma_of(y, w);
            if (g == Gamma::None) continue;
            CycloNum sv = schi_at(y, w);
            CycloNum hv = hopf_side(y, w, g, p).lift(2);
            if (!(sv == hv)) unit_ok = false;
        }
    fit.unit_scalars_work = unit_ok;
    fit.detail = "c^hopf(ModP) = 1; X insertion rescaled per projective target";
    return fit;
}

namespace {

// S-matrix in the alternative basis ch[X+_s] (s<=p), pch[X+_l], ch[X-_s]
// (s<=p), as exact CycloNum entries over Q(zeta_{4p}); implicit (2p)^{-1/2}.
struct AltSchi {
    std::vector<std::string> names;
    ExactMatrix m;
};

AltSchi alt_basis_schi(int p) {
    SChiMatrix s = assemble_schi(p);
    int n = s.dim();
    int pp = 2 * p;
    // change of basis: new = C * old in function space
    std::vector<std::vector<Rational>> C(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::string> names;
    auto old_index = [&](CharKind k, int sign, int idx) { return s.index_of({k, sign, idx}); };
    int row = 0;
    auto add_chxp = [&](int sgn, int idx) {
        // ch[X^eps_s]: basis for s = p; else + : direct, - : 1/2 chP_{p-s} - chX_{p-s}
        if (idx == p) {
            C[row][old_index(CharKind::ChX, sgn, p)] = 1;
        } else if (sgn > 0) {
            C[row][old_index(CharKind::ChX, +1, idx)] = 1;
        } else {
            C[row][old_index(CharKind::ChP, +1, p - idx)] = Rational(1, 2);
            C[row][old_index(CharKind::ChX, +1, p - idx)] = -1;
        }
        ++row;
    };
    for (int sidx = 1; sidx <= p; ++sidx) {
        names.push_back("chX+" + std::to_string(sidx));
        add_chxp(+1, sidx);
    }
    for (int l = 1; l < p; ++l) {
        names.push_back("pch+" + std::to_string(l));
        C[row][old_index(CharKind::Pch, +1, l)] = 1;
        ++row;
    }
    for (int sidx = 1; sidx <= p; ++sidx) {
        names.push_back("chX-" + std::to_string(sidx));
        add_chxp(-1, sidx);
    }
    ExactMatrix Cm = ExactMatrix::from_rational(C, pp);
    ExactMatrix M(n, n, pp);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M.at(r, c) = s.at(r, c).cyclo;
    ExactMatrix alt = Cm * M * Cm.inverse();
    return {std::move(names), std::move(alt)};
}

}  // namespace

std::vector<QgrCandidate> qgr_candidates(int p) {
    std::vector<QgrCandidate> out;
    AltSchi alt = alt_basis_schi(p);
    int pp = 2 * p;
    int n2p = 2 * p;

    FusionTable gr = grothendieck_table(p);
    ExactMatrix Jg = ExactMatrix::from_int(gr.fusion_matrix(wp_simple(-1, 1)), p).lift(2);
    ExactMatrix Yg = ExactMatrix::from_int(gr.fusion_matrix(wp_simple(+1, 2)), p).lift(2);

    auto name_index = [&](const std::string& nm) {
        auto it = std::find(alt.names.begin(), alt.names.end(), nm);
        return static_cast<int>(it - alt.names.begin());
    };
    // rows: the 2p character rows in Grothendieck basis order X+1, X-1, ...
    std::vector<int> char_rows;
    for (int s = 1; s <= p; ++s) {
        char_rows.push_back(name_index("chX+" + std::to_string(s)));
        char_rows.push_back(name_index("chX-" + std::to_string(s)));
    }

    auto evaluate = [&](const std::string& reading, const std::vector<std::vector<CycloNum>>& cols) {
        QgrCandidate c;
        c.reading = reading;
        c.square = static_cast<int>(cols.size()) == n2p;
        if (!c.square) {
            c.detail = "column recipe yields " + std::to_string(cols.size()) + " columns for a " +
                       std::to_string(n2p) + "-dimensional ring";
            return c;
        }
        ExactMatrix Q(n2p, n2p, pp);
        for (int r = 0; r < n2p; ++r)
            for (int k = 0; k < n2p; ++k) Q.at(r, k) = cols[k][r];
        ExactMatrix Qi;
        try {
            Qi = Q.inverse();
        } catch (const std::exception&) {
            c.detail = "candidate is singular";
            return c;
        }
        c.invertible = true;
        ExactMatrix jf = Qi * Jg * Q;
        ExactMatrix yf = Qi * Yg * Q;
        // J must be exactly diagonal with +-1 entries; Y block upper triangular
        bool jdiag = true;
        for (int r = 0; r < n2p; ++r)
            for (int cc = 0; cc < n2p; ++cc)
                if (r != cc && !jf.at(r, cc).is_zero()) jdiag = false;
        c.j_diagonalized = jdiag;
        bool yblock = true;
        std::vector<CycloNum> super(n2p - 1, CycloNum::zero(pp));
        for (int r = 0; r < n2p; ++r)
            for (int cc = 0; cc < n2p; ++cc) {
                if (r == cc) continue;
                if (cc == r + 1) {
                    super[r] = yf.at(r, cc);
                    continue;
                }
                if (!yf.at(r, cc).is_zero()) yblock = false;
            }
        c.y_block_diagonal = yblock;
        if (jdiag && yblock) {
            // rescale the first column of each nontrivial 2x2 block so the
            // superdiagonal becomes exactly one, then the form is canonical Jordan
            ExactMatrix Q2 = Q;
            for (int r = 0; r + 1 < n2p; ++r) {
                if (super[r].is_zero()) continue;
                if (!(yf.at(r, r) == yf.at(r + 1, r + 1))) continue;
                for (int rr = 0; rr < n2p; ++rr) Q2.at(rr, r) = Q2.at(rr, r) * super[r];
            }
            try {
                ExactMatrix Q2i = Q2.inverse();
                ExactMatrix yf2 = Q2i * Yg * Q2;
                bool jordan = true;
                for (int r = 0; r < n2p; ++r)
                    for (int cc = 0; cc < n2p; ++cc) {
                        if (r == cc) continue;
                        if (cc == r + 1) {
                            if (!(yf2.at(r, cc).is_zero() ||
                                  yf2.at(r, cc) == CycloNum::one(pp)))
                                jordan = false;
                            continue;
                        }
                        if (!yf2.at(r, cc).is_zero()) jordan = false;
                    }
                c.y_jordan_after_rescale = jordan;
            } catch (const std::exception&) {
                c.y_jordan_after_rescale = false;
            }
        }
        return c;
    };

    auto col_of = [&](const std::string& nm) {
        int ci = name_index(nm);
        std::vector<CycloNum> col;
        col.reserve(char_rows.size());
        for (int r : char_rows) col.push_back(alt.m.at(r, ci));
        return col;
    };

    // reading 1: literal, with the juxtaposition as an elementwise product
    {
        std::vector<std::vector<CycloNum>> cols;
        for (int s = 1; s <= p; ++s) cols.push_back(col_of("chX+" + std::to_string(s)));
        for (int l = 1; l < p; ++l) {
            auto a = col_of("pch+" + std::to_string(l));
            auto b = col_of("chX-" + std::to_string(l));
            std::vector<CycloNum> prod;
            for (size_t r = 0; r < a.size(); ++r) prod.push_back(a[r] * b[r]);
            cols.push_back(std::move(prod));
        }
        for (int l = 1; l < p; ++l) cols.push_back(col_of("chX-" + std::to_string(l)));
        out.push_back(evaluate("elementwise product of pch and chX- columns", cols));
    }
    // reading 2: literal, with the juxtaposition as the plain column pair
    {
        std::vector<std::vector<CycloNum>> cols;
        for (int s = 1; s <= p; ++s) cols.push_back(col_of("chX+" + std::to_string(s)));
        for (int l = 1; l < p; ++l) cols.push_back(col_of("pch+" + std::to_string(l)));
        for (int l = 1; l < p; ++l) cols.push_back(col_of("chX-" + std::to_string(l)));
        out.push_back(evaluate("pch and chX- column pairs, literal order", cols));
    }
    // reading 3: Jordan-ordered pairs [chX+p | (pch_l, chX+_l) | chX-p]
    {
        std::vector<std::vector<CycloNum>> cols;
        cols.push_back(col_of("chX+" + std::to_string(p)));
        for (int l = 1; l < p; ++l) {
            cols.push_back(col_of("pch+" + std::to_string(l)));
            cols.push_back(col_of("chX+" + std::to_string(l)));
        }
        cols.push_back(col_of("chX-" + std::to_string(p)));
        out.push_back(evaluate("eigenvector/generalized pairs (pch_l, chX+_l) framed by chX+-p", cols));
    }
    // negative control: identity matrix
    {
        std::vector<std::vector<CycloNum>> cols(n2p, std::vector<CycloNum>(n2p, CycloNum::zero(pp)));
        for (int k = 0; k < n2p; ++k) cols[k][k] = CycloNum::one(pp);
        auto c = evaluate("identity candidate (negative control)", cols);
        out.push_back(c);
    }
    return out;
}

SfHatImage sf_grothendieck_image(int d, Tau tau, int trunc) {
    if (d < 1) throw std::invalid_argument("sf_grothendieck_image: d must be >= 1");
    SfHatImage out;
    long long mult = 1LL << (2 * d - 1);
    out.image[{Family::SFSimple, +1, 1}] = mult;
    out.image[{Family::SFSimple, -1, 1}] = mult;
    cplx hat = sf_char_value({CharKind::SfHat, +1, 1}, d, tau, trunc);
    cplx sum = double(mult) * (sf_char_value({CharKind::SfCh, +1, 1}, d, tau, trunc) +
                               sf_char_value({CharKind::SfCh, -1, 1}, d, tau, trunc));
    out.char_residual = std::abs(hat - sum);
    return out;
}

}  // namespace verlinde
