#include "logverlinde/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace verlinde {

namespace {

using Matrix = std::vector<std::vector<long long>>;

Matrix matmul(const Matrix& A, const Matrix& B) {
    size_t n = A.size();
    Matrix C(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long long a = A[i][k];
            if (!a) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += a * B[k][j];
        }
    return C;
}

Matrix matsub(const Matrix& A, const Matrix& B, long long c = 1) {
    Matrix C = A;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j) C[i][j] -= c * B[i][j];
    return C;
}

RingElement twist(const RingElement& e) {
    RingElement out;
    for (const auto& [lab, m] : e) {
        ModuleLabel t = lab;
        t.sign = -t.sign;
        out[t] = m;
    }
    return out;
}

// X+2 tensor (family, +, s) from the generator rules.
RingElement gen_y_on_plus(int p, Family fam, int s) {
    if (fam == Family::WpSimple) {
        if (s == 1) return {{wp_simple(+1, 2), 1}};
        if (s < p) return {{wp_simple(+1, s - 1), 1}, {wp_simple(+1, s + 1), 1}};
        return {{wp_projective(+1, p - 1), 1}};  // s = p
    }
    if (p == 2) return {{wp_simple(+1, 2), 2}, {wp_simple(-1, 2), 2}};  // X+2 x P+1
    if (s == 1) return {{wp_projective(+1, 2), 1}, {wp_simple(-1, p), 2}};
    if (s < p - 1) return {{wp_projective(+1, s - 1), 1}, {wp_projective(+1, s + 1), 1}};
    return {{wp_projective(+1, p - 2), 1}, {wp_simple(+1, p), 2}};  // s = p-1
}

RingElement gen_product(int p, bool y_gen, const ModuleLabel& b) {
    if (!y_gen) {  // X-1 tensor b
        ModuleLabel t = b;
        t.sign = -t.sign;
        return {{t, 1}};
    }
    RingElement res = gen_y_on_plus(p, b.family, b.index);
    return b.sign < 0 ? twist(res) : res;
}

}  // namespace

FusionTable::FusionTable(int p, RingKind kind, std::vector<ModuleLabel> basis)
    : p_(p), kind_(kind), basis_(std::move(basis)) {
    n_.assign(basis_.size() * basis_.size() * basis_.size(), 0);
}

int FusionTable::index_of(const ModuleLabel& m) const {
    auto it = std::find(basis_.begin(), basis_.end(), m);
    if (it == basis_.end()) throw std::invalid_argument("FusionTable: unknown label " + m.str());
    return static_cast<int>(it - basis_.begin());
}

long long FusionTable::at(const ModuleLabel& a, const ModuleLabel& b, const ModuleLabel& c) const {
    return at(index_of(a), index_of(b), index_of(c));
}

RingElement FusionTable::product(const ModuleLabel& a, const ModuleLabel& b) const {
    int ia = index_of(a), ib = index_of(b);
    RingElement out;
    for (int c = 0; c < dim(); ++c) {
        long long v = at(ia, ib, c);
        if (v) out[basis_[c]] = v;
    }
    return out;
}

RingElement FusionTable::tensor(const RingElement& a, const RingElement& b) const {
    RingElement out;
    for (const auto& [la, ma] : a)
        for (const auto& [lb, mb] : b) {
            int ia = index_of(la), ib = index_of(lb);
            for (int c = 0; c < dim(); ++c) {
                long long v = at(ia, ib, c);
                if (v) out[basis_[c]] += ma * mb * v;
            }
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<std::vector<long long>> FusionTable::fusion_matrix(const ModuleLabel& m) const {
    int im = index_of(m);
    Matrix M(dim(), std::vector<long long>(dim(), 0));
    for (int b = 0; b < dim(); ++b)
        for (int c = 0; c < dim(); ++c) M[b][c] = at(im, b, c);
    return M;
}

bool FusionTable::commutative() const {
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            for (int c = 0; c < dim(); ++c)
                if (at(a, b, c) != at(b, a, c)) return false;
    return true;
}

bool FusionTable::associative() const {
    int n = dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    long long lhs = 0, rhs = 0;
                    for (int d = 0; d < n; ++d) {
                        lhs += at(a, b, d) * at(d, c, e);
                        rhs += at(b, c, d) * at(a, d, e);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

nlohmann::json FusionTable::to_json() const {
    nlohmann::json j;
    j["p"] = p_;
    switch (kind_) {
        case RingKind::SimpleProjective: j["ringKind"] = "SimpleProjective"; break;
        case RingKind::Grothendieck: j["ringKind"] = "Grothendieck"; break;
        case RingKind::SemiSimple: j["ringKind"] = "SemiSimple"; break;
        case RingKind::Affine: j["ringKind"] = "Affine"; break;
        case RingKind::SF: j["ringKind"] = "SF"; break;
    }
    j["basis"] = nlohmann::json::array();
    for (const auto& b : basis_) j["basis"].push_back(b.str());
    auto cons = nlohmann::json::array();
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            for (int c = 0; c < dim(); ++c)
                if (long long v = at(a, b, c)) cons.push_back({a, b, c, v});
    j["constants"] = std::move(cons);
    return j;
}

FusionTable build_wp_fusion_table(int p) {
    if (p < 2) throw std::invalid_argument("build_wp_fusion_table: p must be >= 2");

    std::vector<ModuleLabel> basis;
    for (int s = 1; s <= p; ++s) {
        basis.push_back(wp_simple(+1, s));
        basis.push_back(wp_simple(-1, s));
    }
    for (int s = 1; s < p; ++s) {
        basis.push_back(wp_projective(+1, s));
        basis.push_back(wp_projective(-1, s));
    }
    const int n = static_cast<int>(basis.size());
    auto idx = [&](const ModuleLabel& m) {
        return static_cast<int>(std::find(basis.begin(), basis.end(), m) - basis.begin());
    };

    auto mat_from_gen = [&](bool y_gen) {
        Matrix M(n, std::vector<long long>(n, 0));
        for (const auto& b : basis)
            for (const auto& [lab, m] : gen_product(p, y_gen, b)) M[idx(b)][idx(lab)] = m;
        return M;
    };
    Matrix J = mat_from_gen(false);
    Matrix Y = mat_from_gen(true);
    if (matmul(J, Y) != matmul(Y, J))
        throw std::logic_error("build_wp_fusion_table: generator matrices do not commute");

    Matrix I(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;

    // Every basis label is an integer polynomial in J and Y inside the regular
    // representation; the recursions below realize exactly that.
    std::map<ModuleLabel, Matrix> N;
    N[wp_simple(+1, 1)] = I;
    N[wp_simple(+1, 2)] = Y;
    for (int s = 2; s < p; ++s)
        N[wp_simple(+1, s + 1)] = matsub(matmul(Y, N[wp_simple(+1, s)]), N[wp_simple(+1, s - 1)]);
    N[wp_projective(+1, p - 1)] = matmul(Y, N[wp_simple(+1, p)]);
    if (p >= 3) {
        N[wp_projective(+1, p - 2)] =
            matsub(matmul(Y, N[wp_projective(+1, p - 1)]), N[wp_simple(+1, p)], 2);
        for (int s = p - 2; s >= 2; --s)
            N[wp_projective(+1, s - 1)] =
                matsub(matmul(Y, N[wp_projective(+1, s)]), N[wp_projective(+1, s + 1)]);
    }
    N[wp_simple(-1, 1)] = J;
    for (int s = 2; s <= p; ++s) N[wp_simple(-1, s)] = matmul(J, N[wp_simple(+1, s)]);
    for (int s = 1; s < p; ++s) N[wp_projective(-1, s)] = matmul(J, N[wp_projective(+1, s)]);

    if (p >= 3) {
        // closing consistency: X+2 x P+1 = P+2 + 2 X-p
        Matrix residue = matsub(matmul(Y, N[wp_projective(+1, 1)]), N[wp_projective(+1, 2)]);
        Matrix twice_xm = N[wp_simple(-1, p)];
        for (auto& row : twice_xm)
            for (auto& v : row) v *= 2;
        if (residue != twice_xm)
            throw std::logic_error("build_wp_fusion_table: closure left the 4p-2 basis");
    }

    FusionTable t(p, RingKind::SimpleProjective, basis);
    for (const auto& a : basis) {
        const Matrix& Ma = N[a];
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (Ma[b][c] < 0)
                    throw std::logic_error("build_wp_fusion_table: closure left the 4p-2 basis");
                t.set(idx(a), b, c, Ma[b][c]);
            }
    }
    return t;
}

FusionTable grothendieck_table(int p) {
    if (p < 2) throw std::invalid_argument("grothendieck_table: p must be >= 2");
    FusionTable simp = build_wp_fusion_table(p);

    std::vector<ModuleLabel> basis;
    for (int s = 1; s <= p; ++s) {
        basis.push_back(wp_simple(+1, s));
        basis.push_back(wp_simple(-1, s));
    }
    // composition factors: [P+s] -> 2[X+s] + 2[X-(p-s)], [P-s] -> 2[X-s] + 2[X+(p-s)]
    auto subst = [&](const ModuleLabel& m) -> RingElement {
        if (m.family == Family::WpSimple) return {{m, 1}};
        if (m.sign > 0) return {{wp_simple(+1, m.index), 2}, {wp_simple(-1, p - m.index), 2}};
        return {{wp_simple(-1, m.index), 2}, {wp_simple(+1, p - m.index), 2}};
    };

    FusionTable g(p, RingKind::Grothendieck, basis);
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
            RingElement prod = simp.product(basis[a], basis[b]);
            RingElement img;
            for (const auto& [lab, m] : prod) img = img + scale(subst(lab), m);
            for (const auto& [lab, m] : img) g.set(a, b, g.index_of(lab), m);
        }
    return g;
}

FusionTable semisimplify(const FusionTable& t) {
    if (t.kind() != RingKind::SimpleProjective)
        throw std::invalid_argument("semisimplify: expects the W_p simple-projective table");
    int p = t.p();
    std::vector<ModuleLabel> basis;
    for (int s = 1; s < p; ++s) {
        basis.push_back(wp_simple(+1, s));
        basis.push_back(wp_simple(-1, s));
    }
    FusionTable q(p, RingKind::SemiSimple, basis);
    for (int a = 0; a < q.dim(); ++a)
        for (int b = 0; b < q.dim(); ++b) {
            RingElement prod = t.product(basis[a], basis[b]);
            for (const auto& [lab, m] : prod) {
                if (lab.family == Family::WpSimple && lab.index < p) q.set(a, b, q.index_of(lab), m);
            }
        }
    return q;
}

FusionTable affine_sl2_fusion(int k) {
    if (k < 0) throw std::invalid_argument("affine_sl2_fusion: k must be >= 0");
    int n = k + 1;
    std::vector<ModuleLabel> basis;
    for (int s = 1; s <= n; ++s) basis.push_back({Family::AffineSL2, +1, s});
    std::vector<std::vector<double>> S(n, std::vector<double>(n));
    const double pi = 3.14159265358979323846;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            S[a][b] = std::sqrt(2.0 / (k + 2)) * std::sin(pi * (a + 1) * (b + 1) / (k + 2));
    FusionTable t(k, RingKind::Affine, basis);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                double v = 0;
                for (int l = 0; l < n; ++l) v += S[a][l] * S[b][l] * S[c][l] / S[0][l];
                double r = std::round(v);
                if (std::abs(v - r) >= 1e-9)
                    throw std::runtime_error("affine_sl2_fusion: Verlinde sum too far from an integer");
                t.set(a, b, c, static_cast<long long>(r));
            }
    return t;
}

FusionTable sf_fusion_table(int d) {
    if (d < 1) throw std::invalid_argument("sf_fusion_table: d must be >= 1");
    // labels: SF+ SF- SF(theta)+ SF(theta)- P+ P-
    auto sf = [](int sign) { return ModuleLabel{Family::SFSimple, sign, 1}; };
    auto sft = [](int sign) { return ModuleLabel{Family::SFSimple, sign, 2}; };
    auto pj = [](int sign) { return ModuleLabel{Family::SFProjective, sign, 1}; };
    std::vector<ModuleLabel> basis = {sf(+1), sf(-1), sft(+1), sft(-1), pj(+1), pj(-1)};
    FusionTable t(d, RingKind::SF, basis);
    auto set1 = [&](ModuleLabel a, ModuleLabel b, const RingElement& e) {
        for (const auto& [lab, m] : e) t.set(t.index_of(a), t.index_of(b), t.index_of(lab), m);
    };
    for (int e : {+1, -1})
        for (int nu : {+1, -1}) {
            set1(sf(e), sf(nu), {{sf(e * nu), 1}});
            set1(sf(e), sft(nu), {{sft(e * nu), 1}});
            set1(sft(e), sf(nu), {{sft(e * nu), 1}});
            set1(sft(e), sft(nu), {{pj(e * nu), 1}});
            set1(sf(e), pj(nu), {{pj(e * nu), 1}});
            set1(pj(e), sf(nu), {{pj(e * nu), 1}});
            set1(sft(e), pj(nu), {{sft(+1), 2}, {sft(-1), 2}});
            set1(pj(e), sft(nu), {{sft(+1), 2}, {sft(-1), 2}});
            set1(pj(e), pj(nu), {{pj(+1), 2}, {pj(-1), 2}});
        }
    return t;
}

}  // namespace verlinde
