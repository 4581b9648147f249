#include "logverlinde/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace verlinde {

ExactMatrix::ExactMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    e_.assign(static_cast<size_t>(rows) * cols, CycloNum::zero(p));
}

ExactMatrix ExactMatrix::identity(int n, int p) {
    ExactMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycloNum::one(p);
    return m;
}

ExactMatrix ExactMatrix::from_int(const std::vector<std::vector<long long>>& v, int p) {
    ExactMatrix m(static_cast<int>(v.size()), static_cast<int>(v[0].size()), p);
    for (size_t r = 0; r < v.size(); ++r)
        for (size_t c = 0; c < v[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = CycloNum(p, Rational(static_cast<long>(v[r][c])));
    return m;
}

ExactMatrix ExactMatrix::from_rational(const std::vector<std::vector<Rational>>& v, int p) {
    ExactMatrix m(static_cast<int>(v.size()), static_cast<int>(v[0].size()), p);
    for (size_t r = 0; r < v.size(); ++r)
        for (size_t c = 0; c < v[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = CycloNum(p, v[r][c]);
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    ExactMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    ExactMatrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix m(rows_, o.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycloNum& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.at(i, j) = m.at(i, j) + a * o.at(k, j);
            }
        }
    return m;
}

ExactMatrix ExactMatrix::scaled(const CycloNum& s) const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x = x * s;
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

ExactMatrix ExactMatrix::shifted(const CycloNum& lambda) const {
    ExactMatrix m = *this;
    for (int i = 0; i < std::min(rows_, cols_); ++i) m.at(i, i) = m.at(i, i) - lambda;
    return m;
}

ExactMatrix ExactMatrix::power(int k) const {
    ExactMatrix acc = identity(rows_, p_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

ExactMatrix ExactMatrix::lift(int m) const {
    ExactMatrix out(rows_, cols_, p_ * m);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c).lift(m);
    return out;
}

std::vector<std::vector<double>> ExactMatrix::embed_real() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r][c] = at(r, c).embed().real();
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(ExactMatrix& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        CycloNum inv = a.at(r, c).inverse();
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            CycloNum f = a.at(i, c);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int ExactMatrix::rank() const {
    ExactMatrix a = *this;
    return static_cast<int>(rref(a).size());
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("ExactMatrix::inverse: not square");
    ExactMatrix aug(rows_, 2 * cols_, p_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = CycloNum::one(p_);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        throw std::domain_error("ExactMatrix::inverse: singular matrix");
    ExactMatrix inv(rows_, cols_, p_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

std::vector<std::vector<CycloNum>> kernel(const ExactMatrix& m) {
    ExactMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycloNum>> basis;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<CycloNum> v(m.cols(), CycloNum::zero(m.p()));
        v[fc] = CycloNum::one(m.p());
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(static_cast<int>(i), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool verify_conjugation(const ExactMatrix& q, const ExactMatrix& m, const ExactMatrix& b) {
    ExactMatrix qi = q.inverse();  // throws std::domain_error if singular
    return qi * m * q == b;
}

std::vector<Eigenspace> generalized_eigenspaces(const ExactMatrix& m, const std::vector<CycloNum>& eigenvalues) {
    int n = m.rows();
    // spectrum completeness: the product of (M - lambda)^n over the list vanishes
    ExactMatrix prod = ExactMatrix::identity(n, m.p());
    for (const auto& lam : eigenvalues) prod = prod * m.shifted(lam).power(n);
    if (!prod.is_zero())
        throw std::domain_error("generalized_eigenspaces: supplied eigenvalues do not exhaust the spectrum");
    std::vector<Eigenspace> out;
    for (const auto& lam : eigenvalues) out.push_back({lam, kernel(m.shifted(lam).power(n))});
    return out;
}

namespace {

// Solve V x = w exactly for x, where V's columns are independent; returns
// nullopt when w is outside the span.
std::optional<std::vector<CycloNum>> coords_in_span(const std::vector<std::vector<CycloNum>>& v,
                                                    const std::vector<CycloNum>& w, int p) {
    int n = static_cast<int>(w.size());
    int m = static_cast<int>(v.size());
    ExactMatrix aug(n, m + 1, p);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < m; ++c) aug.at(r, c) = v[c][r];
        aug.at(r, m) = w[r];
    }
    auto pivots = rref(aug);
    std::vector<CycloNum> x(m, CycloNum::zero(p));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m) return std::nullopt;  // inconsistent
        x[pivots[i]] = aug.at(static_cast<int>(i), m);
    }
    return x;
}

std::vector<CycloNum> apply_matrix(const ExactMatrix& m, const std::vector<CycloNum>& v) {
    std::vector<CycloNum> out(m.rows(), CycloNum::zero(m.p()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && !v[c].is_zero()) out[r] = out[r] + m.at(r, c) * v[c];
    return out;
}

// Matrix of the restriction of `op` to span(basis) in basis coordinates.
ExactMatrix restrict_to(const ExactMatrix& op, const std::vector<std::vector<CycloNum>>& basis, int p) {
    int m = static_cast<int>(basis.size());
    ExactMatrix out(m, m, p);
    for (int k = 0; k < m; ++k) {
        auto img = apply_matrix(op, basis[k]);
        auto x = coords_in_span(basis, img, p);
        if (!x) throw std::logic_error("restrict_to: subspace not invariant");
        for (int r = 0; r < m; ++r) out.at(r, k) = (*x)[r];
    }
    return out;
}

// Exact Jordan chains of a nilpotent operator given in matrix form.
// Returns chains as lists of coordinate vectors [v, Nv, N^2 v, ...].
std::vector<std::vector<std::vector<CycloNum>>> nilpotent_chains(const ExactMatrix& nil, int p) {
    int m = nil.rows();
    // kernel filtration
    std::vector<std::vector<std::vector<CycloNum>>> ker;  // ker[k] = basis of ker N^{k+1}
    int height = 0;
    for (int k = 1; k <= m; ++k) {
        ker.push_back(kernel(nil.power(k)));
        height = k;
        if (static_cast<int>(ker.back().size()) == m) break;
    }
    std::vector<std::vector<std::vector<CycloNum>>> chains;
    // vectors already used, flattened, for span tests
    std::vector<std::vector<CycloNum>> used;
    auto in_span_with = [&](const std::vector<std::vector<CycloNum>>& space,
                            const std::vector<CycloNum>& w) {
        auto candidates = space;
        candidates.insert(candidates.end(), used.begin(), used.end());
        if (candidates.empty()) {
            for (const auto& x : w)
                if (!x.is_zero()) return false;
            return true;
        }
        return coords_in_span(candidates, w, p).has_value();
    };
    for (int k = height; k >= 1; --k) {
        const auto lower = (k >= 2) ? ker[k - 2] : std::vector<std::vector<CycloNum>>{};
        for (const auto& cand : ker[k - 1]) {
            if (in_span_with(lower, cand)) continue;  // not a height-k vector modulo used data
            std::vector<std::vector<CycloNum>> chain{cand};
            for (int t = 1; t < k; ++t) chain.push_back(apply_matrix(nil, chain.back()));
            for (auto& v : chain) used.push_back(v);
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

}  // namespace

nlohmann::json BlockReport::to_json() const {
    nlohmann::json j;
    j["eigenvalues"] = nlohmann::json::array();
    for (const auto& e : eigenvalues) j["eigenvalues"].push_back(e.to_string());
    j["blocks"] = nlohmann::json::array();
    for (const auto& lam : eigenvalues) {
        nlohmann::json entry;
        entry["lambda"] = lam.to_string();
        entry["sizes"] = nlohmann::json::array();
        for (const auto& b : blocks)
            if (b.eigenvalue == lam) entry["sizes"].push_back(b.size);
        j["blocks"].push_back(std::move(entry));
    }
    return j;
}

BlockReport block_diagonalize_pair(const ExactMatrix& J, const ExactMatrix& Y, int p) {
    if (!(J * Y == Y * J)) throw std::domain_error("block_diagonalize_pair: inputs do not commute");
    int n = Y.rows();
    BlockReport rep;
    rep.change_of_basis = ExactMatrix(n, n, Y.p());
    int col = 0;

    for (int j = 0; j <= p; ++j) {
        CycloNum lam = two_cos(p, j);
        rep.eigenvalues.push_back(lam);
        auto gev = kernel(Y.shifted(lam).power(n));
        if (gev.empty()) continue;
        // split by J eigenvalue (J is an involution, so +-1)
        for (int sign : {+1, -1}) {
            CycloNum mu = CycloNum(Y.p(), Rational(sign));
            // basis of the joint space: kernel of (J - mu) restricted to span(gev)
            ExactMatrix jr = restrict_to(J, gev, Y.p());
            auto sub = kernel(jr.shifted(mu));
            if (sub.empty()) continue;
            // lift coordinates back to ambient vectors
            std::vector<std::vector<CycloNum>> joint;
            for (const auto& x : sub) {
                std::vector<CycloNum> v(n, CycloNum::zero(Y.p()));
                for (size_t k = 0; k < gev.size(); ++k)
                    if (!x[k].is_zero())
                        for (int r = 0; r < n; ++r) v[r] = v[r] + gev[k][r] * x[k];
                joint.push_back(std::move(v));
            }
            ExactMatrix yr = restrict_to(Y, joint, Y.p()).shifted(lam);
            auto chains = nilpotent_chains(yr, Y.p());
            std::sort(chains.begin(), chains.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            for (const auto& chain : chains) {
                // canonical block ordering: highest power of N first reversed so
                // that Y acts as the upper Jordan block on these columns
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                    std::vector<CycloNum> v(n, CycloNum::zero(Y.p()));
                    for (size_t k = 0; k < joint.size(); ++k)
                        if (!(*it)[k].is_zero())
                            for (int r = 0; r < n; ++r) v[r] = v[r] + joint[k][r] * (*it)[k];
                    for (int r = 0; r < n; ++r) rep.change_of_basis.at(r, col) = v[r];
                    ++col;
                }
                rep.blocks.push_back({lam, mu, static_cast<int>(chain.size())});
            }
        }
    }
    if (col != n) throw std::logic_error("block_diagonalize_pair: basis incomplete");
    ExactMatrix qi = rep.change_of_basis.inverse();
    rep.j_form = qi * J * rep.change_of_basis;
    rep.y_form = qi * Y * rep.change_of_basis;
    return rep;
}

}  // namespace verlinde
