#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "logverlinde/cyclo.hpp"

namespace verlinde {

// Dense matrix over Q(zeta_{2p}).  Rational matrices are the special case of
// CycloNum entries with vanishing higher coefficients.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols, int p);

    static ExactMatrix identity(int n, int p);
    static ExactMatrix from_int(const std::vector<std::vector<long long>>& m, int p);
    static ExactMatrix from_rational(const std::vector<std::vector<Rational>>& m, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    CycloNum& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const CycloNum& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const CycloNum& s) const;
    bool operator==(const ExactMatrix& o) const;

    bool is_zero() const;
    ExactMatrix shifted(const CycloNum& lambda) const;  // this - lambda * I
    ExactMatrix inverse() const;                        // throws if singular
    ExactMatrix power(int k) const;
    int rank() const;

    // Map entries into Q(zeta_{2mp}).
    ExactMatrix lift(int m) const;

    std::vector<std::vector<double>> embed_real() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    int p_ = 1;
    std::vector<CycloNum> e_;
};

// Exact null-space basis via Gauss-Jordan elimination over the field; vectors
// are returned as columns in reduced-echelon normal form.
std::vector<std::vector<CycloNum>> kernel(const ExactMatrix& m);

// Exact test Q^{-1} M Q == B.  Throws if Q is singular.
bool verify_conjugation(const ExactMatrix& q, const ExactMatrix& m, const ExactMatrix& b);

struct Eigenspace {
    CycloNum eigenvalue;
    std::vector<std::vector<CycloNum>> basis;  // generalized eigenvectors
};

// Exact decomposition into kernels of (M - lambda)^dim for the supplied
// eigenvalues; verifies the list exhausts the spectrum.
std::vector<Eigenspace> generalized_eigenspaces(const ExactMatrix& m, const std::vector<CycloNum>& eigenvalues);

struct JordanBlock {
    CycloNum eigenvalue;
    CycloNum involution_value;  // scalar of the commuting involution on the block
    int size = 0;
};

struct BlockReport {
    std::vector<CycloNum> eigenvalues;  // lambda_j = 2 cos(pi j / p), j = 0..p
    std::vector<JordanBlock> blocks;    // in change-of-basis column order
    ExactMatrix change_of_basis;        // Q
    ExactMatrix j_form;                 // Q^{-1} J Q (diagonal)
    ExactMatrix y_form;                 // Q^{-1} Y Q (Jordan)

    nlohmann::json to_json() const;
};

// Simultaneously diagonalize the involution J and put Y into Jordan form,
// ordered by j = 0..p over the spectrum lambda_j = 2 cos(pi j / p).  Within a
// joint eigenspace, sub-blocks are ordered by increasing chain length.
BlockReport block_diagonalize_pair(const ExactMatrix& J, const ExactMatrix& Y, int p);

}  // namespace verlinde
