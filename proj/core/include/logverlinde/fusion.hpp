#pragma once

#include <vector>

#include "json.hpp"
#include "logverlinde/labels.hpp"

namespace verlinde {

enum class RingKind { SimpleProjective, Grothendieck, SemiSimple, Affine, SF };

// A based commutative ring: ordered basis plus the integer structure-constant
// tensor N_{a,b}^c.
class FusionTable {
  public:
    FusionTable() = default;
    FusionTable(int p, RingKind kind, std::vector<ModuleLabel> basis);

    int p() const { return p_; }
    RingKind kind() const { return kind_; }
    const std::vector<ModuleLabel>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    int index_of(const ModuleLabel& m) const;  // throws on unknown label
    long long at(int a, int b, int c) const { return n_[(static_cast<size_t>(a) * basis_.size() + b) * basis_.size() + c]; }
    long long at(const ModuleLabel& a, const ModuleLabel& b, const ModuleLabel& c) const;
    void set(int a, int b, int c, long long v) { n_[(static_cast<size_t>(a) * basis_.size() + b) * basis_.size() + c] = v; }

    // Product of basis elements as a RingElement.
    RingElement product(const ModuleLabel& a, const ModuleLabel& b) const;
    // Bilinear extension.
    RingElement tensor(const RingElement& a, const RingElement& b) const;

    // (N_m)_{b,c} = N_{m,b}^c in basis order.
    std::vector<std::vector<long long>> fusion_matrix(const ModuleLabel& m) const;

    bool commutative() const;
    bool associative() const;  // full triple sweep, exact

    nlohmann::json to_json() const;

  private:
    int p_ = 0;
    RingKind kind_ = RingKind::SimpleProjective;
    std::vector<ModuleLabel> basis_;
    std::vector<long long> n_;
};

// Fus^simp(W_p): basis X+1, X-1, ..., X+p, X-p, P+1, P-1, ..., P+(p-1), P-(p-1),
// closed from the generator rules for X-1 and X+2.
FusionTable build_wp_fusion_table(int p);

// 2p-dimensional Grothendieck quotient on [X^eps_s].
FusionTable grothendieck_table(int p);

// Quotient of Fus^simp by the ideal spanned by all projectives.
FusionTable semisimplify(const FusionTable& t);

// Fusion ring of level-k affine sl2, computed by the sine-matrix Verlinde
// formula as an independent oracle; entries rounded with tolerance 1e-9.
FusionTable affine_sl2_fusion(int k);

// Six-label fusion ring of SF^+_d (isomorphic to d = 1 for every d).
FusionTable sf_fusion_table(int d);

}  // namespace verlinde
