#ifndef CT2_CLASSGRP_CLASSGROUP_HPP
#define CT2_CLASSGRP_CLASSGROUP_HPP

#include <optional>

#include "classgrp/bqf.hpp"
#include "classgrp/split.hpp"

namespace ct2 {

struct ClassGroupOptions {
    uint64_t seed = 0x00c1a55;
    size_t max_relation_rounds = 64;
    long euler_prime_bound = 4000;
    double analytic_window = 2.0; // accept when ratio in [1/w, w]
};

struct TorsionClass {
    FracIdeal ideal; // canonical integral representative
    Int order;       // exact order of the class
    std::vector<Int> dl; // SNF coordinates
};

class ClassGroup {
  public:
    ClassGroup(const NumberField& K, const ClassGroupOptions& opt = {});

    const NumberField& field() const { return *K_; }
    const std::vector<PrimeIdeal>& factor_base() const { return fb_; }
    const std::vector<Int>& divisors() const { return divisors_; } // d_1 | d_2 | ...
    const Int& h() const { return h_; }
    Int torsion_count(const Int& m) const;
    unsigned rank2() const;
    double analytic_ratio() const { return analytic_ratio_; }
    const ZMat& relation_matrix() const { return relations_; }

    // generator ideals per divisor (canonical integral representatives)
    const std::vector<FracIdeal>& generators() const { return generators_; }

    // Full m-torsion subgroup; every class verified: ideal^m principal,
    // ideal^j nonprincipal for 0 < j < order.
    std::vector<TorsionClass> m_torsion(const Int& m) const;

    // Principality with exact generator recovery (generator verified to
    // regenerate the ideal). nullopt = not principal.
    std::optional<Elem> is_principal(const FracIdeal& I) const;

    // SNF coordinates of the class of I (vector over divisors()).
    std::vector<Int> class_vector(const FracIdeal& I) const;

    // A few multiplicatively independent-ish units discovered during the
    // relation search (used for balancing; correctness never depends on them).
    const std::vector<Elem>& unit_samples() const { return units_; }

    // Quadratic cross-check data (computed for degree-2 fields).
    const std::optional<QuadraticClassData>& bqf() const { return bqf_; }
    // Narrow class group divisors (real quadratic: from sign-augmented
    // relations when the sampled signs suffice, else from the form-class
    // oracle; equals divisors() otherwise).
    const std::vector<Int>& narrow_divisors() const { return narrow_divisors_; }
    Int h_narrow() const;
    bool narrow_from_relations() const { return narrow_from_relations_; }

  private:
    const NumberField* K_;
    ClassGroupOptions opt_;
    std::vector<PrimeIdeal> fb_;
    ZMat relations_; // rows = exponent vectors of principal ideals
    std::vector<Elem> rel_elems_;
    std::vector<std::vector<int>> rel_signs_; // sign bits at real places per relation
    std::vector<Int> divisors_;
    Int h_ = 1;
    double analytic_ratio_ = 1.0;
    std::vector<FracIdeal> generators_;
    std::optional<QuadraticClassData> bqf_;
    std::vector<Int> narrow_divisors_;
    bool narrow_from_relations_ = false;
    std::vector<Elem> units_;
    // LLL-reduced integer basis of the relation kernel with float log images,
    // built lazily for balancing generator exponent vectors
    struct BalanceBasis {
        std::vector<std::vector<Int>> combos; // rows over relation indices
        std::vector<std::vector<double>> logs;
    };
    mutable std::optional<BalanceBasis> balance_;
    const BalanceBasis& balance_basis() const;
    std::vector<double> rel_log_combo(const std::vector<Int>& c) const;
    // SNF data: relations HNF basis H (k x k), U*H*V = D
    ZMat snf_V_, snf_Vinv_;
    std::vector<Int> snf_d_;

    // factor over the factor base; nullopt if not smooth
    std::optional<std::vector<Int>> factor_vector(const Elem& alpha) const;
    std::vector<int> real_signs(const Elem& alpha) const;
    void finalize_structure();
    double analytic_estimate() const; // w sqrt|d| rho / (2^r (2pi)^s)
    double regulator_estimate(size_t* unit_rank_out) const;
    FracIdeal ideal_of_vector(const std::vector<Int>& v) const;
};

// Helpers shared with accept/sweep code.
Rat minkowski_bound(const NumberField& K);
unsigned long count_roots_of_unity(const NumberField& K);

} // namespace ct2

#endif
