#ifndef CT2_FIELD_FIELD_HPP
#define CT2_FIELD_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "base/interval.hpp"
#include "base/matz.hpp"
#include "base/polyz.hpp"
#include "field/rootcert.hpp"

namespace ct2 {

// Per-prime record of how p-maximality of the ring of integers was certified.
struct MaximalityCert {
    Int p;
    bool dedekind_maximal = false; // the gcd criterion already certified Z[theta]
    unsigned enlargement_steps = 0;
    unsigned index_exponent = 0; // v_p([O_K : Z[theta]])
};

// Element of O_K as integer coordinates over the integral basis.
using Elem = std::vector<Int>;

// A number field with certified integral basis, discriminant, signature, and
// on-demand certified archimedean embeddings.
class NumberField {
  public:
    // Throws NotIrreducible / MaximalityUndecided.
    explicit NumberField(const ZPoly& poly);

    int degree() const { return n_; }
    int r_real() const { return r_; }
    int s_complex() const { return s_; }
    int places() const { return r_ + s_; }
    const Int& disc() const { return disc_; }
    const ZPoly& poly() const { return poly_; }
    const ZMat& basis_num() const { return basis_num_; } // rows over powers of theta
    const Int& basis_den() const { return basis_den_; }
    const Int& index() const { return index_; }
    const std::vector<MaximalityCert>& maximality_certs() const { return certs_; }

    // ---- element arithmetic (coordinates over the integral basis) ----
    Elem zero() const { return Elem(static_cast<size_t>(n_), Int(0)); }
    Elem one() const;
    Elem theta() const; // the root of the defining polynomial
    Elem from_int(const Int& k) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_int(const Elem& a, const Int& k) const;
    Elem pow(const Elem& a, unsigned long e) const;
    bool is_zero(const Elem& a) const;
    // a/b when exact in O_K; nullopt otherwise
    std::optional<Elem> div_exact(const Elem& a, const Elem& b) const;

    ZMat mult_matrix(const Elem& a) const; // row j = coords of a*b_j
    Int norm(const Elem& a) const;
    Int trace(const Elem& a) const;
    ZPoly char_poly(const Elem& a) const; // monic, degree n
    int minpoly_degree(const Elem& a) const;

    // coordinates over powers of theta: returns (integer vector v, den) with
    // a = (sum v_j theta^j)/den
    void to_power_basis(const Elem& a, std::vector<Int>& v, Int& den) const;
    // inverse: element of O_K given by rational power-basis coefficients;
    // nullopt if not integral
    std::optional<Elem> from_power_basis(const std::vector<Rat>& coeffs) const;

    // ---- archimedean data ----
    // Certified roots at >= bits precision (cached; refines monotonically).
    const RootSystem& roots(long bits) const;
    // Embedding values at all places (r real, then s complex).
    std::vector<CIval> embed(const Elem& a, long bits) const;
    // |a|_v per place v (r real then s complex), radius <= 2^-bits roughly;
    // refines internally until every entry has radius <= tol (absolute).
    std::vector<RIval> abs_embed(const Elem& a, long bits) const;

    // Decide |sigma_v(a)| <=> |sigma_v(b)| structurally: -1/0/+1. Exact ties
    // are detected via torsion-unit quotients; otherwise refines up to the
    // precision cap and throws PrecisionExhausted.
    int compare_place_abs(const Elem& a, const Elem& b, size_t place) const;

    // Rigorous comparison of the Euclidean length^2 of the R^r x C^s images.
    // Returns -1, 0, +1; 0 only when lengths are provably equal.
    int compare_length2(const Elem& a, const Elem& b) const;
    RIval length2(const Elem& a, long bits) const;

    // True if a is a root of unity (exact certificate).
    bool is_torsion_unit(const Elem& a) const;
    // Count of roots of unity in O_K (uses exact torsion enumeration).
    unsigned long roots_of_unity_count() const;

    // Hard cap for refinement loops.
    static constexpr long bits_cap = 1 << 13;

    std::string poly_str() const { return format_poly(poly_); }

  private:
    ZPoly poly_;
    int n_ = 0, r_ = 0, s_ = 0;
    Int disc_;
    Int index_;
    ZMat basis_num_; // n x n, rows = integral basis over theta powers
    Int basis_den_;
    QMat basis_q_;     // basis_num_/basis_den_
    QMat basis_q_inv_; // inverse
    std::vector<Int> mult_; // n^3 tensor: b_i b_j = sum_k T[i][j][k] b_k
    std::vector<MaximalityCert> certs_;
    mutable std::unique_ptr<RootSystem> roots_;
    mutable unsigned long torsion_count_ = 0; // cached; 0 = unknown

    const Int& T(size_t i, size_t j, size_t k) const {
        return mult_[(i * static_cast<size_t>(n_) + j) * static_cast<size_t>(n_) + k];
    }
    void build_mult_table();
};

} // namespace ct2

#endif
