#include "field/field.hpp"

#include <algorithm>

#include "base/error.hpp"
#include "base/modpoly.hpp"

namespace ct2 {

namespace {

// Dedekind gcd criterion: is Z[theta] p-maximal?
bool dedekind_p_maximal(const ZPoly& f, const Int& p) {
    FpPoly fbar = fp_reduce(f, p);
    // radical = product of the distinct irreducible factors (gcd(f, f') is
    // wrong in char p when p-th powers collapse f')
    FpPoly gbar{Int(1)};
    for (const auto& fac : fp_factor(fbar, p)) gbar = fp_mul(gbar, fac.poly, p);
    FpPoly hbar;
    {
        FpPoly q, r;
        fp_divrem(fbar, gbar, p, q, r);
        check(r.empty(), errc::internal, "dedekind: cofactor division");
        hbar = fp_monic(q, p);
    }
    ZPoly g = fp_lift(gbar), h = fp_lift(hbar);
    ZPoly gh = g * h;
    ZPoly diff = gh - f;
    // T = (g*h - f)/p
    std::vector<Int> tc(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); ++i) {
        check(diff.c[i] % p == 0, errc::internal, "dedekind: g*h != f mod p");
        tc[i] = divexact(diff.c[i], p);
    }
    FpPoly tbar = fp_reduce(ZPoly(std::move(tc)), p);
    FpPoly z = fp_gcd(fp_gcd(tbar, gbar, p), hbar, p);
    return fp_deg(z) <= 0;
}

struct Order {
    ZMat B;  // rows over theta powers
    Int den;
    // multiplication tensor over this basis (entries integral for a ring)
    std::vector<Int> mult;
    QMat Bq, Bq_inv;

    size_t n() const { return B.rows; }
    const Int& T(size_t i, size_t j, size_t k) const { return mult[(i * B.rows + j) * B.rows + k]; }
};

void order_normalize(Order& o) {
    // common content reduction
    Int g = o.den;
    for (const auto& x : o.B.a) g = gcd(g, x);
    if (g > 1) {
        for (auto& x : o.B.a) x = divexact(x, g);
        o.den = divexact(o.den, g);
    }
}

// Canonical triangular basis ordered by increasing theta-degree; row 0 is 1.
void order_canonicalize(Order& o, const ZPoly& f) {
    size_t n = o.n();
    ZMat rev(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rev.at(i, j) = o.B.at(i, n - 1 - j);
    ZMat H = hnf(rev);
    check(H.rows == n, errc::internal, "order basis not full rank");
    ZMat back(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) back.at(n - 1 - i, j) = H.at(i, n - 1 - j);
    o.B = back;
    order_normalize(o);
    check(o.B.at(0, 0) == o.den, errc::internal, "canonical basis: first vector is not 1");
    for (size_t j = 1; j < n; ++j)
        check(o.B.at(0, j) == 0, errc::internal, "canonical basis: first vector is not 1");
    (void)f;
}

// Build multiplication tensor; verifies the module is closed under products.
void order_build_mult(Order& o, const ZPoly& f) {
    size_t n = o.n();
    o.Bq = QMat(o.B, o.den);
    o.Bq_inv = inverse(o.Bq);
    o.mult.assign(n * n * n, Int(0));
    for (size_t i = 0; i < n; ++i) {
        ZPoly bi{std::vector<Int>(o.B.a.begin() + static_cast<long>(i * n),
                                  o.B.a.begin() + static_cast<long>((i + 1) * n))};
        for (size_t j = i; j < n; ++j) {
            ZPoly bj{std::vector<Int>(o.B.a.begin() + static_cast<long>(j * n),
                                      o.B.a.begin() + static_cast<long>((j + 1) * n))};
            ZPoly prod = bi * bj;
            ZPoly q, rem;
            divrem_monic(prod, f, q, rem);
            // coords over theta powers: rem / den^2 -> coords over basis
            std::vector<Rat> v(n, Rat(0));
            for (size_t t = 0; t < rem.c.size(); ++t) v[t] = Rat(rem.c[t]) / Rat(o.den * o.den);
            std::vector<Rat> y = v * o.Bq_inv;
            for (size_t t = 0; t < n; ++t) {
                Rat yy = y[t];
                yy.canonicalize();
                check(yy.get_den() == 1, errc::internal, "order not closed under multiplication");
                o.mult[(i * n + j) * n + t] = Int(yy.get_num());
                o.mult[(j * n + i) * n + t] = Int(yy.get_num());
            }
        }
    }
}

// One radical-idealizer enlargement step at p. Returns false if already
// p-maximal, else replaces o by the strictly larger order.
bool order_enlarge_at(Order& o, const ZPoly& f, const Int& p) {
    size_t n = o.n();
    // A = O/pO multiplication
    auto mul_mod = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> r(n, Int(0));
        for (size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                Int prod = a[i] * b[j] % p;
                if (prod == 0) continue;
                for (size_t k = 0; k < n; ++k) r[k] = (r[k] + prod * o.T(i, j, k)) % p;
            }
        }
        for (auto& x : r) x = fdiv_r(x, p);
        return r;
    };
    // Frobenius power q = p^e >= n
    Int q = p;
    while (q < Int(static_cast<long>(n))) q *= p;
    FpMat frob(n, n, p);
    for (size_t i = 0; i < n; ++i) {
        // b_i^q by square-and-multiply
        std::vector<Int> base(n, Int(0)), acc(n, Int(0));
        base[i] = 1;
        acc[0] = 1; // 1 = b_0 (canonical basis has b_0 = 1)
        Int e = q;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(acc, base);
            base = mul_mod(base, base);
            e >>= 1;
        }
        for (size_t k = 0; k < n; ++k) frob.at(i, k) = acc[k];
    }
    FpMat rad = fp_left_kernel(frob);
    if (rad.rows == 0) return false; // O/pO etale => p-maximal

    // I = radical preimage: rows p*Id and radical lifts, in O-coordinates
    ZMat Istack(n + rad.rows, n);
    for (size_t i = 0; i < n; ++i) Istack.at(i, i) = p;
    for (size_t i = 0; i < rad.rows; ++i)
        for (size_t j = 0; j < n; ++j) Istack.at(n + i, j) = rad.at(i, j);
    ZMat M = hnf(Istack);
    check(M.rows == n, errc::internal, "radical ideal rank");

    // Action of O/pO on I/pI: kernel rows y give (y/p) in the idealizer.
    // c_{i,j} = I-coordinates of b_i * g_j, reduced mod p.
    FpMat E(n, n * n, p);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Int> gj(n);
        for (size_t t = 0; t < n; ++t) gj[t] = M.at(j, t);
        for (size_t i = 0; i < n; ++i) {
            // coords of b_i * g_j over O-basis
            std::vector<Int> prod(n, Int(0));
            for (size_t t = 0; t < n; ++t) {
                if (gj[t] == 0) continue;
                for (size_t k = 0; k < n; ++k) prod[k] += gj[t] * o.T(i, t, k);
            }
            auto w = solve_left(M, prod);
            check(w.has_value(), errc::internal, "idealizer: product not in I");
            for (size_t t = 0; t < n; ++t) E.at(i, j * n + t) = fdiv_r((*w)[t], p);
        }
    }
    FpMat ker = fp_left_kernel(E);
    if (ker.rows == 0) return false; // idealizer equals O: p-maximal

    // O' basis rows over theta powers with denominator den*p
    ZMat stack(n + ker.rows, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) stack.at(i, j) = o.B.at(i, j) * p;
    for (size_t i = 0; i < ker.rows; ++i) {
        // y * B
        for (size_t j = 0; j < n; ++j) {
            Int acc = 0;
            for (size_t t = 0; t < n; ++t) acc += ker.at(i, t) * o.B.at(t, j);
            stack.at(n + i, j) = acc;
        }
    }
    ZMat H = hnf(stack);
    check(H.rows == n, errc::internal, "enlarged order rank");
    o.B = H;
    o.den = o.den * p;
    order_normalize(o);
    order_canonicalize(o, f);
    order_build_mult(o, f);
    return true;
}

} // namespace

NumberField::NumberField(const ZPoly& poly) : poly_(poly) {
    check(poly.degree() >= 2, errc::not_irreducible, "degree must be >= 2");
    check(poly.is_monic(), errc::not_irreducible, "polynomial must be monic");
    n_ = poly.degree();
    Int dpoly = discriminant(poly);
    check(dpoly != 0, errc::not_irreducible, "polynomial is not squarefree");
    check(is_irreducible(poly), errc::not_irreducible, "polynomial is reducible: " + format_poly(poly));

    r_ = count_real_roots(poly);
    s_ = (n_ - r_) / 2;

    Order o;
    o.B = ZMat::identity(static_cast<size_t>(n_));
    o.den = 1;
    order_build_mult(o, poly_);

    for (const auto& [p, e] : factorize(dpoly)) {
        if (e < 2) continue;
        MaximalityCert cert;
        cert.p = p;
        cert.dedekind_maximal = dedekind_p_maximal(poly_, p);
        if (!cert.dedekind_maximal) {
            unsigned steps = 0;
            while (order_enlarge_at(o, poly_, p)) {
                ++steps;
                check(steps <= 64, errc::maximality_undecided,
                      "enlargement did not stabilize at p=" + p.get_str());
            }
            cert.enlargement_steps = steps;
        }
        certs_.push_back(cert);
    }
    order_canonicalize(o, poly_);
    order_build_mult(o, poly_);

    // index = den^n / |det B|
    Int detB = abs(det(o.B));
    Int denn = pow_ui(o.den, static_cast<unsigned long>(n_));
    check(detB % 1 == 0 && denn % detB == 0, errc::internal, "index not integral");
    index_ = divexact(denn, detB);
    Int idx2 = index_ * index_;
    check(dpoly % idx2 == 0, errc::internal, "index^2 does not divide disc(poly)");
    disc_ = divexact(dpoly, idx2);
    for (auto& cert : certs_)
        cert.index_exponent = (index_ % cert.p == 0) ? valuation(index_, cert.p) : 0;

    check((s_ % 2 == 0) == (disc_ > 0), errc::internal, "sign(disc) != (-1)^s");

    basis_num_ = o.B;
    basis_den_ = o.den;
    basis_q_ = o.Bq;
    basis_q_inv_ = o.Bq_inv;
    mult_ = o.mult;

    // Independent check: det of the trace form Gram matrix equals disc.
    {
        size_t n = static_cast<size_t>(n_);
        std::vector<Int> basis_traces(n);
        for (size_t k = 0; k < n; ++k) {
            Int t = 0;
            for (size_t j = 0; j < n; ++j) t += T(k, j, j);
            basis_traces[k] = t;
        }
        ZMat gram(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Int g = 0;
                for (size_t k = 0; k < n; ++k) g += T(i, j, k) * basis_traces[k];
                gram.at(i, j) = g;
            }
        check(det(gram) == disc_, errc::internal, "trace form Gram det != disc");
    }
}

Elem NumberField::one() const {
    Elem e = zero();
    e[0] = 1; // canonical basis has b_0 = 1
    return e;
}

Elem NumberField::from_int(const Int& k) const {
    Elem e = zero();
    e[0] = k;
    return e;
}

Elem NumberField::theta() const {
    std::vector<Rat> v(static_cast<size_t>(n_), Rat(0));
    v[1] = 1;
    auto e = from_power_basis(v);
    check(e.has_value(), errc::internal, "theta not in O_K");
    return *e;
}

Elem NumberField::add(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Elem NumberField::sub(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Elem NumberField::neg(const Elem& a) const {
    Elem r(a);
    for (auto& x : r) x = -x;
    return r;
}

Elem NumberField::mul(const Elem& a, const Elem& b) const {
    size_t n = static_cast<size_t>(n_);
    Elem r(n, Int(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Int prod = a[i] * b[j];
            for (size_t k = 0; k < n; ++k)
                if (T(i, j, k) != 0) r[k] += prod * T(i, j, k);
        }
    }
    return r;
}

Elem NumberField::mul_int(const Elem& a, const Int& k) const {
    Elem r(a);
    for (auto& x : r) x *= k;
    return r;
}

Elem NumberField::pow(const Elem& a, unsigned long e) const {
    Elem acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool NumberField::is_zero(const Elem& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::optional<Elem> NumberField::div_exact(const Elem& a, const Elem& b) const {
    check(!is_zero(b), errc::internal, "division by zero element");
    size_t n = static_cast<size_t>(n_);
    ZMat Mb = mult_matrix(b);
    QMat Mq(Mb, Int(1));
    std::vector<Rat> rhs(n);
    for (size_t i = 0; i < n; ++i) rhs[i] = Rat(a[i]);
    std::vector<Rat> x = solve_left(Mq, rhs);
    Elem r(n);
    for (size_t i = 0; i < n; ++i) {
        x[i].canonicalize();
        if (x[i].get_den() != 1) return std::nullopt;
        r[i] = Int(x[i].get_num());
    }
    return r;
}

ZMat NumberField::mult_matrix(const Elem& a) const {
    size_t n = static_cast<size_t>(n_);
    ZMat m(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            Int acc = 0;
            for (size_t i = 0; i < n; ++i)
                if (a[i] != 0 && T(i, j, k) != 0) acc += a[i] * T(i, j, k);
            m.at(j, k) = acc;
        }
    return m;
}

Int NumberField::norm(const Elem& a) const { return det(mult_matrix(a)); }

Int NumberField::trace(const Elem& a) const {
    size_t n = static_cast<size_t>(n_);
    Int t = 0;
    for (size_t i = 0; i < n; ++i)
        if (a[i] != 0) {
            for (size_t j = 0; j < n; ++j) t += a[i] * T(i, j, j);
        }
    return t;
}

ZPoly NumberField::char_poly(const Elem& a) const {
    // char poly of the multiplication matrix, by exact interpolation at
    // t = 0..n of det(tI - M).
    size_t n = static_cast<size_t>(n_);
    ZMat M = mult_matrix(a);
    std::vector<Rat> values(n + 1), nodes(n + 1);
    for (size_t t = 0; t <= n; ++t) {
        ZMat S(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) S.at(i, j) = (i == j ? Int(static_cast<long>(t)) : Int(0)) - M.at(i, j);
        values[t] = Rat(det(S));
        nodes[t] = Rat(static_cast<long>(t));
    }
    // Lagrange interpolation
    std::vector<Rat> coeffs(n + 1, Rat(0));
    for (size_t k = 0; k <= n; ++k) {
        // basis poly prod_{j!=k} (x - x_j)/(x_k - x_j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            for (size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] += basis[i];
                nb[i] -= nodes[j] * basis[i];
            }
            basis = std::move(nb);
            denom *= nodes[k] - nodes[j];
        }
        Rat scale = values[k] / denom;
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += scale * basis[i];
    }
    std::vector<Int> out(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        coeffs[i].canonicalize();
        check(coeffs[i].get_den() == 1, errc::internal, "char poly not integral");
        out[i] = Int(coeffs[i].get_num());
    }
    ZPoly cp(std::move(out));
    check(cp.is_monic() && cp.degree() == n_, errc::internal, "char poly shape");
    return cp;
}

int NumberField::minpoly_degree(const Elem& a) const {
    size_t n = static_cast<size_t>(n_);
    ZMat stack(n + 1, n);
    Elem cur = one();
    for (size_t k = 0; k <= n; ++k) {
        for (size_t j = 0; j < n; ++j) stack.at(k, j) = cur[j];
        if (k < n) cur = mul(cur, a);
    }
    size_t rank = 0;
    hnf(stack, nullptr, &rank);
    return static_cast<int>(rank);
}

void NumberField::to_power_basis(const Elem& a, std::vector<Int>& v, Int& den) const {
    size_t n = static_cast<size_t>(n_);
    v.assign(n, Int(0));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) v[j] += a[i] * basis_num_.at(i, j);
    den = basis_den_;
    // reduce common content
    Int g = den;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1) {
        for (auto& x : v) x = divexact(x, g);
        den = divexact(den, g);
    }
}

std::optional<Elem> NumberField::from_power_basis(const std::vector<Rat>& coeffs) const {
    size_t n = static_cast<size_t>(n_);
    check(coeffs.size() <= n, errc::internal, "from_power_basis: too many coefficients");
    std::vector<Rat> v(n, Rat(0));
    for (size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i];
    std::vector<Rat> y = v * basis_q_inv_;
    Elem e(n);
    for (size_t i = 0; i < n; ++i) {
        y[i].canonicalize();
        if (y[i].get_den() != 1) return std::nullopt;
        e[i] = Int(y[i].get_num());
    }
    return e;
}

const RootSystem& NumberField::roots(long bits) const {
    if (!roots_) {
        roots_ = std::make_unique<RootSystem>(RootSystem::isolate(poly_, std::max(bits, 96L)));
    } else if (roots_->bits() < bits) {
        roots_->refine(bits);
    }
    return *roots_;
}

std::vector<CIval> NumberField::embed(const Elem& a, long bits) const {
    check(bits <= bits_cap, errc::precision_exhausted, "embedding bits cap exceeded");
    const RootSystem& rs = roots(bits);
    std::vector<Int> v;
    Int den;
    to_power_basis(a, v, den);
    return rs.eval_at_roots(v, den);
}

std::vector<RIval> NumberField::abs_embed(const Elem& a, long bits) const {
    auto vals = embed(a, bits);
    std::vector<RIval> out;
    out.reserve(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
        if (static_cast<int>(i) < r_)
            out.push_back(vals[i].re.abs());
        else
            out.push_back(vals[i].abs());
    }
    return out;
}

RIval NumberField::length2(const Elem& a, long bits) const {
    auto vals = embed(a, bits);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    RIval acc = RIval::from_long(0, prec);
    for (size_t i = 0; i < vals.size(); ++i) {
        if (static_cast<int>(i) < r_)
            acc = acc + vals[i].re.sq();
        else
            acc = acc + vals[i].abs2();
    }
    return acc;
}

bool NumberField::is_torsion_unit(const Elem& a) const {
    if (is_zero(a)) return false;
    Int nm = norm(a);
    if (nm != 1 && nm != -1) return false;
    Elem acc = a;
    for (int k = 1; k <= 36; ++k) {
        if (acc == one()) return true;
        acc = mul(acc, a);
    }
    return false;
}

int NumberField::compare_length2(const Elem& a, const Elem& b) const {
    // exact fast paths
    if (a == b) return 0;
    {
        Elem nb = neg(b);
        if (a == nb) return 0;
    }
    if (s_ == 0) {
        // totally real: |x|^2 = Tr(x^2), exact
        Int ta = trace(mul(a, a)), tb = trace(mul(b, b));
        return ta < tb ? -1 : (ta > tb ? 1 : 0);
    }
    if (n_ == 2 && s_ == 1) {
        // imaginary quadratic: |x|^2 = N(x), exact
        Int na = norm(a), nb = norm(b);
        return na < nb ? -1 : (na > nb ? 1 : 0);
    }
    // torsion-quotient tie certificate
    if (!is_zero(a) && !is_zero(b)) {
        auto q = div_exact(a, b);
        if (q.has_value() && is_torsion_unit(*q)) return 0;
        auto q2 = div_exact(b, a);
        if (q2.has_value() && is_torsion_unit(*q2)) return 0;
    }
    for (long bits = 96; bits <= bits_cap; bits *= 2) {
        RIval la = length2(a, bits), lb = length2(b, bits);
        if (la.certainly_lt(lb)) return -1;
        if (lb.certainly_lt(la)) return 1;
    }
    fail(errc::precision_exhausted, "length comparison undecidable at precision cap");
}

} // namespace ct2
