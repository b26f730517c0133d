#include "boxcount/boxcount.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "base/error.hpp"

namespace ct2 {

BoxCensus box_census(const NumberField& K, size_t budget) {
    BoxCensus c;
    c.radius_base = abs(K.disc());
    int n = K.degree();
    auto pts = enumerate_box(K, BoxRadius{Rat(c.radius_base), static_cast<unsigned>(n)}, budget);
    c.total = static_cast<long>(pts.size());
    std::map<Elem, long> by_line;
    for (const auto& x : pts) {
        if (!K.is_zero(x)) {
            Int nm = abs(K.norm(x));
            if (is_perfect_square(nm)) ++c.square_norm;
        }
        Elem rep = x;
        rep[0] = 0; // b_0 = 1: reduce the coset coordinate to zero
        by_line[rep]++;
    }
    for (const auto& [rep, count] : by_line) {
        NormLine line;
        line.base = rep;
        line.points_on_line = count;
        // f_beta(t) = Norm(beta - t) = (-1)^n charpoly(t)
        ZPoly cp = K.char_poly(rep);
        line.f_beta = (n % 2 == 0) ? cp : -cp;
        // g_beta: squarefree part of (-1)^n f_beta(-x), primitive positive lead
        ZPoly h = reflect(line.f_beta);
        if (n % 2 != 0) h = -h;
        line.g_beta = squarefree_part(h);
        ZPoly s;
        Rat kk;
        if (square_decompose(line.f_beta, s, kk)) {
            line.is_square_poly =
                kk > 0 && is_perfect_square(Int(kk.get_num())) && is_perfect_square(Int(kk.get_den()));
        }
        line.degenerate = true;
        for (size_t i = 1; i < rep.size(); ++i)
            if (rep[i] != 0) line.degenerate = false;
        if (line.is_square_poly) ++c.square_lines;
        if (line.degenerate) ++c.degenerate_lines;
        c.lines.push_back(std::move(line));
    }
    return c;
}

double trivial_bound_ratio(const NumberField& K, const BoxCensus& c) {
    return static_cast<double>(c.total) / std::sqrt(Int(abs(K.disc())).get_d());
}

CurveSpec line_to_curve(const NumberField& K, const NormLine& line) {
    check(K.degree() == 3, errc::usage, "line_to_curve: cubic fields only");
    if (line.is_square_poly) fail(errc::square_line, "square-polynomial line has no curve");
    // f_beta(t) = -(t^3 + A t^2 + B t + C) for cubics: -y^2 = t^3+At^2+Bt+C
    CurveSpec spec;
    spec.sign = -1;
    ZPoly cp = -line.f_beta; // monic cubic
    check(cp.is_monic() && cp.degree() == 3, errc::internal, "line_to_curve: bad charpoly");
    spec.A = cp.c[2];
    spec.B = cp.c[1];
    spec.C = cp.c[0];
    spec.degenerate = line.g_beta.degree() < 3;
    // coefficient bounds from the elementary symmetric functions of values
    // bounded by R = |disc|^{1/3}: |A| <= 3R, |B| <= 3R^2, |C| <= R^3.
    const Int& D = abs(K.disc());
    check(abs(spec.A) * abs(spec.A) * abs(spec.A) <= 27 * D, errc::theorem_violation,
          "curve coefficient bound |A| <= 3|disc|^{1/3} violated");
    check(abs(spec.B) * abs(spec.B) * abs(spec.B) <= 27 * D * D, errc::theorem_violation,
          "curve coefficient bound |B| <= 3|disc|^{2/3} violated");
    check(abs(spec.C) <= D, errc::theorem_violation, "curve coefficient bound |C| <= |disc| violated");
    return spec;
}

std::vector<std::pair<Int, Int>> curve_integral_points(const ZPoly& g, const Int& x_bound,
                                                       const Int& y_bound, size_t budget) {
    check(squarefree_part(g) == primitive_part(g) || g.degree() == 0, errc::usage,
          "curve_integral_points: g must be squarefree");
    std::vector<std::pair<Int, Int>> out;
    size_t steps = 0;
    for (Int x = -x_bound; x <= x_bound; ++x) {
        check(++steps <= budget, errc::budget_exceeded, "integral point scan budget");
        Int v = g(x);
        if (v < 0) continue;
        if (!is_perfect_square(v)) continue;
        Int y = isqrt(v);
        if (y > y_bound) continue;
        if (y == 0)
            out.emplace_back(x, y);
        else {
            out.emplace_back(x, y);
            out.emplace_back(x, -y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Int, Int>> curve_integral_points_sieve(const ZPoly& g, const Int& x_bound,
                                                             const Int& y_bound, size_t budget) {
    // quadratic-residue tables modulo smooth moduli, then exact verification
    const long mods[] = {64, 63, 65, 11};
    std::vector<std::vector<bool>> qr;
    for (long m : mods) {
        std::vector<bool> t(static_cast<size_t>(m), false);
        for (long y = 0; y < m; ++y) t[static_cast<size_t>((y * y) % m)] = true;
        qr.push_back(std::move(t));
    }
    std::vector<std::pair<Int, Int>> out;
    size_t steps = 0;
    for (Int x = -x_bound; x <= x_bound; ++x) {
        check(++steps <= budget, errc::budget_exceeded, "integral point scan budget");
        Int v = g(x);
        if (v < 0) continue;
        bool pass = true;
        for (size_t i = 0; i < 4 && pass; ++i) {
            long m = mods[i];
            long r = static_cast<long>(fdiv_r(v, Int(m)).get_si());
            pass = qr[i][static_cast<size_t>(r)];
        }
        if (!pass) continue;
        if (!is_perfect_square(v)) continue;
        Int y = isqrt(v);
        if (y > y_bound) continue;
        if (y == 0)
            out.emplace_back(x, y);
        else {
            out.emplace_back(x, y);
            out.emplace_back(x, -y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SurjectionReport surjection_check(const NumberField& K, const ClassGroup& cg, const BoxCensus& c) {
    SurjectionReport rep;
    rep.h2 = cg.torsion_count(Int(2));
    rep.square_norm_count = c.square_norm;
    auto tors = cg.m_torsion(Int(2));
    std::vector<FracIdeal> beta_ideals;
    BoxRadius box{Rat(abs(K.disc())), static_cast<unsigned>(K.degree())};
    for (const auto& cls : tors) {
        TorsionWitness w = small_generator(K, cg, cls.ideal, 2);
        verify_witness(K, w, true);
        check(box_contains(K, w.beta, box), errc::theorem_violation, "witness beta outside the box");
        check(is_perfect_square(abs(K.norm(w.beta))), errc::theorem_violation,
              "witness beta norm is not a square");
        // class recovery: (beta)^{1/2} determines the original class
        check(class_vector_from_beta(K, cg, w.beta, 2) == cg.class_vector(cls.ideal),
              errc::theorem_violation, "witness beta does not recover its class");
        beta_ideals.push_back(ideal_from_elem(K, w.beta));
        ++rep.witnesses_in_box;
    }
    std::sort(beta_ideals.begin(), beta_ideals.end());
    for (size_t i = 0; i + 1 < beta_ideals.size(); ++i)
        check(!(beta_ideals[i] == beta_ideals[i + 1]), errc::theorem_violation,
              "distinct 2-torsion classes produced the same (beta)");
    check(Int(rep.witnesses_in_box) == rep.h2, errc::internal, "torsion subgroup size mismatch");
    check(rep.h2 <= Int(rep.square_norm_count), errc::theorem_violation,
          "h2 exceeds the square-norm census");
    rep.ok = true;
    return rep;
}

ExponentFit exponent_fit(const std::vector<std::pair<double, double>>& rows) {
    check(rows.size() >= 20, errc::insufficient_data, "exponent fit needs at least 20 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = 0;
    for (auto& [d, c] : rows) {
        if (d <= 0 || c <= 0) continue;
        double x = std::log(d), y = std::log(c);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    check(n >= 20, errc::insufficient_data, "exponent fit needs at least 20 positive points");
    double denom = n * sxx - sx * sx;
    ExponentFit fit;
    fit.points = n;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (auto& [d, c] : rows) {
        if (d <= 0 || c <= 0) continue;
        double e = std::log(c) - (fit.intercept + fit.slope * std::log(d));
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

} // namespace ct2
