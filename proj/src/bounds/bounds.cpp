#include "bounds/bounds.hpp"

#include <cmath>
#include <sstream>

#include "base/error.hpp"
#include "base/util.hpp"

namespace ct2 {

RIval hv_beta(long bits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    RIval a = RIval::from_long(3, prec).sqrt() / RIval::from_long(2, prec);
    RIval one = RIval::from_long(1, prec);
    RIval twoa = RIval::from_long(2, prec) * a;
    RIval u = (one + a) / twoa;
    RIval v = (one - a) / twoa;
    return u * u.log() - v * v.log();
}

RIval h2_exponent_cubic(long bits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    RIval beta = hv_beta(bits);
    RIval log2 = RIval::from_long(2, prec).log();
    RIval one = RIval::from_long(1, prec);
    return one / (RIval::from_long(6, prec) * (one - beta / log2));
}

double ExponentTable::delta_n(int n) const {
    check(n >= 3, errc::usage, "delta_n: n >= 3");
    if (n == 3 || n == 4) return 0.5 - h2_exp_cubic;
    return 1.0 / (2.0 * n);
}

double ExponentTable::h2_exp(int n) const {
    check(n >= 2, errc::usage, "h2_exp: n >= 2");
    if (n == 2) return 0.0; // genus theory: disc^{o(1)}
    if (n == 3 || n == 4) return h2_exp_cubic;
    return 0.5 - 1.0 / (2.0 * n);
}

ExponentTable derived_exponents(long bits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
    ExponentTable t;
    RIval a = RIval::from_long(3, prec).sqrt() / RIval::from_long(2, prec);
    RIval beta = hv_beta(bits);
    RIval x = h2_exponent_cubic(bits);
    RIval log2 = RIval::from_long(2, prec).log();
    t.alpha = a.mid_d();
    t.beta_hv = beta.mid_d();
    t.h2_exp_cubic = x.mid_d();
    t.points_exp = ((beta / log2) * x).mid_d();
    t.a4_exp = (RIval::from_rat(Rat(1, 2), prec) + x).mid_d();
    RIval resid = x - (RIval::from_rat(Rat(1, 6), prec) + (beta / log2) * x);
    t.fixed_point_residual = std::max(std::fabs(resid.mid_d()), resid.rad_d());
    return t;
}

BKInput bk_input(const ZPoly& cubic, unsigned rk2_cl) {
    check(cubic.degree() == 3 && cubic.is_monic(), errc::usage, "bk_input: need a monic cubic");
    if (!is_irreducible(cubic))
        fail(errc::reducible_cubic, "y^2 = f(x) with reducible f: etale case not implemented");
    BKInput in;
    in.cubic = cubic;
    in.disc_E = 16 * discriminant(cubic);
    check(in.disc_E != 0, errc::usage, "bk_input: singular curve");
    in.omega_disc = omega(in.disc_E);
    in.rk2_cl = rk2_cl;
    return in;
}

Int bk_rank_bound(const BKInput& in) { return Int(in.rk2_cl) + 2 * Int(in.omega_disc) + 2; }

double hv_point_bound(long rank, const Int& disc_E, double eps) {
    check(rank >= 0, errc::usage, "hv_point_bound: rank >= 0");
    double beta = hv_beta(64).mid_d();
    return std::pow(std::fabs(disc_E.get_d()), eps) * std::exp((beta + eps) * rank);
}

double baily_sum(const std::vector<BailyRow>& table, double X) {
    long double acc = 0.0L;
    for (const auto& row : table) {
        check(row.disc != 0, errc::bad_table_row, "zero discriminant row");
        long double ad = fabsl(static_cast<long double>(Int(abs(row.disc)).get_d()));
        check(static_cast<double>(ad) < X, errc::bad_table_row,
              "table row with |disc| >= X: " + row.disc.get_str());
        long double lg = logl(ad);
        acc += static_cast<long double>(row.h2.get_d()) * lg * lg * sqrtl(X / ad);
    }
    return static_cast<double>(acc);
}

std::vector<BailyRow> parse_cubic_table(const std::string& text) {
    std::vector<BailyRow> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto parts = split(t, ',');
        check(parts.size() == 2, errc::bad_table_row, "expected 'disc,h2': " + t);
        try {
            BailyRow row{Int(trim(parts[0])), Int(trim(parts[1]))};
            check(row.h2 >= 1, errc::bad_table_row, "h2 < 1: " + t);
            out.push_back(row);
        } catch (const std::invalid_argument&) {
            fail(errc::bad_table_row, "unparseable row: " + t);
        }
    }
    return out;
}

} // namespace ct2
