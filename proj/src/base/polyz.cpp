#include "base/polyz.hpp"

#include <algorithm>
#include <sstream>

#include "base/error.hpp"

namespace ct2 {

ZPoly ZPoly::x_power(size_t k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return ZPoly(std::move(c));
}

Int ZPoly::operator()(const Int& x) const {
    Int r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

Rat ZPoly::operator()(const Rat& x) const {
    Rat r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + Rat(c[i]);
    return r;
}

std::string ZPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int aa = abs(a);
        if (i == 0 || aa != 1) os << aa.get_str();
        if (i >= 1) {
            if (aa != 1) os << "*";
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return ZPoly(std::move(c));
}

ZPoly operator*(const Int& k, const ZPoly& a) {
    std::vector<Int> c = a.c;
    for (auto& x : c) x *= k;
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a) { return Int(-1) * a; }

ZPoly derivative(const ZPoly& a) {
    if (a.degree() <= 0) return {};
    std::vector<Int> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = Int(static_cast<long>(i)) * a.c[i];
    return ZPoly(std::move(c));
}

Int content(const ZPoly& a) {
    Int g = 0;
    for (const auto& x : a.c) g = gcd(g, x);
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    if (a.is_zero()) return {};
    Int g = content(a);
    if (a.lead() < 0) g = -g;
    std::vector<Int> c = a.c;
    for (auto& x : c) x = divexact(x, g);
    return ZPoly(std::move(c));
}

void divrem_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    check(b.is_monic(), errc::internal, "divrem_monic: divisor not monic");
    r = a;
    std::vector<Int> qc;
    int db = b.degree();
    if (r.degree() >= db) qc.assign(static_cast<size_t>(r.degree() - db) + 1, Int(0));
    while (r.degree() >= db) {
        int k = r.degree() - db;
        Int f = r.lead();
        qc[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) r.c[static_cast<size_t>(k + i)] -= f * b.c[static_cast<size_t>(i)];
        r.trim();
    }
    q = ZPoly(std::move(qc));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    check(!b.is_zero(), errc::internal, "poly divexact by zero");
    ZPoly r = a;
    int db = b.degree();
    std::vector<Int> qc;
    if (r.degree() >= db) qc.assign(static_cast<size_t>(r.degree() - db) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= db) {
        Int f = r.lead();
        check(f % b.lead() == 0, errc::internal, "poly divexact: not divisible (lead)");
        f = divexact(f, b.lead());
        int k = r.degree() - db;
        qc[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= db; ++i) r.c[static_cast<size_t>(k + i)] -= f * b.c[static_cast<size_t>(i)];
        r.trim();
    }
    check(r.is_zero(), errc::internal, "poly divexact: nonzero remainder");
    return ZPoly(std::move(qc));
}

bool divides_q(const ZPoly& b, const ZPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero() || b.degree() > a.degree()) return false;
    ZPoly r = a;
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int lr = r.lead(), lb = b.lead();
        Int g = gcd(lr, lb);
        Int mul = divexact(lb, g), f = divexact(lr, g);
        for (auto& x : r.c) x *= mul;
        for (int i = 0; i <= db; ++i) r.c[static_cast<size_t>(k + i)] -= f * b.c[static_cast<size_t>(i)];
        r.trim();
    }
    return r.is_zero();
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly prem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    int db = b.degree();
    Int lb = b.lead();
    int e = r.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int f = r.lead();
        for (auto& x : r.c) x *= lb;
        for (int i = 0; i <= db; ++i) r.c[static_cast<size_t>(k + i)] -= f * b.c[static_cast<size_t>(i)];
        r.trim();
        --e;
    }
    for (; e > 0; --e)
        for (auto& x : r.c) x *= lb;
    return r;
}

// Fraction-free determinant (Bareiss) of a square Int matrix, destructive.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Yun squarefree decomposition of a primitive polynomial:
// f = prod piece_i^{mult_i}, pieces squarefree, pairwise coprime.
std::vector<std::pair<ZPoly, int>> yun_decompose(const ZPoly& f_in) {
    // All intermediate divisions are exact over Z once f is primitive (the
    // divisors are primitive gcds), so plain divexact keeps the contents the
    // recurrence d = c - b' depends on.
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly f = primitive_part(f_in);
    if (f.degree() <= 0) return out;
    ZPoly df = derivative(f);
    ZPoly a0 = gcd(f, df);
    if (a0.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    ZPoly b = divexact(f, a0);
    ZPoly c = divexact(df, a0);
    ZPoly d = c - derivative(b);
    int mult = 1;
    while (b.degree() > 0) {
        ZPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = divexact(b, g);
        c = g.degree() > 0 || g.lead() != 1 ? divexact(d, g) : d;
        d = c - derivative(b);
        ++mult;
    }
    return out;
}

} // namespace

Int resultant(const ZPoly& a, const ZPoly& b) {
    // Sylvester matrix + fraction-free determinant. Desk-scale degrees make
    // this the simplest exact route.
    if (a.is_zero() || b.is_zero()) return Int(0);
    int m = a.degree(), n = b.degree();
    if (m == 0) return pow_ui(a.c[0], static_cast<unsigned long>(n));
    if (n == 0) return pow_ui(b.c[0], static_cast<unsigned long>(m));
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> s(N, std::vector<Int>(N, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a.c[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b.c[static_cast<size_t>(n - j)];
    return bareiss_det(s);
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
    if (a_in.is_zero()) return b_in.is_zero() ? ZPoly{} : primitive_part(b_in);
    if (b_in.is_zero()) return primitive_part(a_in);
    ZPoly a = primitive_part(a_in), b = primitive_part(b_in);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = prem(a, b);
        a = b;
        b = r.is_zero() ? ZPoly{} : primitive_part(r);
    }
    Int cg = gcd(content(a_in), content(b_in));
    return cg * a;
}

Int discriminant(const ZPoly& a) {
    check(a.degree() >= 1, errc::internal, "discriminant: degree < 1");
    Int res = resultant(a, derivative(a));
    int n = a.degree();
    Int d = divexact(res, a.lead());
    long e = static_cast<long>(n) * (n - 1) / 2;
    return (e % 2 == 0) ? d : -d;
}

ZPoly squarefree_part(const ZPoly& a) {
    check(!a.is_zero(), errc::internal, "squarefree_part(0)");
    if (a.degree() == 0) return ZPoly{{Int(1)}};
    ZPoly out{{Int(1)}};
    for (const auto& [piece, mult] : yun_decompose(a)) {
        (void)mult;
        out = out * piece;
    }
    return primitive_part(out);
}

bool square_decompose(const ZPoly& a, ZPoly& s, Rat& k) {
    if (a.is_zero()) return false;
    if (a.degree() == 0) {
        s = ZPoly{{Int(1)}};
        k = Rat(a.c[0]);
        return true;
    }
    if (a.degree() % 2 != 0) return false;
    ZPoly root{{Int(1)}};
    for (const auto& [piece, mult] : yun_decompose(a)) {
        if (mult % 2 != 0) return false;
        for (int i = 0; i < mult / 2; ++i) root = root * piece;
    }
    s = primitive_part(root);
    ZPoly s2 = s * s;
    if (s2.degree() != a.degree()) return false;
    k = Rat(a.lead()) / Rat(s2.lead());
    k.canonicalize();
    // verify a == k * s^2 exactly
    ZPoly lhs = Int(k.get_den()) * a;
    ZPoly rhs = Int(k.get_num()) * s2;
    return (lhs - rhs).is_zero();
}

ZPoly shift(const ZPoly& a, const Int& t) {
    ZPoly r;
    for (size_t i = a.c.size(); i-- > 0;) {
        ZPoly rx = ZPoly::x_power(1) * r + t * r;
        r = rx + ZPoly::constant(a.c[i]);
    }
    return r;
}

ZPoly reflect(const ZPoly& a) {
    std::vector<Int> c = a.c;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return ZPoly(std::move(c));
}

std::vector<Int> integer_roots(const ZPoly& a_in) {
    std::vector<Int> roots;
    if (a_in.is_zero()) return roots;
    ZPoly a = a_in;
    size_t k = 0;
    while (k < a.c.size() && a.c[k] == 0) ++k;
    if (k > 0) {
        roots.push_back(Int(0));
        a = ZPoly(std::vector<Int>(a.c.begin() + static_cast<long>(k), a.c.end()));
    }
    if (a.degree() < 1) {
        return roots;
    }
    Int c0 = abs(a.c[0]);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factorize(c0)) {
        size_t old = divs.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pk);
        }
    }
    for (const auto& d : divs) {
        for (int sgn : {1, -1}) {
            Int cand = sgn * d;
            if (a(cand) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

ZPoly parse_poly(const std::string& line) {
    std::vector<Int> c;
    std::string tok;
    std::istringstream is(line);
    while (std::getline(is, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t\r\n");
        size_t e = tok.find_last_not_of(" \t\r\n");
        check(b != std::string::npos, errc::usage, "empty coefficient in polynomial '" + line + "'");
        c.emplace_back(tok.substr(b, e - b + 1));
    }
    check(!c.empty(), errc::usage, "empty polynomial");
    return ZPoly(std::move(c));
}

std::string format_poly(const ZPoly& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) os << ",";
        os << p.c[i].get_str();
    }
    if (p.c.empty()) os << "0";
    return os.str();
}

} // namespace ct2
