#include "hopfforms/numberfield.hpp"

#include <algorithm>

#include "hopfforms/field.hpp"
#include "hopfforms/matrix.hpp"

namespace hopfforms {
namespace {

// --- arithmetic mod a word-sized prime, for the witness certificate ---

using u64 = std::uint64_t;

u64 mod_mul(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 mod_pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

using MPoly = std::vector<u64>;  // low-degree-first over F_p

MPoly mp_trim(MPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

MPoly mp_mod(MPoly a, const MPoly& m, u64 p) {
    a = mp_trim(std::move(a));
    const size_t dm = m.size() - 1;
    u64 lead_inv = mod_inv(m.back(), p);
    while (a.size() > dm) {
        u64 c = mod_mul(a.back(), lead_inv, p);
        size_t shift = a.size() - 1 - dm;
        if (c != 0) {
            for (size_t i = 0; i <= dm; ++i) {
                u64 sub = mod_mul(c, m[i], p);
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a = mp_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

MPoly mp_mulmod(const MPoly& a, const MPoly& b, const MPoly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mod_mul(a[i], b[j], p)) % p;
        }
    }
    return mp_mod(std::move(r), m, p);
}

// x^(p^k) mod m, by k rounds of p-th powering.
MPoly mp_frobenius_power(const MPoly& m, u64 p, unsigned k) {
    MPoly x = mp_mod({0, 1}, m, p);
    MPoly cur = x;
    for (unsigned round = 0; round < k; ++round) {
        MPoly acc = {1};
        MPoly base = cur;
        u64 e = p;
        while (e) {
            if (e & 1) acc = mp_mulmod(acc, base, m, p);
            base = mp_mulmod(base, base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

MPoly mp_gcd(MPoly a, MPoly b, u64 p) {
    a = mp_trim(std::move(a));
    b = mp_trim(std::move(b));
    while (!b.empty()) {
        MPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

MPoly mp_derivative(const MPoly& f, u64 p) {
    MPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(mod_mul(f[i], i % p, p));
    return mp_trim(std::move(d));
}

// Reduces a rational polynomial mod p; nullopt when p divides a denominator.
std::optional<MPoly> mp_from_poly(const Poly& f, u64 p) {
    MPoly r;
    for (const Rational& c : f) {
        Int num = numerator(c) % Int(p);
        Int den = denominator(c) % Int(p);
        if (den == 0) return std::nullopt;
        u64 n = static_cast<u64>((num % Int(p) + Int(p)) % Int(p));
        u64 d = static_cast<u64>(den);
        r.push_back(mod_mul(n, mod_inv(d, p), p));
    }
    return mp_trim(std::move(r));
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// True when f (monic, degree n >= 1) is irreducible over F_p.
bool mp_irreducible(const MPoly& f, u64 p) {
    size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    if (!mp_gcd(f, mp_derivative(f, p), p).empty() &&
        mp_gcd(f, mp_derivative(f, p), p).size() > 1)
        return false;  // not squarefree mod p
    MPoly x = mp_mod({0, 1}, f, p);
    // x^(p^n) == x mod f
    MPoly xpn = mp_frobenius_power(f, p, static_cast<unsigned>(n));
    if (mp_trim(xpn) != mp_trim(x)) {
        // compare after aligning sizes
        MPoly a = mp_trim(xpn), b = mp_trim(x);
        if (a != b) return false;
    }
    // gcd(x^(p^(n/q)) - x, f) == 1 for each prime q | n
    for (size_t q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime_u64(q)) continue;
        MPoly xpk = mp_frobenius_power(f, p, static_cast<unsigned>(n / q));
        MPoly diff = xpk;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        diff = mp_trim(std::move(diff));
        MPoly g = mp_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// Quick rational-root scan for monic polynomials with integer coefficients
// and a small constant term. Returns a root if one is found.
std::optional<Rational> find_small_rational_root(const Poly& f) {
    for (const Rational& c : f)
        if (denominator(c) != 1) return std::nullopt;
    Int c0 = numerator(f[0]);
    if (c0 == 0) return Rational(0);
    Int bound = abs(c0);
    if (bound > 1000000) return std::nullopt;
    for (Int d = 1; d <= bound; ++d) {
        if (abs(c0) % d != 0) continue;
        for (int sign : {1, -1}) {
            Rational cand(sign * d);
            if (poly_eval(f, cand) == 0) return cand;
        }
    }
    return std::nullopt;
}

bool is_rational_square(const Rational& r, Rational& root) {
    if (r < 0) return false;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn == n && sd * sd == d) {
        root = Rational(sn, sd);
        return true;
    }
    return false;
}

}  // namespace

NumberField::NumberField(Poly min_poly, std::string label, IrredCert cert,
                         std::optional<std::uint64_t> witness_prime)
    : min_poly_(poly_trim(std::move(min_poly))), label_(std::move(label)),
      cert_(cert), witness_prime_(witness_prime) {
    int d = poly_degree(min_poly_);
    if (d < 1) throw MathError("number field needs degree >= 1");
    if (!poly_is_monic(min_poly_)) throw MathError("defining polynomial must be monic");
    degree_ = static_cast<size_t>(d);
}

bool same_field(const NumberFieldPtr& a, const NumberFieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return poly_eq(a->min_poly(), b->min_poly());
}

NumberFieldPtr nf_create(const Poly& min_poly, const std::string& label,
                         std::optional<std::uint64_t> witness_prime) {
    Poly f = poly_trim(min_poly);
    int d = poly_degree(f);
    if (d < 1) throw MathError("number field needs degree >= 1");
    if (!poly_is_monic(f)) throw MathError("defining polynomial must be monic");

    if (auto root = find_small_rational_root(f)) {
        if (d > 1)
            throw MathError("reducible defining polynomial: rational root " +
                            rat_to_string(*root));
    }
    if (d == 1) {
        return std::make_shared<NumberField>(f, label, IrredCert::Direct);
    }
    if (d == 2) {
        // x^2 + bx + c irreducible over Q iff b^2 - 4c is not a square
        Rational disc = f[1] * f[1] - 4 * f[0];
        Rational root(0);
        if (is_rational_square(disc, root))
            throw MathError("reducible quadratic: rational root " +
                            rat_to_string((-f[1] + root) / 2));
        return std::make_shared<NumberField>(f, label, IrredCert::Direct);
    }
    if (witness_prime) {
        u64 p = *witness_prime;
        if (!is_prime_u64(p)) throw MathError("irreducibility witness is not prime");
        auto fp = mp_from_poly(f, p);
        if (!fp || fp->size() != static_cast<size_t>(d) + 1)
            throw MathError("witness prime divides a denominator or the leading term");
        if (!mp_irreducible(*fp, p))
            throw MathError("witness prime " + std::to_string(p) +
                            " does not certify irreducibility");
        return std::make_shared<NumberField>(f, label, IrredCert::WitnessPrime, p);
    }
    return std::make_shared<NumberField>(f, label, IrredCert::Asserted);
}

bool NFElement::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    return true;
}

Rational NFElement::rational_part() const {
    if (!is_rational()) throw MathError("element is not rational");
    return coeffs.empty() ? Rational(0) : coeffs[0];
}

NFElement nf_zero(const NumberFieldPtr& f) {
    return {f, std::vector<Rational>(f->degree(), Rational(0))};
}

NFElement nf_one(const NumberFieldPtr& f) { return nf_from_rational(f, 1); }

NFElement nf_from_rational(const NumberFieldPtr& f, const Rational& r) {
    NFElement e = nf_zero(f);
    e.coeffs[0] = r;
    return e;
}

NFElement nf_from_coeffs(const NumberFieldPtr& f, std::vector<Rational> coeffs) {
    if (coeffs.size() > f->degree()) {
        Poly reduced = poly_mod(poly_trim(std::move(coeffs)), f->min_poly());
        reduced.resize(f->degree(), Rational(0));
        return {f, std::move(reduced)};
    }
    coeffs.resize(f->degree(), Rational(0));
    return {f, std::move(coeffs)};
}

NFElement nf_generator(const NumberFieldPtr& f) {
    NFElement e = nf_zero(f);
    if (f->degree() == 1) {
        // Q(theta) with theta rational: theta = -c0
        e.coeffs[0] = -f->min_poly()[0];
    } else {
        e.coeffs[1] = 1;
    }
    return e;
}

static void check_same(const NFElement& a, const NFElement& b) {
    if (!same_field(a.field, b.field))
        throw MathError("number field elements from different fields");
}

NFElement nf_add(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    NFElement r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

NFElement nf_sub(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    NFElement r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

NFElement nf_neg(const NFElement& a) {
    NFElement r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

NFElement nf_mul(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    Poly prod = poly_mul(poly_trim(a.coeffs), poly_trim(b.coeffs));
    Poly red = poly_mod(prod, a.field->min_poly());
    red.resize(a.field->degree(), Rational(0));
    return {a.field, std::move(red)};
}

NFElement nf_inv(const NFElement& a) {
    if (a.is_zero()) throw MathError("inversion of zero field element");
    // extended gcd of the coefficient polynomial with the minimal polynomial
    Poly r0 = a.field->min_poly(), r1 = poly_trim(a.coeffs);
    Poly t0 = {}, t1 = {Rational(1)};
    while (poly_degree(r1) > 0) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw MathError("element shares a factor with the minimal polynomial");
    Poly inv = poly_scale(t1, 1 / r1[0]);
    inv = poly_mod(inv, a.field->min_poly());
    inv.resize(a.field->degree(), Rational(0));
    return {a.field, std::move(inv)};
}

NFElement nf_pow(const NFElement& a, long e) {
    if (e < 0) return nf_pow(nf_inv(a), -e);
    NFElement r = nf_one(a.field);
    NFElement base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r = nf_mul(r, base);
        base = nf_mul(base, base);
        n >>= 1;
    }
    return r;
}

bool nf_eq(const NFElement& a, const NFElement& b) {
    check_same(a, b);
    return a.coeffs == b.coeffs;
}

NFElement nf_eval_poly(const Poly& p, const NFElement& x) {
    NFElement r = nf_zero(x.field);
    for (size_t i = p.size(); i > 0; --i) {
        r = nf_mul(r, x);
        r.coeffs[0] += p[i - 1];
    }
    return r;
}

Poly minimal_polynomial(const NFElement& x) {
    const size_t n = x.field->degree();
    QQ qq;
    // columns: 1, x, x^2, ...; find the least k with x^k in the span of lower powers
    std::vector<NFElement> powers;
    powers.push_back(nf_one(x.field));
    for (size_t k = 1; k <= n; ++k) {
        powers.push_back(nf_mul(powers.back(), x));
        Matrix<QQ> m(qq, n, k);
        for (size_t j = 0; j < k; ++j)
            for (size_t i = 0; i < n; ++i) m.at(i, j) = powers[j].coeffs[i];
        auto sol = solve_linear(m, powers[k].coeffs);
        if (sol) {
            Poly p(k + 1, Rational(0));
            for (size_t j = 0; j < k; ++j) p[j] = -(*sol)[j];
            p[k] = 1;
            return p;
        }
    }
    throw MathError("minimal polynomial search failed");  // unreachable
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::optional<unsigned> is_root_of_unity(const NFElement& x) {
    if (x.is_zero()) throw MathError("zero is not a root of unity");
    const unsigned n = static_cast<unsigned>(x.field->degree());
    // an order-d root of unity generates a degree-phi(d) subfield, so only
    // d with phi(d) <= n can occur; phi(d) > sqrt(d/2) bounds the search
    unsigned bound = 2 * n * n + 4;
    NFElement y = x;
    for (unsigned d = 1; d <= bound; ++d) {
        if (euler_phi(d) <= n && nf_eq(y, nf_one(x.field))) return d;
        if (d < bound) y = nf_mul(y, x);
    }
    return std::nullopt;
}

}  // namespace hopfforms
