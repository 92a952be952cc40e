#include "hopfforms/polynomial.hpp"

#include <algorithm>

namespace hopfforms {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const Poly& p) {
    for (size_t i = p.size(); i > 0; --i) {
        if (p[i - 1] != 0) return static_cast<int>(i - 1);
    }
    return -1;
}

bool poly_is_monic(const Poly& p) {
    int d = poly_degree(p);
    return d >= 0 && p[static_cast<size_t>(d)] == 1;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly rem = poly_trim(a);
    Poly div = poly_trim(b);
    int db = poly_degree(div);
    if (db < 0) throw MathError("polynomial division by zero");
    int da = poly_degree(rem);
    if (da < db) return {{}, rem};
    Poly quot(static_cast<size_t>(da - db) + 1, Rational(0));
    const Rational& lead = div[static_cast<size_t>(db)];
    while ((da = poly_degree(rem)) >= db) {
        Rational c = rem[static_cast<size_t>(da)] / lead;
        size_t shift = static_cast<size_t>(da - db);
        quot[shift] = c;
        for (int i = 0; i <= db; ++i) {
            rem[shift + static_cast<size_t>(i)] -= c * div[static_cast<size_t>(i)];
        }
        rem = poly_trim(std::move(rem));
    }
    return {poly_trim(std::move(quot)), rem};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_monic(Poly p) {
    p = poly_trim(std::move(p));
    int d = poly_degree(p);
    if (d < 0) throw MathError("cannot make zero polynomial monic");
    Rational lead = p[static_cast<size_t>(d)];
    for (auto& x : p) x /= lead;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return poly_monic(std::move(a));
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational r = 0;
    for (size_t i = p.size(); i > 0; --i) {
        r = r * x + p[i - 1];
    }
    return r;
}

bool poly_eq(const Poly& a, const Poly& b) { return poly_trim(a) == poly_trim(b); }

}  // namespace hopfforms
