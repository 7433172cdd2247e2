#include "tate/field.hpp"

#include <algorithm>

namespace tate {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using Poly = std::vector<int>;  // coefficients mod p, low to high, may have trailing zeros

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(std::move(a));
    Poly mm = trim(m);
    while (a.size() >= mm.size() && !a.empty()) {
        // mm is monic
        int lead = a.back();
        std::size_t shift = a.size() - mm.size();
        for (std::size_t i = 0; i < mm.size(); ++i) {
            int v = a[shift + i] - lead * mm[i];
            a[shift + i] = ((v % p) + p) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return trim(std::move(c));
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, int p) {
    Poly mm = trim(m);
    int n = static_cast<int>(mm.size()) - 1;
    if (n <= 0) return false;
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            Poly div(d + 1, 0);
            long long t = c;
            for (int i = 0; i < d; ++i) { div[i] = static_cast<int>(t % p); t /= p; }
            div[d] = 1;
            if (poly_mod(mm, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int n, std::vector<int> modulus) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw Error("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    if (q > 256) throw Error("field order exceeds 256");
    p_ = p;
    n_ = n;
    q_ = static_cast<int>(q);

    Poly mod;
    if (n == 1) {
        mod = {0, 1};  // X, unused placeholder
    } else {
        if (static_cast<int>(modulus.size()) != n + 1)
            throw Error("modulus must have n+1 coefficients");
        for (int& c : modulus) c = ((c % p) + p) % p;
        if (modulus.back() != 1) throw Error("modulus must be monic");
        if (!is_irreducible(modulus, p))
            throw Reducible("modulus factors over F_" + std::to_string(p));
        mod = Poly(modulus.begin(), modulus.end());
    }
    modulus_.assign(mod.begin(), mod.end());

    auto decode = [&](int v) {
        Poly a;
        while (v) { a.push_back(v % p); v /= p; }
        return a;
    };
    auto encode = [&](const Poly& a) {
        int v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
        return static_cast<Scalar>(v);
    };

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        Poly na(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
        neg_[a] = encode(trim(na));
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                int v = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                s[i] = v % p;
            }
            add_[idx(static_cast<Scalar>(a), static_cast<Scalar>(b))] = encode(trim(s));
            mul_[idx(static_cast<Scalar>(a), static_cast<Scalar>(b))] =
                encode(poly_mod(poly_mul(pa, pb, p), mod, p));
        }
    }
    // Inverses by exhaustive search; q <= 256 keeps this immediate.
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(static_cast<Scalar>(a), static_cast<Scalar>(b))] == 1) {
                inv_[a] = static_cast<Scalar>(b);
                break;
            }
}

Scalar Field::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return static_cast<Scalar>(r);
}

std::string Field::to_string(Scalar a) const {
    if (n_ == 1) return std::to_string(static_cast<int>(a));
    // polynomial in the power-basis generator 'a'
    std::string s;
    int v = a;
    for (int i = 0; v; ++i, v /= p_) {
        int d = v % p_;
        if (!d) continue;
        std::string term;
        if (i == 0) term = std::to_string(d);
        else {
            if (d != 1) term = std::to_string(d) + "*";
            term += "a";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!s.empty()) s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace tate
