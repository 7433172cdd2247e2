#include "tate/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace tate {

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (alg_ != o.alg_) throw AlgebraMismatch("element addition across algebras");
    const Field& F = alg_->field();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = F.add(c_[i], o.c_[i]);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (alg_ != o.alg_) throw AlgebraMismatch("element subtraction across algebras");
    const Field& F = alg_->field();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = F.sub(c_[i], o.c_[i]);
    return *this;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (alg_ != o.alg_) throw AlgebraMismatch("element product across algebras");
    const Field& F = alg_->field();
    AlgebraElement r = alg_->zero();
    std::vector<Scalar>& rc = const_cast<std::vector<Scalar>&>(r.coeffs());
    int dim = alg_->dim();
    for (int i = 0; i < dim; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; j < dim; ++j) {
            if (!o.c_[j]) continue;
            int k = alg_->mul_basis(i, j);
            if (k < 0) continue;
            rc[k] = F.add(rc[k], F.mul(c_[i], o.c_[j]));
        }
    }
    return r;
}

AlgebraElement AlgebraElement::scaled(Scalar c) const {
    const Field& F = alg_->field();
    AlgebraElement r = *this;
    std::vector<Scalar>& rc = const_cast<std::vector<Scalar>&>(r.coeffs());
    for (Scalar& v : rc) v = F.mul(v, c);
    return r;
}

std::string AlgebraElement::to_string() const {
    const Field& F = alg_->field();
    std::string s;
    for (int i = 0; i < alg_->dim(); ++i) {
        if (!c_[i]) continue;
        std::string term;
        if (c_[i] != 1) {
            std::string cs = F.to_string(c_[i]);
            if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
            term = cs + "*";
        }
        term += alg_->basis_name(i);
        if (!s.empty()) s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

namespace {

bool is_p_power(int m, int p) {
    if (m < 2) return false;
    while (m % p == 0) m /= p;
    return m == 1;
}

// Integer unit quaternions: a + bI + cJ + dK restricted to {±E, ±I, ±J, ±K}.
struct Quat {
    int a, b, c, d;
    Quat mul(const Quat& o) const {
        return {a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }
    bool operator==(const Quat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

}  // namespace

std::shared_ptr<const Algebra> Algebra::truncated_polynomial(const Field& F,
                                                             std::vector<int> exponents) {
    if (exponents.empty()) throw Error("need at least one factor");
    for (int m : exponents)
        if (!is_p_power(m, F.p()))
            throw NotPPower("exponent " + std::to_string(m) + " is not a power of " +
                            std::to_string(F.p()));
    auto A = std::shared_ptr<Algebra>(new Algebra());
    A->F_ = F;
    A->kind_ = AlgebraKind::TruncatedPolynomial;
    A->exps_ = exponents;
    int r = static_cast<int>(exponents.size());
    int dim = 1;
    for (int m : exponents) dim *= m;
    A->dim_ = dim;

    // monomials in degree-lex order
    std::vector<std::vector<int>> monos;
    std::vector<int> e(r, 0);
    for (;;) {
        monos.push_back(e);
        int i = r - 1;
        while (i >= 0 && e[i] + 1 >= exponents[i]) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    std::stable_sort(monos.begin(), monos.end(), [](const auto& x, const auto& y) {
        int sx = std::accumulate(x.begin(), x.end(), 0);
        int sy = std::accumulate(y.begin(), y.end(), 0);
        if (sx != sy) return sx < sy;
        return x < y;
    });
    A->mono_exps_ = monos;
    A->unit_index_ = 0;

    A->table_.assign(static_cast<std::size_t>(dim) * dim, -1);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<int> s(r);
            bool ok = true;
            for (int t = 0; t < r; ++t) {
                s[t] = monos[i][t] + monos[j][t];
                if (s[t] >= exponents[t]) { ok = false; break; }
            }
            if (ok) A->table_[static_cast<std::size_t>(i) * dim + j] = A->monomial_index(s);
        }
    A->build_names();
    return A;
}

std::shared_ptr<const Algebra> Algebra::quaternion(const Field& F) {
    if (F.p() != 2) throw WrongCharacteristic("kQ8 requires characteristic 2");
    auto A = std::shared_ptr<Algebra>(new Algebra());
    A->F_ = F;
    A->kind_ = AlgebraKind::QuaternionQ8;
    A->dim_ = 8;
    A->unit_index_ = 0;

    // Generate the group from the presentation realized by unit quaternions;
    // basis order (E, I, J, K, E', I', J', K').
    std::array<Quat, 8> els = {
        Quat{1, 0, 0, 0},  Quat{0, 1, 0, 0},  Quat{0, 0, 1, 0},  Quat{0, 0, 0, 1},
        Quat{-1, 0, 0, 0}, Quat{0, -1, 0, 0}, Quat{0, 0, -1, 0}, Quat{0, 0, 0, -1}};
    A->table_.assign(64, -1);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Quat p = els[i].mul(els[j]);
            for (int k = 0; k < 8; ++k)
                if (els[k] == p) {
                    A->table_[static_cast<std::size_t>(i) * 8 + j] = k;
                    break;
                }
        }
    A->build_names();
    return A;
}

void Algebra::build_names() {
    names_.clear();
    if (kind_ == AlgebraKind::QuaternionQ8) {
        names_ = {"E", "I", "J", "K", "E'", "I'", "J'", "K'"};
        return;
    }
    for (const auto& e : mono_exps_) {
        std::string s;
        for (int i = 0; i < r(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += "z" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        names_.push_back(s.empty() ? "1" : s);
    }
}

AlgebraElement Algebra::basis_element(int i, Scalar c) const {
    std::vector<Scalar> v(dim_, 0);
    v[i] = c;
    return {this, std::move(v)};
}

int Algebra::monomial_index(const std::vector<int>& e) const {
    for (int i = 0; i < r(); ++i)
        if (e[i] < 0 || e[i] >= exps_[i]) return -1;
    for (int i = 0; i < dim_; ++i)
        if (mono_exps_[i] == e) return i;
    return -1;
}

AlgebraElement Algebra::generator(int i) const { return z_power(i, 1); }

AlgebraElement Algebra::z_power(int i, int e) const {
    if (kind_ != AlgebraKind::TruncatedPolynomial) throw Error("z_power on kQ8");
    if (e == 0) return one();
    std::vector<int> exp(r(), 0);
    exp[i] = e;
    int k = monomial_index(exp);
    if (k < 0) return zero();
    return basis_element(k);
}

AlgebraElement Algebra::norm() const {
    if (kind_ == AlgebraKind::QuaternionQ8) {
        std::vector<Scalar> v(8, 1);
        return {this, std::move(v)};
    }
    std::vector<int> e(exps_.begin(), exps_.end());
    for (int& m : e) m -= 1;
    return basis_element(monomial_index(e));
}

AlgebraElement Algebra::partial_norm(int i) const {
    if (kind_ != AlgebraKind::TruncatedPolynomial) throw Error("partial_norm on kQ8");
    std::vector<int> e(exps_.begin(), exps_.end());
    for (int& m : e) m -= 1;
    e[i] = 0;
    return basis_element(monomial_index(e));
}

Scalar Algebra::augmentation(const AlgebraElement& a) const {
    // Evaluation at the group identity: on the monomial basis of a truncated
    // algebra (z_i = g_i - 1) this kills every z, on the group basis of kQ8
    // it sums the coefficients.
    if (kind_ == AlgebraKind::TruncatedPolynomial) return a.coeff(unit_index_);
    Scalar s = 0;
    for (int i = 0; i < dim_; ++i) s = F_.add(s, a.coeff(i));
    return s;
}

bool Algebra::basis_in_ideal(int i, const IdealSpec& spec) const {
    if (kind_ == AlgebraKind::TruncatedPolynomial) {
        const std::vector<int>& e = mono_exps_[i];
        if (spec.tag == IdealSpec::AugmentationPower) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            return deg >= spec.m;
        }
        if (spec.m <= 0) return true;
        // J_m: divisible by z_i^{m_i-1} for m distinct indices
        int hits = 0;
        for (int t = 0; t < r(); ++t)
            if (e[t] >= exps_[t] - 1) ++hits;
        return hits >= spec.m;
    }
    throw Error("basis_in_ideal: use ideal_member for kQ8");
}

bool Algebra::ideal_member(const AlgebraElement& a, const IdealSpec& spec) const {
    if (kind_ == AlgebraKind::TruncatedPolynomial) {
        for (int i = 0; i < dim_; ++i)
            if (a.coeff(i) && !basis_in_ideal(i, spec)) return false;
        return true;
    }
    if (spec.tag == IdealSpec::JPower)
        throw InvalidSpec("J_m is only defined for truncated polynomial algebras");
    if (spec.m <= 0) return true;
    // Row-reduced bases of I^m, built once per power from the spanning sets.
    const Field& F = F_;
    if (q8_ideal_bases_.empty()) {
        std::vector<std::vector<Scalar>> I1;
        for (int g = 1; g < 8; ++g) {
            std::vector<Scalar> v(8, 0);
            v[g] = 1;
            v[0] = F.neg(F.one());
            I1.push_back(v);
        }
        q8_ideal_bases_.push_back(reduceRows(I1));
        while (!q8_ideal_bases_.back().empty() && q8_ideal_bases_.size() < 10) {
            std::vector<std::vector<Scalar>> span;
            for (const auto& u : q8_ideal_bases_.back())
                for (const auto& w : q8_ideal_bases_.front()) {
                    AlgebraElement p = AlgebraElement(this, u) * AlgebraElement(this, w);
                    span.push_back(p.coeffs());
                }
            q8_ideal_bases_.push_back(reduceRows(span));
        }
    }
    std::size_t k = static_cast<std::size_t>(spec.m) - 1;
    const std::vector<std::vector<Scalar>>* basis = nullptr;
    static const std::vector<std::vector<Scalar>> empty;
    basis = (k < q8_ideal_bases_.size()) ? &q8_ideal_bases_[k] : &empty;
    // reduce a against the basis
    std::vector<Scalar> v = a.coeffs();
    for (const auto& row : *basis) {
        int piv = -1;
        for (int i = 0; i < 8; ++i)
            if (row[i]) { piv = i; break; }
        if (piv < 0 || !v[piv]) continue;
        Scalar c = F.mul(v[piv], F.inv(row[piv]));
        for (int i = 0; i < 8; ++i) v[i] = F.sub(v[i], F.mul(c, row[i]));
    }
    for (Scalar c : v)
        if (c) return false;
    return true;
}

std::vector<std::vector<Scalar>> Algebra::reduceRows(
    std::vector<std::vector<Scalar>> rows) const {
    const Field& F = F_;
    std::vector<std::vector<Scalar>> basis;
    for (auto& v : rows) {
        for (const auto& row : basis) {
            int piv = -1;
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i]) { piv = static_cast<int>(i); break; }
            if (piv < 0 || !v[piv]) continue;
            Scalar c = F.mul(v[piv], F.inv(row[piv]));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(c, row[i]));
        }
        bool nz = false;
        for (Scalar c : v)
            if (c) { nz = true; break; }
        if (nz) basis.push_back(v);
    }
    return basis;
}

}  // namespace tate
