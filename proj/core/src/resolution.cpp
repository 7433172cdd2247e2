#include "tate/resolution.hpp"

#include <algorithm>

namespace tate {

const ModuleMap& Resolution::diff(int n) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = diff_memo_.find(n);
    if (it == diff_memo_.end()) it = diff_memo_.emplace(n, make_diff(n)).first;
    return it->second;
}

Scalar Resolution::augment(const std::vector<AlgebraElement>& v) const {
    const Field& F = alg_->field();
    Scalar s = 0;
    for (const auto& e : v) s = F.add(s, alg_->augmentation(e));
    return s;
}

// ---------------------------------------------------------------------------
// TensorResolution

TensorResolution::TensorResolution(std::shared_ptr<const Algebra> a)
    : Resolution(a->r() == 1 ? Family::Cyclic : Family::AbelianProduct, a,
                 a->r() == 1 ? std::optional<int>(2) : std::nullopt) {
    if (alg_->kind() != AlgebraKind::TruncatedPolynomial)
        throw WrongKind("tensor resolution needs a truncated polynomial algebra");
}

void TensorResolution::ensure_labels(int n) const {
    if (labels_.count(n)) return;
    int rr = r();
    std::vector<std::vector<int>> out;
    // enumerate nonnegative multi-indices of total s in lex order
    auto enumerate = [&](int s) {
        std::vector<std::vector<int>> res;
        std::vector<int> cur(rr, 0);
        // recursive lexicographic enumeration
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == rr - 1) {
                cur[pos] = rem;
                res.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[pos] = v;
                self(self, pos + 1, rem - v);
            }
        };
        if (s >= 0) rec(rec, 0, s);
        return res;
    };
    if (n >= 0) {
        out = enumerate(n);
    } else {
        for (auto& g : enumerate(-n - 1)) {
            std::vector<int> alpha(rr);
            for (int i = 0; i < rr; ++i) alpha[i] = -1 - g[i];
            out.push_back(std::move(alpha));
        }
    }
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(out.size()); ++i) idx[out[i]] = i;
    labels_[n] = std::move(out);
    label_idx_[n] = std::move(idx);
}

int TensorResolution::rank(int n) const { return static_cast<int>(labels(n).size()); }

const std::vector<std::vector<int>>& TensorResolution::labels(int n) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    ensure_labels(n);
    return labels_[n];
}

int TensorResolution::label_index(int n, const std::vector<int>& alpha) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    ensure_labels(n);
    auto& idx = label_idx_[n];
    auto it = idx.find(alpha);
    return it == idx.end() ? -1 : it->second;
}

std::string TensorResolution::label_name(int n, int i) const {
    const auto& a = labels(n)[i];
    std::string s = "(";
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(a[j]);
    }
    return s + ")";
}

std::vector<int> TensorResolution::reflect_label(const std::vector<int>& alpha) const {
    std::vector<int> out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) out[i] = -1 - alpha[i];
    return out;
}

ModuleMap TensorResolution::make_diff(int n) const {
    // diff(n) : P_n -> P_{n-1}
    const auto& src = labels(n);
    const auto& F = alg_->field();
    ModuleMap D(alg_.get(), rank(n - 1), rank(n));
    int rr = r();
    if (n == 0) {
        // (0) -> prod_i (-z_i^{[0]}) (-1)
        Scalar c = (rr % 2 == 0) ? F.one() : F.neg(F.one());
        D.set_entry(0, 0, alg_->norm().scaled(c));
        return D;
    }
    for (int cidx = 0; cidx < static_cast<int>(src.size()); ++cidx) {
        const auto& b = src[cidx];
        int prefix = 0;
        for (int i = 0; i < rr; ++i) {
            bool include = (n > 0) ? (b[i] > 0) : true;
            if (include) {
                int sgn = prefix + (b[i] + 1);
                if (n < 0) sgn += i;  // the twisted Koszul sign of the negative range
                Scalar c = (((sgn % 2) + 2) % 2 == 0) ? F.one() : F.neg(F.one());
                std::vector<int> tgt = b;
                tgt[i] -= 1;
                int ridx = label_index(n - 1, tgt);
                if (ridx >= 0)
                    D.add_entry(ridx, cidx, alg_->z_power(i, bracket(b[i], i)).scaled(c));
            }
            prefix += b[i];
        }
    }
    return D;
}

std::optional<std::tuple<int, int, Scalar>> TensorResolution::contract_basis(int n, int label,
                                                                             int mono) const {
    const Field& F = alg_->field();
    const auto& alpha = labels(n)[label];
    const auto& gamma = alg_->monomial_exponents(mono);
    int rr = r();
    if (n == -1) {
        // glue: the norm spot maps to (0); everything else follows the
        // negative-range rule, which vanishes at factor degree -1.
        bool is_norm = true;
        for (int i = 0; i < rr; ++i)
            if (gamma[i] != alg_->exponents()[i] - 1) { is_norm = false; break; }
        if (is_norm) {
            Scalar c = (rr % 2 == 0) ? F.one() : F.neg(F.one());
            return std::make_tuple(0, alg_->monomial_index(std::vector<int>(rr, 0)), c);
        }
        return std::nullopt;
    }
    int i0 = -1;
    if (n >= 0) {
        for (int i = 0; i < rr; ++i)
            if (alpha[i] != 0 || gamma[i] != 0) { i0 = i; break; }
        if (i0 < 0) return std::nullopt;  // homology spot at degree 0
    } else {
        for (int i = 0; i < rr; ++i)
            if (alpha[i] != -1 || gamma[i] != alg_->exponents()[i] - 1) { i0 = i; break; }
        if (i0 < 0) return std::nullopt;
        if (alpha[i0] == -1) return std::nullopt;  // factor contraction vanishes at -1
    }
    int e = bracket(alpha[i0] + 1, i0);
    if (gamma[i0] < e) return std::nullopt;
    std::vector<int> a2 = alpha, g2 = gamma;
    a2[i0] += 1;
    g2[i0] -= e;
    int lidx = label_index(n + 1, a2);
    int midx = alg_->monomial_index(g2);
    if (lidx < 0 || midx < 0) return std::nullopt;
    Scalar c = (((alpha[i0] % 2) + 2) % 2 == 0) ? F.one() : F.neg(F.one());
    return std::make_tuple(lidx, midx, c);
}

std::vector<AlgebraElement> TensorResolution::contract(
    int n, const std::vector<AlgebraElement>& v) const {
    const Field& F = alg_->field();
    std::vector<AlgebraElement> out(rank(n + 1), alg_->zero());
    for (int l = 0; l < static_cast<int>(v.size()); ++l) {
        if (v[l].is_zero()) continue;
        for (int m = 0; m < alg_->dim(); ++m) {
            Scalar c = v[l].coeff(m);
            if (!c) continue;
            auto t = contract_basis(n, l, m);
            if (!t) continue;
            auto [l2, m2, s] = *t;
            out[l2] += alg_->basis_element(m2, F.mul(c, s));
        }
    }
    return out;
}

ModuleMap TensorResolution::left_divide(int k, const ModuleMap& G) const {
    // H : cols(G)-many columns into P_{k+1}, diff(k+1) ∘ H = G
    ModuleMap H(alg_.get(), rank(k + 1), G.cols());
    for (int c = 0; c < G.cols(); ++c) {
        std::vector<AlgebraElement> col(rank(k), alg_->zero());
        for (const auto& [row, e] : G.column(c)) col[row] = e;
        std::vector<AlgebraElement> x = contract(k, col);
        for (int row = 0; row < static_cast<int>(x.size()); ++row)
            if (!x[row].is_zero()) H.set_entry(row, c, x[row]);
    }
    if (!(diff(k + 1).compose(H) == G))
        throw NoLift("left_divide: no module lift (input not a boundary?)");
    return H;
}

void TensorResolution::ensure_twist(int t) const {
    if (twist_.count(t)) return;
    const Field& F = alg_->field();
    if (twist_.empty()) twist_[0] = {F.one()};
    // propagate from the closest known degree
    while (!twist_.count(t)) {
        int lo = twist_.begin()->first, hi = twist_.rbegin()->first;
        int from = (t > hi) ? hi : lo;
        int to = (t > hi) ? from + 1 : from - 1;
        const auto& known = twist_[from];
        std::vector<Scalar> next(rank(to), 0);
        // relation: D_{t+1}[a, b] = tw(t+1,b) tw(t,a) Dref[ref b, ref a],
        // Dref = diff(-t) with t+1 = max(from,to)
        int m = std::max(from, to);  // relation degree pair (m-1, m)
        const ModuleMap& D = diff(m);
        const ModuleMap& Dref = diff(-m);
        const auto& rows = labels(m - 1);
        const auto& cols = labels(m);
        for (int b = 0; b < static_cast<int>(cols.size()); ++b) {
            int rb = label_index(-m - 1 + 0, reflect_label(cols[b]));  // labels(-1-m)
            for (const auto& [a, e] : D.column(b)) {
                int ra = label_index(-m, reflect_label(rows[a]));
                AlgebraElement eref = Dref.entry(rb, ra);
                if (eref.is_zero()) throw Error("twist: reflected entry missing");
                // e = +-eref entrywise
                Scalar ratio = 0;
                for (int i = 0; i < alg_->dim(); ++i)
                    if (eref.coeff(i)) {
                        ratio = F.mul(e.coeff(i), F.inv(eref.coeff(i)));
                        break;
                    }
                if (eref.scaled(ratio) != e) throw Error("twist: entries not proportional");
                if (to == m) {  // solving tw(m, b)
                    Scalar v = F.mul(ratio, F.inv(known[a]));
                    if (next[b] && next[b] != v) throw Error("twist: inconsistent propagation");
                    next[b] = v;
                } else {  // to == m-1, solving tw(m-1, a)
                    Scalar v = F.mul(ratio, F.inv(known[b]));
                    if (next[a] && next[a] != v) throw Error("twist: inconsistent propagation");
                    next[a] = v;
                }
            }
        }
        for (Scalar v : next)
            if (!v) throw Error("twist: label not reached");
        twist_[to] = std::move(next);
    }
}

Scalar TensorResolution::twist(int t, int label) const {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    ensure_labels(t);
    ensure_twist(t);
    return twist_[t][label];
}

ModuleMap TensorResolution::right_divide(int m, const ModuleMap& G) const {
    // H ∘ diff(m) = G with G : P_m -> P_q. Transport through the self-duality
    // to a left division at the reflected degree.
    int rows = G.rows();
    const auto& colsm = labels(m);
    const auto& colsm1 = labels(m - 1);
    ModuleMap G2(alg_.get(), static_cast<int>(colsm.size()), rows);  // labels(-1-m) x rows
    for (int b = 0; b < static_cast<int>(colsm.size()); ++b) {
        int rb = label_index(-1 - m, reflect_label(colsm[b]));
        Scalar tw = twist(m, b);
        for (int rho = 0; rho < rows; ++rho) {
            AlgebraElement e = G.entry(rho, b);
            if (!e.is_zero()) G2.set_entry(rb, rho, e.scaled(tw));
        }
    }
    ModuleMap H2 = left_divide(-1 - m, G2);  // diff(-m) ∘ H2 = G2
    ModuleMap H(alg_.get(), rows, static_cast<int>(colsm1.size()));
    for (int a = 0; a < static_cast<int>(colsm1.size()); ++a) {
        int ra = label_index(-m, reflect_label(colsm1[a]));
        Scalar tw = twist(m - 1, a);
        for (int rho = 0; rho < rows; ++rho) {
            AlgebraElement e = H2.entry(ra, rho);
            if (!e.is_zero()) H.set_entry(rho, a, e.scaled(tw));
        }
    }
    if (!(H.compose(diff(m)) == G))
        throw NoLift("right_divide: no module lift (input not a boundary?)");
    return H;
}

// ---------------------------------------------------------------------------
// Q8Resolution

Q8Resolution::Q8Resolution(std::shared_ptr<const Algebra> a)
    : Resolution(Family::Q8, a, 4) {
    if (alg_->kind() != AlgebraKind::QuaternionQ8)
        throw WrongKind("Q8 resolution needs the quaternion algebra");
}

int Q8Resolution::rank(int n) const {
    switch (((n % 4) + 4) % 4) {
        case 0: case 3: return 1;
        default: return 2;
    }
}

std::string Q8Resolution::label_name(int n, int i) const {
    (void)n;
    return "e" + std::to_string(i);
}

ModuleMap Q8Resolution::make_diff(int n) const {
    // basis indices: E=0 I=1 J=2 K=3 E'=4 I'=5 J'=6 K'=7
    auto el = [&](std::initializer_list<int> gs) {
        AlgebraElement e = alg_->zero();
        for (int g : gs) e += alg_->basis_element(g);
        return e;
    };
    ModuleMap D(alg_.get(), rank(n - 1), rank(n));
    switch (((n % 4) + 4) % 4) {
        case 1:  // (I+E  J+E) : L^2 -> L
            D.set_entry(0, 0, el({1, 0}));
            D.set_entry(0, 1, el({2, 0}));
            break;
        case 2:  // [[J+E, K'+E], [K+E, I+E]]
            D.set_entry(0, 0, el({2, 0}));
            D.set_entry(0, 1, el({7, 0}));
            D.set_entry(1, 0, el({3, 0}));
            D.set_entry(1, 1, el({1, 0}));
            break;
        case 3:  // (I+E; J+E) : L -> L^2
            D.set_entry(0, 0, el({1, 0}));
            D.set_entry(1, 0, el({2, 0}));
            break;
        default:  // norm
            D.set_entry(0, 0, alg_->norm());
            break;
    }
    return D;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Resolution> cyclic_resolution(std::shared_ptr<const Algebra> a) {
    if (a->kind() != AlgebraKind::TruncatedPolynomial || a->r() != 1)
        throw WrongKind("cyclic resolution needs k[z]/z^n");
    return std::make_shared<TensorResolution>(std::move(a));
}

std::shared_ptr<const Resolution> q8_resolution(std::shared_ptr<const Algebra> a) {
    return std::make_shared<Q8Resolution>(std::move(a));
}

std::shared_ptr<const Resolution> abelian_resolution(std::shared_ptr<const Algebra> a) {
    if (a->kind() != AlgebraKind::TruncatedPolynomial || a->r() < 2)
        throw WrongKind("abelian product resolution needs r >= 2");
    return std::make_shared<TensorResolution>(std::move(a));
}

std::shared_ptr<const Resolution> standard_resolution(std::shared_ptr<const Algebra> a) {
    if (a->kind() == AlgebraKind::QuaternionQ8) return q8_resolution(std::move(a));
    return std::make_shared<TensorResolution>(std::move(a));
}

DenseMat flatten(const ModuleMap& m) {
    const Algebra& A = m.algebra();
    const Field* F = &A.field();
    int d = A.dim();
    DenseMat out(F, m.rows() * d, m.cols() * d);
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, e] : m.column(c))
            for (int v = 0; v < d; ++v) {
                // image of basis_v under left multiplication by e
                for (int i = 0; i < d; ++i) {
                    Scalar ci = e.coeff(i);
                    if (!ci) continue;
                    int u = A.mul_basis(i, v);
                    if (u >= 0) out.add_at(r * d + u, c * d + v, ci);
                }
            }
    return out;
}

CheckReport verify_exact(const Resolution& R, int a, int b) {
    CheckReport rep;
    const Algebra& A = R.algebra();
    const int d = A.dim();
    std::map<int, int> rk;
    for (int n = a; n <= b + 1; ++n) rk[n] = flatten(R.diff(n)).rank();
    for (int n = a; n < b; ++n) {
        if (!R.diff(n).compose(R.diff(n + 1)).is_zero())
            rep.fail("d∘d != 0 at degree " + std::to_string(n + 1));
        int dim_ker = R.rank(n) * d - rk[n];
        if (dim_ker != rk[n + 1])
            rep.fail("homology at degree " + std::to_string(n) + ": dim ker = " +
                     std::to_string(dim_ker) + ", dim im = " + std::to_string(rk[n + 1]));
    }
    if (a <= 0 && 0 < b) {
        // im diff(1) = ker eps at degree 0
        if (rk[1] != R.rank(0) * d - 1) rep.fail("im d_1 != ker eps at degree 0");
        const ModuleMap& d1 = R.diff(1);
        for (int c = 0; c < d1.cols(); ++c)
            for (const auto& [r, e] : d1.column(c))
                if (A.augmentation(e)) rep.fail("eps ∘ d_1 != 0");
    }
    return rep;
}

CheckReport verify_minimal(const Resolution& R, int a, int b) {
    CheckReport rep;
    const Algebra& A = R.algebra();
    for (int n = a; n <= b; ++n) {
        const ModuleMap& D = R.diff(n);
        for (int c = 0; c < D.cols(); ++c)
            for (const auto& [r, e] : D.column(c))
                if (!A.ideal_member(e, IdealSpec::I()))
                    rep.fail("non-minimal entry in d_" + std::to_string(n));
    }
    return rep;
}

}  // namespace tate
