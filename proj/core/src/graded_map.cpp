#include "tate/graded_map.hpp"

#include <map>
#include <mutex>
#include <variant>

namespace tate {

namespace {
int floormod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

struct GradedMap::Impl {
    std::shared_ptr<const Resolution> res;
    int degree = 0;
    int lo = -kUnbounded, hi = kUnbounded;
    std::string name;

    struct Table { int lo; std::vector<ModuleMap> mats; };
    struct Periodic { int period; std::vector<ModuleMap> mats; };
    struct Rule { std::function<ModuleMap(int)> make; };
    std::variant<Table, Periodic, Rule> repr;

    mutable std::map<int, ModuleMap> memo;
    mutable std::recursive_mutex mu;

    const ModuleMap& at(int j) const {
        std::lock_guard<std::recursive_mutex> lk(mu);
        auto it = memo.find(j);
        if (it != memo.end()) return it->second;
        ModuleMap m;
        if (auto* t = std::get_if<Table>(&repr)) {
            m = t->mats[static_cast<std::size_t>(j - t->lo)];
        } else if (auto* p = std::get_if<Periodic>(&repr)) {
            m = p->mats[static_cast<std::size_t>(floormod(j, p->period))];
        } else {
            m = std::get<Rule>(repr).make(j);
        }
        if (m.rows() != res->rank(j) || m.cols() != res->rank(j + degree))
            throw Error("graded map materialization has wrong shape at j=" +
                        std::to_string(j));
        return memo.emplace(j, std::move(m)).first->second;
    }
};

GradedMap GradedMap::from_rule(std::shared_ptr<const Resolution> res, int degree,
                               std::function<ModuleMap(int)> make, std::string name, int lo,
                               int hi) {
    GradedMap g;
    g.impl_ = std::make_shared<Impl>();
    g.impl_->res = std::move(res);
    g.impl_->degree = degree;
    g.impl_->lo = lo;
    g.impl_->hi = hi;
    g.impl_->name = std::move(name);
    g.impl_->repr = Impl::Rule{std::move(make)};
    return g;
}

GradedMap GradedMap::from_table(std::shared_ptr<const Resolution> res, int degree, int lo,
                                std::vector<ModuleMap> mats, std::string name) {
    GradedMap g;
    g.impl_ = std::make_shared<Impl>();
    g.impl_->res = std::move(res);
    g.impl_->degree = degree;
    g.impl_->lo = lo;
    g.impl_->hi = lo + static_cast<int>(mats.size()) - 1;
    g.impl_->name = std::move(name);
    g.impl_->repr = Impl::Table{lo, std::move(mats)};
    return g;
}

GradedMap GradedMap::from_periodic(std::shared_ptr<const Resolution> res, int degree,
                                   int period, std::vector<ModuleMap> mats,
                                   std::string name) {
    GradedMap g;
    g.impl_ = std::make_shared<Impl>();
    g.impl_->res = std::move(res);
    g.impl_->degree = degree;
    g.impl_->name = std::move(name);
    g.impl_->repr = Impl::Periodic{period, std::move(mats)};
    return g;
}

GradedMap GradedMap::zero(std::shared_ptr<const Resolution> res, int degree) {
    auto r = res;
    return from_rule(
        res, degree,
        [r, degree](int j) {
            return ModuleMap(r->algebra_ptr(), r->rank(j), r->rank(j + degree));
        },
        "0");
}

GradedMap GradedMap::identity(std::shared_ptr<const Resolution> res) { return shift(res, 0); }

GradedMap GradedMap::shift(std::shared_ptr<const Resolution> res, int d) {
    auto r = res;
    return from_rule(
        res, d,
        [r, d](int j) {
            if (r->rank(j) != r->rank(j + d))
                throw Error("shift map needs equal ranks at " + std::to_string(j));
            return ModuleMap::identity(r->algebra_ptr(), r->rank(j));
        },
        d == 0 ? "id" : "s^" + std::to_string(d));
}

int GradedMap::degree() const { return impl_->degree; }
int GradedMap::lo() const { return impl_->lo; }
int GradedMap::hi() const { return impl_->hi; }
const std::string& GradedMap::name() const { return impl_->name; }
void GradedMap::set_name(std::string n) { impl_->name = std::move(n); }
std::shared_ptr<const Resolution> GradedMap::resolution() const { return impl_->res; }

const ModuleMap& GradedMap::at(int j) const {
    if (j < impl_->lo || j > impl_->hi)
        throw WindowTooSmall("graded map not materializable at j=" + std::to_string(j));
    return impl_->at(j);
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (f.resolution().get() != g.resolution().get())
        throw Error("compose: maps live on different resolutions");
    int n = f.degree();
    int lo = std::max(f.lo(), (g.lo() > -kUnbounded / 2) ? g.lo() - n : -kUnbounded);
    int hi = std::min(f.hi(), (g.hi() < kUnbounded / 2) ? g.hi() - n : kUnbounded);
    if (lo > hi) throw WindowTooSmall("compose: empty window");
    GradedMap fc = f, gc = g;
    return GradedMap::from_rule(
        f.resolution(), f.degree() + g.degree(),
        [fc, gc, n](int j) { return fc.at(j).compose(gc.at(j + n)); },
        f.name().empty() || g.name().empty() ? "" : f.name() + g.name(), lo, hi);
}

GradedMap add(const GradedMap& f, const GradedMap& g) {
    if (f.degree() != g.degree()) throw DegreeMismatch("add: degrees differ");
    int lo = std::max(f.lo(), g.lo());
    int hi = std::min(f.hi(), g.hi());
    if (lo > hi) throw WindowTooSmall("add: empty window");
    GradedMap fc = f, gc = g;
    return GradedMap::from_rule(
        f.resolution(), f.degree(), [fc, gc](int j) { return fc.at(j) + gc.at(j); }, "", lo,
        hi);
}

GradedMap sub(const GradedMap& f, const GradedMap& g) {
    if (f.degree() != g.degree()) throw DegreeMismatch("sub: degrees differ");
    int lo = std::max(f.lo(), g.lo());
    int hi = std::min(f.hi(), g.hi());
    if (lo > hi) throw WindowTooSmall("sub: empty window");
    GradedMap fc = f, gc = g;
    return GradedMap::from_rule(
        f.resolution(), f.degree(), [fc, gc](int j) { return fc.at(j) - gc.at(j); }, "", lo,
        hi);
}

GradedMap scale(const GradedMap& f, Scalar c) {
    GradedMap fc = f;
    return GradedMap::from_rule(
        f.resolution(), f.degree(), [fc, c](int j) { return fc.at(j).scaled(c); }, "",
        f.lo(), f.hi());
}

GradedMap dga_differential(const GradedMap& f) {
    int n = f.degree();
    int lo = f.lo();
    int hi = (f.hi() > kUnbounded / 2) ? f.hi() : f.hi() - 1;
    if (lo > hi) throw WindowTooSmall("dga_differential: empty window");
    GradedMap fc = f;
    auto res = f.resolution();
    const Field& F = res->algebra().field();
    Scalar sgn = (n % 2 == 0) ? F.neg(F.one()) : F.one();  // -(-1)^n
    return GradedMap::from_rule(
        res, n + 1,
        [fc, res, sgn, n](int j) {
            ModuleMap a = res->diff(j + 1).compose(fc.at(j + 1));
            ModuleMap b = fc.at(j).compose(res->diff(j + n + 1));
            return a + b.scaled(sgn);
        },
        f.name().empty() ? "" : "d(" + f.name() + ")", lo, hi);
}

TateClass class_of(const GradedMap& f) {
    const ModuleMap& f0 = f.at(0);
    const Algebra& A = f0.algebra();
    TateClass c;
    c.degree = f.degree();
    c.coeffs.assign(f0.cols(), 0);
    for (int j = 0; j < f0.cols(); ++j) c.coeffs[j] = A.augmentation(f0.entry(0, j));
    return c;
}

bool is_zero_on(const GradedMap& f, int lo, int hi) {
    for (int j = lo; j <= hi; ++j)
        if (!f.at(j).is_zero()) return false;
    return true;
}

bool equal_on(const GradedMap& f, const GradedMap& g, int lo, int hi) {
    for (int j = lo; j <= hi; ++j)
        if (!(f.at(j) == g.at(j))) return false;
    return true;
}

bool is_cocycle(const GradedMap& f, int lo, int hi) {
    return is_zero_on(dga_differential(f), lo, hi);
}

bool is_ideal_map(const GradedMap& f, const IdealSpec& spec, int lo, int hi) {
    const Algebra& A = f.resolution()->algebra();
    for (int j = lo; j <= hi; ++j) {
        const ModuleMap& m = f.at(j);
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& [r, e] : m.column(c))
                if (!A.ideal_member(e, spec)) return false;
    }
    return true;
}

std::optional<GradedMap> find_homotopy(const GradedMap& g,
                                       const std::vector<int>& periods_to_try) {
    auto res = g.resolution();
    const Algebra& A = res->algebra();
    const Field& F = A.field();
    int d = A.dim();
    int n = g.degree();
    int hdeg = n - 1;

    for (int Q : periods_to_try) {
        // unknowns: entries of h_j : P_{j+hdeg} -> P_j for one period
        std::vector<int> offset(Q + 1, 0);
        for (int j = 0; j < Q; ++j)
            offset[j + 1] = offset[j] + res->rank(j) * res->rank(j + hdeg) * d;
        int nvars = offset[Q];
        auto var = [&](int j, int row, int col, int b) {
            int jj = floormod(j, Q);
            return offset[jj] + (row * res->rank(jj + hdeg) + col) * d + b;
        };
        std::vector<int> eq_offset(Q + 1, 0);
        for (int j = 0; j < Q; ++j)
            eq_offset[j + 1] = eq_offset[j] + res->rank(j) * res->rank(j + n) * d;
        int neqs = eq_offset[Q];
        DenseMat M(&F, neqs, nvars);
        std::vector<Scalar> rhs(neqs, 0);
        Scalar hsign = (hdeg % 2 == 0) ? F.neg(F.one()) : F.one();  // -(-1)^{hdeg}
        for (int j = 0; j < Q; ++j) {
            auto eq = [&](int row, int col, int b) {
                return eq_offset[j] + (row * res->rank(j + n) + col) * d + b;
            };
            const ModuleMap& gj = g.at(j);
            for (int c = 0; c < gj.cols(); ++c)
                for (const auto& [r, e] : gj.column(c))
                    for (int b = 0; b < d; ++b)
                        if (e.coeff(b)) rhs[eq(r, c, b)] = e.coeff(b);
            // diff(j+1) ∘ h_{j+1}
            const ModuleMap& D1 = res->diff(j + 1);
            for (int t = 0; t < D1.cols(); ++t)
                for (const auto& [r, e] : D1.column(t))
                    for (int v = 0; v < d; ++v)
                        for (int i = 0; i < d; ++i) {
                            Scalar ci = e.coeff(i);
                            if (!ci) continue;
                            int u = A.mul_basis(i, v);
                            if (u < 0) continue;
                            for (int c = 0; c < res->rank(j + n); ++c)
                                M.add_at(eq(r, c, u), var(j + 1, t, c, v), ci);
                        }
            // -(-1)^{hdeg} h_j ∘ diff(j+n)
            const ModuleMap& D2 = res->diff(j + n);
            for (int c = 0; c < D2.cols(); ++c)
                for (const auto& [t, e] : D2.column(c))
                    for (int v = 0; v < d; ++v)
                        for (int i = 0; i < d; ++i) {
                            Scalar ci = e.coeff(i);
                            if (!ci) continue;
                            int u = A.mul_basis(v, i);
                            if (u < 0) continue;
                            for (int r = 0; r < res->rank(j); ++r)
                                M.add_at(eq(r, c, u), var(j, r, t, v), F.mul(hsign, ci));
                        }
        }
        auto sol = M.solve(rhs);
        if (!sol) continue;
        std::vector<ModuleMap> mats;
        for (int j = 0; j < Q; ++j) {
            ModuleMap h(res->algebra_ptr(), res->rank(j), res->rank(j + hdeg));
            for (int r = 0; r < res->rank(j); ++r)
                for (int c = 0; c < res->rank(j + hdeg); ++c) {
                    std::vector<Scalar> coeffs(d, 0);
                    bool nz = false;
                    for (int b = 0; b < d; ++b) {
                        coeffs[b] = (*sol)[var(j, r, c, b)];
                        nz = nz || coeffs[b];
                    }
                    if (nz) h.set_entry(r, c, AlgebraElement(res->algebra_ptr(), coeffs));
                }
            mats.push_back(std::move(h));
        }
        return GradedMap::from_periodic(res, hdeg, Q, std::move(mats));
    }
    return std::nullopt;
}

}  // namespace tate
