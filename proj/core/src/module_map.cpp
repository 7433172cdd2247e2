#include "tate/module_map.hpp"

#include <algorithm>

namespace tate {

void ModuleMap::add_entry(int r, int c, const AlgebraElement& v) {
    if (v.is_zero()) return;
    auto& col = col_[c];
    for (auto& [row, e] : col)
        if (row == r) {
            e += v;
            prune(c);
            return;
        }
    col.emplace_back(r, v);
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

void ModuleMap::set_entry(int r, int c, AlgebraElement v) {
    auto& col = col_[c];
    col.erase(std::remove_if(col.begin(), col.end(),
                             [&](const auto& p) { return p.first == r; }),
              col.end());
    if (!v.is_zero()) {
        col.emplace_back(r, std::move(v));
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
}

AlgebraElement ModuleMap::entry(int r, int c) const {
    for (const auto& [row, e] : col_[c])
        if (row == r) return e;
    return alg_->zero();
}

void ModuleMap::prune(int c) {
    auto& col = col_[c];
    col.erase(std::remove_if(col.begin(), col.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              col.end());
}

bool ModuleMap::is_zero() const {
    for (const auto& col : col_)
        for (const auto& [r, e] : col)
            if (!e.is_zero()) return false;
    return true;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    ModuleMap r = *this;
    for (int c = 0; c < cols_; ++c)
        for (const auto& [row, e] : o.col_[c]) r.add_entry(row, c, e);
    return r;
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
    ModuleMap r = *this;
    Scalar m1 = alg_->field().neg(1);
    for (int c = 0; c < cols_; ++c)
        for (const auto& [row, e] : o.col_[c]) r.add_entry(row, c, e.scaled(m1));
    return r;
}

ModuleMap ModuleMap::scaled(Scalar c) const {
    ModuleMap r(alg_, rows_, cols_);
    if (!c) return r;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [row, e] : col_[j]) r.add_entry(row, j, e.scaled(c));
    return r;
}

ModuleMap ModuleMap::compose(const ModuleMap& o) const {
    // (this ∘ o): cols_ of this must equal o.rows_
    ModuleMap r(alg_, rows_, o.cols_);
    for (int c = 0; c < o.cols_; ++c)
        for (const auto& [k, b] : o.col_[c])
            for (const auto& [row, a] : col_[k]) r.add_entry(row, c, a * b);
    return r;
}

bool ModuleMap::operator==(const ModuleMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return (*this - o).is_zero();
}

std::vector<AlgebraElement> ModuleMap::apply(const std::vector<AlgebraElement>& v) const {
    std::vector<AlgebraElement> out(rows_, alg_->zero());
    for (int c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (const auto& [row, e] : col_[c]) out[row] += e * v[c];
    }
    return out;
}

ModuleMap ModuleMap::identity(const Algebra* A, int n) {
    ModuleMap m(A, n, n);
    for (int i = 0; i < n; ++i) m.set_entry(i, i, A->one());
    return m;
}

}  // namespace tate
