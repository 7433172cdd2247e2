#pragma once

#include <utility>
#include <vector>

#include "tate/algebra.hpp"

namespace tate {

/// Map of free right L-modules L^cols -> L^rows in matrix form, entries
/// multiplying from the left. Stored sparsely by column; the column of a
/// source basis element lists (target row, coefficient).
class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(const Algebra* A, int rows, int cols)
        : alg_(A), rows_(rows), cols_(cols), col_(cols) {}

    const Algebra& algebra() const { return *alg_; }
    const Algebra* algebra_ptr() const { return alg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<std::pair<int, AlgebraElement>>& column(int c) const { return col_[c]; }

    void add_entry(int r, int c, const AlgebraElement& v);
    void set_entry(int r, int c, AlgebraElement v);
    AlgebraElement entry(int r, int c) const;

    bool is_zero() const;
    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap scaled(Scalar c) const;
    /// Composition this ∘ o (matrix product, this-entries on the left).
    ModuleMap compose(const ModuleMap& o) const;
    bool operator==(const ModuleMap& o) const;

    /// Apply to a module element given as a coefficient column.
    std::vector<AlgebraElement> apply(const std::vector<AlgebraElement>& v) const;

    static ModuleMap zero(const Algebra* A, int rows, int cols) { return {A, rows, cols}; }
    static ModuleMap identity(const Algebra* A, int n);

  private:
    void prune(int c);

    const Algebra* alg_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, AlgebraElement>>> col_;
};

}  // namespace tate
