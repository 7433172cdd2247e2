#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tate/field.hpp"

namespace tate {

/// Dense matrix over a small finite field, row major. Sized for desk-scale
/// exact computations (dims up to a few thousand); F2 gets a bitsliced rank.
class DenseMat {
  public:
    DenseMat(const Field* F, int rows, int cols)
        : F_(F), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar get(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, Scalar v) { a_[static_cast<std::size_t>(r) * cols_ + c] = v; }
    void add_at(int r, int c, Scalar v) {
        auto& x = a_[static_cast<std::size_t>(r) * cols_ + c];
        x = F_->add(x, v);
    }
    const Field& field() const { return *F_; }

    int rank() const;

    /// Solve A x = b; returns one solution or nullopt.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    /// Row-reduce in place; returns pivot columns. If track != nullptr it is
    /// treated as an attached provenance matrix and receives the same row ops.
    std::vector<int> rref(DenseMat* track = nullptr);

    /// Is v in the row span? If yes and combo != nullptr, *combo gets the
    /// coefficients expressing v against the original rows (requires track).
    bool in_row_span(const std::vector<Scalar>& v) const;

  private:
    const Field* F_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Rank over F2 via 64-bit word rows.
int f2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols);

}  // namespace tate
