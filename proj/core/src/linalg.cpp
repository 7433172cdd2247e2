#include "tate/linalg.hpp"

namespace tate {

int f2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
    int words = (cols + 63) / 64;
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int w = c / 64;
        std::uint64_t bit = 1ull << (c % 64);
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][w] & bit) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            if (rows[r][w] & bit)
                for (int t = 0; t < words; ++t) rows[r][t] ^= rows[rank][t];
        }
        ++rank;
    }
    return rank;
}

int DenseMat::rank() const {
    if (F_->q() == 2) {
        int words = (cols_ + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(rows_,
                                                     std::vector<std::uint64_t>(words, 0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (get(r, c)) rows[r][c / 64] |= 1ull << (c % 64);
        return f2_rank(std::move(rows), cols_);
    }
    DenseMat m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<int> DenseMat::rref(DenseMat* track) {
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < cols_ && row < rows_; ++c) {
        int piv = -1;
        for (int r = row; r < rows_; ++r)
            if (get(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int t = 0; t < cols_; ++t) std::swap(a_[static_cast<std::size_t>(piv) * cols_ + t],
                                                      a_[static_cast<std::size_t>(row) * cols_ + t]);
            if (track)
                for (int t = 0; t < track->cols_; ++t)
                    std::swap(track->a_[static_cast<std::size_t>(piv) * track->cols_ + t],
                              track->a_[static_cast<std::size_t>(row) * track->cols_ + t]);
        }
        Scalar inv = F_->inv(get(row, c));
        if (inv != 1) {
            for (int t = 0; t < cols_; ++t) set(row, t, F_->mul(get(row, t), inv));
            if (track)
                for (int t = 0; t < track->cols_; ++t)
                    track->set(row, t, F_->mul(track->get(row, t), inv));
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == row) continue;
            Scalar f = get(r, c);
            if (!f) continue;
            for (int t = 0; t < cols_; ++t) set(r, t, F_->sub(get(r, t), F_->mul(f, get(row, t))));
            if (track)
                for (int t = 0; t < track->cols_; ++t)
                    track->set(r, t, F_->sub(track->get(r, t), F_->mul(f, track->get(row, t))));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::optional<std::vector<Scalar>> DenseMat::solve(const std::vector<Scalar>& b) const {
    // Augmented elimination.
    DenseMat aug(F_, rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_, b[r]);
    }
    std::vector<int> pivots = aug.rref();
    std::vector<Scalar> x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt;  // inconsistent row
        x[pivots[i]] = aug.get(static_cast<int>(i), cols_);
    }
    return x;
}

bool DenseMat::in_row_span(const std::vector<Scalar>& v) const {
    DenseMat m = *this;
    m.rref();
    std::vector<Scalar> w = v;
    for (int r = 0; r < rows_; ++r) {
        int piv = -1;
        for (int c = 0; c < cols_; ++c)
            if (m.get(r, c)) { piv = c; break; }
        if (piv < 0) break;
        if (!w[piv]) continue;
        Scalar f = F_->mul(w[piv], F_->inv(m.get(r, piv)));
        for (int c = 0; c < cols_; ++c) w[c] = F_->sub(w[c], F_->mul(f, m.get(r, c)));
    }
    for (Scalar c : w)
        if (c) return false;
    return true;
}

}  // namespace tate
