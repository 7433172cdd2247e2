#include <gtest/gtest.h>

#include "tate/resolution.hpp"

using namespace tate;

namespace {

std::shared_ptr<const TensorResolution> tensor_res(int p, std::vector<int> exps) {
    auto A = Algebra::truncated_polynomial(Field::prime(p), std::move(exps));
    return std::make_shared<TensorResolution>(A);
}

// d(S x) + S(d x) = x for every k-basis element of P_n
void check_contraction(const TensorResolution& R, int lo, int hi) {
    const Algebra& A = R.algebra();
    for (int n = lo; n <= hi; ++n) {
        for (int l = 0; l < R.rank(n); ++l)
            for (int m = 0; m < A.dim(); ++m) {
                std::vector<AlgebraElement> x(R.rank(n), A.zero());
                x[l] = A.basis_element(m);
                auto Sx = R.contract(n, x);
                auto dSx = R.diff(n + 1).apply(Sx);
                auto dx = R.diff(n).apply(x);
                auto Sdx = R.contract(n - 1, dx);
                for (int i = 0; i < R.rank(n); ++i) {
                    AlgebraElement sum = dSx[i] + Sdx[i];
                    EXPECT_EQ(sum, x[i]) << "contraction fails at degree " << n;
                }
            }
    }
}

}  // namespace

TEST(Resolution, CyclicBasics) {
    auto R = tensor_res(3, {3});
    EXPECT_EQ(R->family(), Resolution::Family::Cyclic);
    EXPECT_EQ(R->period(), 2);
    for (int n = -5; n <= 5; ++n) EXPECT_EQ(R->rank(n), 1);
    const Algebra& A = R->algebra();
    // d_1 = (z), d_2 = (-z^2) = (2 z^2) over F3
    EXPECT_EQ(R->diff(1).entry(0, 0), A.generator(0));
    EXPECT_EQ(R->diff(2).entry(0, 0), A.z_power(0, 2).scaled(2));
    // eps ∘ d_1 = 0
    EXPECT_EQ(A.augmentation(R->diff(1).entry(0, 0)), 0);
    auto rep = verify_exact(*R, -6, 6);
    EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_TRUE(verify_minimal(*R, -6, 6).ok);
}

TEST(Resolution, CyclicPeriodicity) {
    auto R = tensor_res(2, {4});
    for (int n = -4; n <= 4; ++n) {
        EXPECT_EQ(R->diff(n).entry(0, 0), R->diff(n + 2).entry(0, 0));
    }
}

TEST(Resolution, Q8) {
    auto A = Algebra::quaternion(Field::prime(2));
    auto R = q8_resolution(A);
    EXPECT_EQ(R->period(), 4);
    EXPECT_EQ(R->rank(0), 1);
    EXPECT_EQ(R->rank(1), 2);
    EXPECT_EQ(R->rank(2), 2);
    EXPECT_EQ(R->rank(3), 1);
    EXPECT_EQ(R->rank(4), 1);
    EXPECT_EQ(R->rank(-1), 1);
    EXPECT_EQ(R->rank(-2), 2);
    // d_2 ∘ d_3 = 0 and the full window checks
    EXPECT_TRUE(R->diff(2).compose(R->diff(3)).is_zero());
    EXPECT_EQ(R->diff(0).entry(0, 0), A->norm());
    EXPECT_EQ(R->diff(4).entry(0, 0), A->norm());
    auto rep = verify_exact(*R, -9, 9);
    EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_TRUE(verify_minimal(*R, -9, 9).ok);
}

TEST(Resolution, AbelianZ2Cubed) {
    auto R = tensor_res(2, {2, 2, 2});
    EXPECT_EQ(R->family(), Resolution::Family::AbelianProduct);
    // rank(2) = |M_2| = 6 (stars and bars)
    EXPECT_EQ(R->rank(2), 6);
    EXPECT_EQ(R->rank(0), 1);
    EXPECT_EQ(R->rank(-1), 1);
    // |N_{-m-1}| = |M_m|
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(R->rank(-m - 1), R->rank(m));
    // d_0 entry = z1 z2 z3 = N (r odd: sign -1 = +1 over F2)
    EXPECT_EQ(R->diff(0).entry(0, 0), R->algebra().norm());
    auto rep = verify_exact(*R, -6, 6);
    EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_TRUE(verify_minimal(*R, -6, 6).ok);
}

TEST(Resolution, AbelianRemark433Display) {
    // r = 2 over F2: d_2 equals the Remark 4.33 matrix
    // [[z1^{m1-1}, -z2, 0], [0, z1, z2^{m2-1}]] (char 2) with the label order
    // (2,0), (1,1), (0,2) <-> columns 1..3.
    auto R = tensor_res(2, {4, 2});
    const Algebra& A = R->algebra();
    const auto& M2 = R->labels(2);
    ASSERT_EQ(M2.size(), 3u);
    EXPECT_EQ(M2[0], (std::vector<int>{0, 2}));
    EXPECT_EQ(M2[2], (std::vector<int>{2, 0}));
    const ModuleMap& D = R->diff(2);
    int c20 = R->label_index(2, {2, 0}), c11 = R->label_index(2, {1, 1}),
        c02 = R->label_index(2, {0, 2});
    int r10 = R->label_index(1, {1, 0}), r01 = R->label_index(1, {0, 1});
    EXPECT_EQ(D.entry(r10, c20), A.z_power(0, 3));
    EXPECT_TRUE(D.entry(r01, c20).is_zero());
    EXPECT_EQ(D.entry(r10, c11), A.generator(1));
    EXPECT_EQ(D.entry(r01, c11), A.generator(0));
    EXPECT_TRUE(D.entry(r10, c02).is_zero());
    EXPECT_EQ(D.entry(r01, c02), A.z_power(1, 1));
}

TEST(Resolution, AbelianColumnShape) {
    // each column of d_n (n > 0) has at most r entries, each a pure power
    auto R = tensor_res(2, {2, 4, 2});
    for (int n = 1; n <= 5; ++n) {
        const ModuleMap& D = R->diff(n);
        for (int c = 0; c < D.cols(); ++c) {
            EXPECT_LE(D.column(c).size(), 3u);
            for (const auto& [r, e] : D.column(c)) {
                int nnz = 0;
                for (int i = 0; i < R->algebra().dim(); ++i)
                    if (e.coeff(i)) ++nnz;
                EXPECT_EQ(nnz, 1);
            }
        }
    }
}

TEST(Resolution, ExactnessOddP) {
    auto R = tensor_res(3, {3, 3});
    auto rep = verify_exact(*R, -5, 5);
    EXPECT_TRUE(rep.ok) << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_TRUE(verify_minimal(*R, -5, 5).ok);
    auto R2 = tensor_res(3, {3, 9});
    EXPECT_TRUE(verify_exact(*R2, -4, 4).ok);
    auto R3 = tensor_res(5, {5, 5, 5});
    EXPECT_TRUE(R3->diff(3).compose(R3->diff(4)).is_zero());
    EXPECT_TRUE(R3->diff(0).compose(R3->diff(1)).is_zero());
    EXPECT_TRUE(R3->diff(-1).compose(R3->diff(0)).is_zero());
    EXPECT_TRUE(R3->diff(-3).compose(R3->diff(-2)).is_zero());
}

TEST(Resolution, CorruptedDifferentialFails) {
    // negative control: a corrupted complex must fail verify_exact
    auto A = Algebra::truncated_polynomial(Field::prime(2), {2, 2});
    class Corrupt : public TensorResolution {
      public:
        explicit Corrupt(std::shared_ptr<const Algebra> a) : TensorResolution(a) {}

      protected:
        ModuleMap make_diff(int n) const override {
            ModuleMap D = TensorResolution::make_diff(n);
            if (n == 2) D.set_entry(0, 0, algebra().one());
            return D;
        }
    };
    Corrupt R(A);
    EXPECT_FALSE(verify_exact(R, -3, 3).ok);
    EXPECT_FALSE(verify_minimal(R, -3, 3).ok);
}

TEST(Resolution, Contraction) {
    check_contraction(*tensor_res(2, {2, 2}), -4, 4);
    check_contraction(*tensor_res(2, {4, 2}), -4, 4);
    check_contraction(*tensor_res(3, {3, 3}), -4, 4);
    check_contraction(*tensor_res(3, {3}), -5, 5);
    check_contraction(*tensor_res(5, {5, 5, 5}), -3, 3);
}

TEST(Resolution, Divisions) {
    for (auto R : {tensor_res(2, {2, 2, 2}), tensor_res(3, {3, 3}), tensor_res(3, {9, 3})}) {
        const Algebra& A = R->algebra();
        // left: pick random-ish H0, set G = d ∘ H0, recover some H
        for (int k = -3; k <= 3; ++k) {
            ModuleMap H0(&A, R->rank(k + 1), R->rank(k + 3));
            H0.set_entry(0, 0, A.one() + A.generator(0));
            if (R->rank(k + 1) > 1) H0.set_entry(1, 0, A.generator(1 % A.r()));
            ModuleMap G = R->diff(k + 1).compose(H0);
            ModuleMap H = R->left_divide(k, G);
            EXPECT_TRUE(R->diff(k + 1).compose(H) == G);
        }
        // right: pick H0, set G = H0 ∘ d, recover
        for (int m = -3; m <= 3; ++m) {
            ModuleMap H0(&A, R->rank(m + 2), R->rank(m - 1));
            H0.set_entry(0, 0, A.one() + A.generator(A.r() - 1));
            ModuleMap G = H0.compose(R->diff(m));
            ModuleMap H = R->right_divide(m, G);
            EXPECT_TRUE(H.compose(R->diff(m)) == G);
        }
    }
}

TEST(Resolution, WrongKindErrors) {
    auto Aq = Algebra::quaternion(Field::prime(2));
    EXPECT_THROW(cyclic_resolution(Aq), WrongKind);
    EXPECT_THROW(abelian_resolution(Aq), WrongKind);
    auto Ac = Algebra::truncated_polynomial(Field::prime(2), {2});
    EXPECT_THROW(abelian_resolution(Ac), WrongKind);
    EXPECT_THROW(q8_resolution(Ac), WrongKind);
}
