#include <gtest/gtest.h>

#include "tate/algebra.hpp"

using namespace tate;

namespace {

// exhaustive structural checks on the basis
void check_algebra(const Algebra& A) {
    int d = A.dim();
    const Field& F = A.field();
    // unit
    for (int i = 0; i < d; ++i) {
        EXPECT_EQ(A.one() * A.basis_element(i), A.basis_element(i));
        EXPECT_EQ(A.basis_element(i) * A.one(), A.basis_element(i));
    }
    // associativity on basis triples (|G| <= 64 here)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto x = (A.basis_element(i) * A.basis_element(j)) * A.basis_element(k);
                auto y = A.basis_element(i) * (A.basis_element(j) * A.basis_element(k));
                EXPECT_EQ(x, y);
            }
    // augmentation is a unital algebra map on basis pairs
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto p = A.basis_element(i) * A.basis_element(j);
            EXPECT_EQ(A.augmentation(p),
                      F.mul(A.augmentation(A.basis_element(i)),
                            A.augmentation(A.basis_element(j))));
        }
    EXPECT_EQ(A.augmentation(A.one()), F.one());
    // norm absorbs: N * x = eps(x) N
    AlgebraElement N = A.norm();
    for (int i = 0; i < d; ++i) {
        auto lhs = N * A.basis_element(i);
        auto rhs = N.scaled(A.augmentation(A.basis_element(i)));
        EXPECT_EQ(lhs, rhs);
    }
}

}  // namespace

TEST(Algebra, TruncatedZ2Cubed) {
    Field F2 = Field::prime(2);
    auto A = Algebra::truncated_polynomial(F2, {2, 2, 2});
    EXPECT_EQ(A->dim(), 8);
    check_algebra(*A);
    // z1 z2 z3 = N
    auto p = A->generator(0) * A->generator(1) * A->generator(2);
    EXPECT_EQ(p, A->norm());
    // z_j * N_i = N if i == j else 0  (Eq. 3.3)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto q = A->generator(j) * A->partial_norm(i);
            if (i == j) EXPECT_EQ(q, A->norm());
            else EXPECT_TRUE(q.is_zero());
        }
}

TEST(Algebra, TruncatedF3) {
    Field F3 = Field::prime(3);
    auto A = Algebra::truncated_polynomial(F3, {3});
    check_algebra(*A);
    EXPECT_TRUE((A->generator(0) * A->z_power(0, 2)).is_zero());
}

TEST(Algebra, NotPPower) {
    Field F2 = Field::prime(2);
    EXPECT_THROW(Algebra::truncated_polynomial(F2, {3, 2}), NotPPower);
    EXPECT_THROW(Algebra::quaternion(Field::prime(3)), WrongCharacteristic);
}

TEST(Algebra, QuaternionTable) {
    Field F2 = Field::prime(2);
    auto A = Algebra::quaternion(F2);
    EXPECT_EQ(A->dim(), 8);
    check_algebra(*A);
    // golden constants for the group table, basis (E,I,J,K,E',I',J',K')
    const int E = 0, I = 1, J = 2, K = 3, Ep = 4, Ip = 5, Jp = 6, Kp = 7;
    EXPECT_EQ(A->mul_basis(I, J), K);
    EXPECT_EQ(A->mul_basis(J, I), Kp);
    EXPECT_EQ(A->mul_basis(I, I), Ep);
    EXPECT_EQ(A->mul_basis(J, J), Ep);
    EXPECT_EQ(A->mul_basis(K, K), Ep);
    EXPECT_EQ(A->mul_basis(J, K), I);
    EXPECT_EQ(A->mul_basis(K, J), Ip);
    EXPECT_EQ(A->mul_basis(K, I), J);
    EXPECT_EQ(A->mul_basis(I, K), Jp);
    EXPECT_EQ(A->mul_basis(Ep, Ep), E);
    EXPECT_EQ(A->mul_basis(Ip, I), E);
    // N * (I + E) = 0 since eps(I+E) = 0
    auto x = A->basis_element(I) + A->basis_element(E);
    EXPECT_TRUE((A->norm() * x).is_zero());
    // (I+E)(J+E) = K + I + J + E
    auto y = A->basis_element(J) + A->basis_element(E);
    auto p = x * y;
    auto expect = A->basis_element(K) + A->basis_element(I) + A->basis_element(J) +
                  A->basis_element(E);
    EXPECT_EQ(p, expect);
}

TEST(Algebra, IdealMembership) {
    Field F2 = Field::prime(2);
    auto A = Algebra::truncated_polynomial(F2, {2, 2, 2});
    // I = ker eps exactly, on the whole basis
    for (int i = 0; i < A->dim(); ++i) {
        auto b = A->basis_element(i);
        EXPECT_EQ(A->ideal_member(b, IdealSpec::I()),
                  A->augmentation(b) == 0);
    }
    // z1 z2 in I^2
    EXPECT_TRUE(A->ideal_member(A->generator(0) * A->generator(1), IdealSpec::I(2)));
    EXPECT_FALSE(A->ideal_member(A->one(), IdealSpec::I()));
    // N * I = 0 and N * J_1 = 0
    for (int i = 0; i < A->dim(); ++i) {
        auto b = A->basis_element(i);
        if (A->ideal_member(b, IdealSpec::I())) EXPECT_TRUE((A->norm() * b).is_zero());
    }
    // J_r subset <N>, filtration J_m >= J_{m+1}
    for (int i = 0; i < A->dim(); ++i) {
        auto b = A->basis_element(i);
        if (A->ideal_member(b, IdealSpec::J(3))) EXPECT_EQ(b, A->norm());
        for (int m = 0; m < 3; ++m)
            if (A->ideal_member(b, IdealSpec::J(m + 1)))
                EXPECT_TRUE(A->ideal_member(b, IdealSpec::J(m)));
    }
}

TEST(Algebra, IdealMembershipMixedExponents) {
    Field F2 = Field::prime(2);
    auto A = Algebra::truncated_polynomial(F2, {4, 2});
    // z1^{m1-1} z2^{m2-1} in J_2 (products of two z_i^{m_i-1})
    auto g = A->z_power(0, 3) * A->z_power(1, 1);
    EXPECT_TRUE(A->ideal_member(g, IdealSpec::J(2)));
    EXPECT_FALSE(A->ideal_member(A->z_power(0, 3), IdealSpec::J(2)));
    EXPECT_TRUE(A->ideal_member(A->z_power(0, 3), IdealSpec::J(1)));
    // z1 in I but not J_1
    EXPECT_TRUE(A->ideal_member(A->generator(0), IdealSpec::I()));
    EXPECT_FALSE(A->ideal_member(A->generator(0), IdealSpec::J(1)));
}

TEST(Algebra, Q8Ideals) {
    Field F2 = Field::prime(2);
    auto A = Algebra::quaternion(F2);
    for (int i = 0; i < 8; ++i) {
        auto b = A->basis_element(i) + A->one();  // g + E in I (char 2)
        EXPECT_TRUE(A->ideal_member(b, IdealSpec::I()));
    }
    EXPECT_FALSE(A->ideal_member(A->one(), IdealSpec::I()));
    EXPECT_THROW(A->ideal_member(A->one(), IdealSpec::J(1)), InvalidSpec);
    // I^m for kQ8: dim I = 7; the radical series of kQ8 is
    // 7, 5, 3, 1, 0 in dims; check the norm generates the last step
    auto x = A->basis_element(1) + A->one();
    auto y = A->basis_element(2) + A->one();
    EXPECT_TRUE(A->ideal_member(x * y, IdealSpec::I(2)));
    EXPECT_TRUE(A->ideal_member(A->norm(), IdealSpec::I(4)));
    EXPECT_FALSE(A->ideal_member(A->norm(), IdealSpec::I(5)));
}

TEST(Algebra, Rendering) {
    Field F3 = Field::prime(3);
    auto A = Algebra::truncated_polynomial(F3, {3, 3});
    auto e = A->generator(0).scaled(2) + A->z_power(1, 2);
    EXPECT_EQ(e.to_string(), "2*z1+z2^2");
    EXPECT_EQ(A->one().to_string(), "1");
    EXPECT_EQ(A->zero().to_string(), "0");
}
