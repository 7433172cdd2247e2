#include <gtest/gtest.h>

#include "tate/field.hpp"

using namespace tate;

namespace {

void check_axioms(const Field& F) {
    int q = F.q();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            for (int c = 0; c < q; ++c) {
                EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
                EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
                EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    // nonzero elements form a group under multiplication
    for (int a = 1; a < q; ++a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
        EXPECT_EQ(F.inv(F.inv(a)), a);
    }
}

}  // namespace

TEST(Field, PrimeFields) {
    check_axioms(Field::prime(2));
    check_axioms(Field::prime(3));
    check_axioms(Field::prime(5));
    check_axioms(Field::prime(13));
}

TEST(Field, F4) {
    // F4 with a^2 = a + 1
    Field F4(2, 2, {1, 1, 1});
    check_axioms(F4);
    Scalar a = F4.gen();
    EXPECT_EQ(F4.mul(a, a), F4.add(a, F4.one()));
    // a * (a+1) = 1, so inv(a) = a+1
    EXPECT_EQ(F4.inv(a), F4.add(a, F4.one()));
}

TEST(Field, F8F9F16) {
    check_axioms(Field(2, 3, {1, 1, 0, 1}));
    check_axioms(Field(3, 2, {2, 2, 1}));
    check_axioms(Field(2, 4, {1, 1, 0, 0, 1}));
}

TEST(Field, Errors) {
    EXPECT_THROW(Field::prime(6), NotPrime);
    // X^2 + 1 = (X+1)^2 over F2
    EXPECT_THROW(Field(2, 2, {1, 0, 1}), Reducible);
    EXPECT_THROW(Field(2, 4, {1, 0, 0, 0, 1}), Reducible);
    EXPECT_THROW(Field::prime(2).inv(0), DivisionByZero);
    EXPECT_THROW(Field(2, 9, {}), Error);  // order cap
}

TEST(Field, InvertExamples) {
    Field F5 = Field::prime(5);
    EXPECT_EQ(F5.inv(1), 1);
    EXPECT_EQ(F5.inv(2), 3);  // 2*3 = 6 = 1 mod 5
}

TEST(Field, LargestAllowed) {
    Field F256(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1});
    EXPECT_EQ(F256.q(), 256);
    for (int a = 1; a < 256; ++a) EXPECT_EQ(F256.mul(a, F256.inv(a)), F256.one());
}
