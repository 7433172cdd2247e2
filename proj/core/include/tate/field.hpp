#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct Reducible : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

/// Element of a finite field, encoded as an index into the field's tables.
/// The index is the base-p evaluation of the power-basis coordinates.
using Scalar = std::uint8_t;

/// Exact arithmetic in F_{p^n}, q = p^n <= 256, with full lookup tables.
/// Extension elements live in the power basis of the supplied modulus.
class Field {
  public:
    static Field prime(int p) { return Field(p, 1, {}); }

    /// modulus: n+1 coefficients of a monic irreducible polynomial, low to high.
    /// Ignored (may be empty) for n = 1.
    Field(int p, int n, std::vector<int> modulus);

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<Scalar>& modulus() const { return modulus_; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }
    /// Image of an integer under Z -> F_p c F_q.
    Scalar from_int(long long v) const;
    /// Generator of the power basis (the class of X); requires n >= 2.
    Scalar gen() const { return static_cast<Scalar>(p_); }

    Scalar add(Scalar a, Scalar b) const { return add_[idx(a, b)]; }
    Scalar sub(Scalar a, Scalar b) const { return add_[idx(a, neg_[b])]; }
    Scalar neg(Scalar a) const { return neg_[a]; }
    Scalar mul(Scalar a, Scalar b) const { return mul_[idx(a, b)]; }
    Scalar inv(Scalar a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return inv_[a];
    }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string(Scalar a) const;

  private:
    std::size_t idx(Scalar a, Scalar b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int p_ = 0, n_ = 0, q_ = 0;
    std::vector<Scalar> modulus_;
    std::vector<Scalar> add_, mul_, neg_, inv_;
};

}  // namespace tate
