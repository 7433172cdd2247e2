#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tate/field.hpp"

namespace tate {

struct NotPPower : Error { using Error::Error; };
struct WrongCharacteristic : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };

class Algebra;

/// Element of a finite-dimensional group algebra: dense coefficient vector
/// over the fixed basis.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(const Algebra* a, std::vector<Scalar> c) : alg_(a), c_(std::move(c)) {}

    const Algebra& algebra() const { return *alg_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const { return c_[i]; }

    bool is_zero() const {
        for (Scalar v : c_)
            if (v) return false;
        return true;
    }

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        r += o;
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        r -= o;
        return r;
    }
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(Scalar c) const;
    bool operator==(const AlgebraElement& o) const { return c_ == o.c_; }
    bool operator!=(const AlgebraElement& o) const { return c_ != o.c_; }

    std::string to_string() const;

  private:
    const Algebra* alg_ = nullptr;
    std::vector<Scalar> c_;
};

enum class AlgebraKind { TruncatedPolynomial, QuaternionQ8 };

/// I^m (powers of the augmentation ideal) or J_m = J_1^m with
/// J_1 = <z_i^{m_i - 1}>. JPower is only meaningful for truncated algebras.
struct IdealSpec {
    enum Tag { AugmentationPower, JPower } tag;
    int m;
    static IdealSpec I(int m = 1) { return {AugmentationPower, m}; }
    static IdealSpec J(int m) { return {JPower, m}; }
};

/// k[z_1..z_r]/(z_i^{m_i}) with the monomial basis in degree-lex order,
/// or kQ8 with basis (E, I, J, K, E', I', J', K').
/// Products of basis elements are again basis elements (or zero), so the
/// multiplication table maps index pairs to an index or -1.
class Algebra {
  public:
    static std::shared_ptr<const Algebra> truncated_polynomial(const Field& F,
                                                               std::vector<int> exponents);
    static std::shared_ptr<const Algebra> quaternion(const Field& F);

    const Field& field() const { return F_; }
    AlgebraKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int r() const { return static_cast<int>(exps_.size()); }
    const std::vector<int>& exponents() const { return exps_; }

    int mul_basis(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }
    const std::string& basis_name(int i) const { return names_[i]; }

    AlgebraElement zero() const { return {this, std::vector<Scalar>(dim_, 0)}; }
    AlgebraElement one() const { return basis_element(unit_index_); }
    AlgebraElement basis_element(int i, Scalar c = 1) const;

    /// Truncated algebras: index of the monomial with the given exponents
    /// (all 0 <= e_i < m_i), or -1 on overflow.
    int monomial_index(const std::vector<int>& e) const;
    const std::vector<int>& monomial_exponents(int i) const { return mono_exps_[i]; }

    /// z_i (0-based i) for truncated algebras.
    AlgebraElement generator(int i) const;
    /// z_i^{e}
    AlgebraElement z_power(int i, int e) const;
    /// Norm element: prod z_i^{m_i-1}, resp. the sum of all group elements.
    AlgebraElement norm() const;
    /// Partial norm prod_{j != i} z_j^{m_j-1} (truncated algebras).
    AlgebraElement partial_norm(int i) const;

    Scalar augmentation(const AlgebraElement& a) const;

    /// Membership in I^m or J_m, decided on the basis support.
    bool ideal_member(const AlgebraElement& a, const IdealSpec& spec) const;
    bool basis_in_ideal(int i, const IdealSpec& spec) const;

    bool same(const Algebra& o) const { return this == &o; }

  private:
    Algebra() = default;
    void build_names();
    std::vector<std::vector<Scalar>> reduceRows(std::vector<std::vector<Scalar>> rows) const;

    Field F_{Field::prime(2)};
    AlgebraKind kind_ = AlgebraKind::TruncatedPolynomial;
    std::vector<int> exps_;
    int dim_ = 0;
    int unit_index_ = 0;
    std::vector<int> table_;                   // dim*dim -> basis index or -1
    std::vector<std::vector<int>> mono_exps_;  // truncated only
    std::vector<std::string> names_;
    // Q8: cached k-bases of I^m as row-reduced support masks
    mutable std::vector<std::vector<std::vector<Scalar>>> q8_ideal_bases_;
};

}  // namespace tate
