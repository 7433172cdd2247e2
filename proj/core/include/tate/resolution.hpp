#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tate/linalg.hpp"
#include "tate/module_map.hpp"

namespace tate {

struct WrongKind : Error { using Error::Error; };
struct NoLift : Error { using Error::Error; };

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

/// A complete projective resolution of k: degree-indexed free modules with
/// differentials diff(n) : P_n -> P_{n-1}, doubly infinite.
class Resolution {
  public:
    enum class Family { Cyclic, Q8, AbelianProduct };

    virtual ~Resolution() = default;

    Family family() const { return family_; }
    const Algebra& algebra() const { return *alg_; }
    const Algebra* algebra_ptr() const { return alg_.get(); }
    std::optional<int> period() const { return period_; }

    virtual int rank(int n) const = 0;
    virtual std::string label_name(int n, int i) const = 0;

    const ModuleMap& diff(int n) const;

    /// Augmentation row eps : P_0 -> k on a degree-0 element.
    Scalar augment(const std::vector<AlgebraElement>& v) const;

  protected:
    Resolution(Family f, std::shared_ptr<const Algebra> a, std::optional<int> period)
        : family_(f), alg_(std::move(a)), period_(period) {}
    virtual ModuleMap make_diff(int n) const = 0;

    Family family_;
    std::shared_ptr<const Algebra> alg_;
    std::optional<int> period_;

  private:
    mutable std::map<int, ModuleMap> diff_memo_;
    mutable std::recursive_mutex mu_;
};

/// Tensor product of the standard complete resolutions of k[z_i]/(z_i^{m_i});
/// r = 1 is the 2-periodic cyclic resolution of 1.5, r >= 2 the multi-index
/// resolution of 3.1/4.2. Basis labels are multi-indices in M_n (n >= 0) or
/// N_n (n < 0); basis elements of the underlying k-space are pairs
/// (label, monomial).
class TensorResolution : public Resolution {
  public:
    explicit TensorResolution(std::shared_ptr<const Algebra> a);

    int r() const { return alg_->r(); }
    int rank(int n) const override;
    const std::vector<std::vector<int>>& labels(int n) const;
    int label_index(int n, const std::vector<int>& alpha) const;
    std::string label_name(int n, int i) const override;

    /// [a]_i = 1 for a odd, m_i - 1 for a even.
    int bracket(int a, int i) const { return (a % 2 != 0) ? 1 : alg_->exponents()[i] - 1; }

    /// Contracting homotopy S_n : P_n -> P_{n+1} on a k-basis element
    /// (label, algebra monomial); returns target (label, monomial, sign).
    std::optional<std::tuple<int, int, Scalar>> contract_basis(int n, int label,
                                                               int mono) const;
    std::vector<AlgebraElement> contract(int n, const std::vector<AlgebraElement>& v) const;

    /// Solve diff(k+1) ∘ H = G for G into P_k (requires diff(k) ∘ G = 0).
    ModuleMap left_divide(int k, const ModuleMap& G) const;
    /// Solve H ∘ diff(m) = G for G out of P_m (requires G ∘ diff(m+1) = 0).
    ModuleMap right_divide(int m, const ModuleMap& G) const;

    /// Sign table of the self-duality used by right_divide.
    Scalar twist(int t, int label) const;

    /// reflected label: alpha -> -1 - alpha, labels(t) <-> labels(-1-t)
    std::vector<int> reflect_label(const std::vector<int>& alpha) const;

  protected:
    ModuleMap make_diff(int n) const override;

  private:
    void ensure_labels(int n) const;
    void ensure_twist(int t) const;

    mutable std::map<int, std::vector<std::vector<int>>> labels_;
    mutable std::map<int, std::map<std::vector<int>, int>> label_idx_;
    mutable std::map<int, std::vector<Scalar>> twist_;
    mutable std::recursive_mutex mu_;
};

/// The 4-periodic minimal complete resolution of Proposition 2.2 over kQ8.
class Q8Resolution : public Resolution {
  public:
    explicit Q8Resolution(std::shared_ptr<const Algebra> a);
    int rank(int n) const override;
    std::string label_name(int n, int i) const override;

  protected:
    ModuleMap make_diff(int n) const override;
};

std::shared_ptr<const Resolution> cyclic_resolution(std::shared_ptr<const Algebra> a);
std::shared_ptr<const Resolution> q8_resolution(std::shared_ptr<const Algebra> a);
std::shared_ptr<const Resolution> abelian_resolution(std::shared_ptr<const Algebra> a);
/// Dispatch on the algebra kind / rank.
std::shared_ptr<const Resolution> standard_resolution(std::shared_ptr<const Algebra> a);

/// Flatten a module map to the k-linear map between the underlying k-spaces.
DenseMat flatten(const ModuleMap& m);

/// d∘d = 0 and rank-exactness on (a, b), plus im diff(1) = ker eps at 0.
CheckReport verify_exact(const Resolution& R, int a, int b);
/// Every differential entry lies in the augmentation ideal.
CheckReport verify_minimal(const Resolution& R, int a, int b);

}  // namespace tate
