#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tate/resolution.hpp"

namespace tate {

struct WindowTooSmall : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

/// Element of Ext^n(k,k) in coordinates on the dual basis of labels(n).
struct TateClass {
    int degree = 0;
    std::vector<Scalar> coeffs;

    bool is_zero() const {
        for (Scalar c : coeffs)
            if (c) return false;
        return true;
    }
    bool operator==(const TateClass& o) const {
        return degree == o.degree && coeffs == o.coeffs;
    }
};

/// Degree-n family f_j : P_{j+n} -> P_j of module maps, materializable on a
/// window [lo, hi] of target degrees j. Backed by a table, a periodic block,
/// or a generation rule; materializations are memoized.
class GradedMap {
  public:
    GradedMap() = default;

    static GradedMap from_rule(std::shared_ptr<const Resolution> res, int degree,
                               std::function<ModuleMap(int)> make, std::string name = "",
                               int lo = -kUnbounded, int hi = kUnbounded);
    static GradedMap from_table(std::shared_ptr<const Resolution> res, int degree, int lo,
                                std::vector<ModuleMap> mats, std::string name = "");
    /// mats[j mod period] for all j; valid only when ranks repeat with that period.
    static GradedMap from_periodic(std::shared_ptr<const Resolution> res, int degree,
                                   int period, std::vector<ModuleMap> mats,
                                   std::string name = "");
    static GradedMap zero(std::shared_ptr<const Resolution> res, int degree);
    static GradedMap identity(std::shared_ptr<const Resolution> res);
    /// Identity-matrix map of the given degree; requires rank(j+d) = rank(j).
    static GradedMap shift(std::shared_ptr<const Resolution> res, int d);

    bool valid() const { return impl_ != nullptr; }
    int degree() const;
    int lo() const;
    int hi() const;
    const std::string& name() const;
    void set_name(std::string n);
    std::shared_ptr<const Resolution> resolution() const;

    /// f_j : P_{j+n} -> P_j.
    const ModuleMap& at(int j) const;

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap add(const GradedMap& f, const GradedMap& g);
GradedMap sub(const GradedMap& f, const GradedMap& g);
GradedMap scale(const GradedMap& f, Scalar c);

/// (df)_j = d ∘ f_{j+1} - (-1)^n f_j ∘ d; the window shrinks by one on the right.
GradedMap dga_differential(const GradedMap& f);

/// Class of eps ∘ f_0, defined for any graded map (Def 2.4).
TateClass class_of(const GradedMap& f);

bool is_zero_on(const GradedMap& f, int lo, int hi);
bool equal_on(const GradedMap& f, const GradedMap& g, int lo, int hi);
bool is_cocycle(const GradedMap& f, int lo, int hi);
bool is_ideal_map(const GradedMap& f, const IdealSpec& spec, int lo, int hi);

/// Periodic chain-homotopy solver: find h with dh = g, h periodic with the
/// smallest feasible period from periods_to_try (multiples of the resolution
/// period). Returns nullopt when every tried period is infeasible.
std::optional<GradedMap> find_homotopy(const GradedMap& g,
                                       const std::vector<int>& periods_to_try);

}  // namespace tate
