#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verma_ext/coxeter.hpp"
#include "verma_ext/reflection.hpp"
#include "verma_ext/rpoly.hpp"

namespace verma_ext {

struct VTableOptions {
    DescentPolicy policy = DescentPolicy::smallest;
    /// v_s := basis_scale[s] * alpha_s; empty means all ones.
    std::vector<Rational> basis_scale;
};

/// V(x, y) for every Bruhat-comparable pair y <= x of one enumerated group.
///
/// V(x, x) = 0 and, for a right descent s of x with x' = xs,
///   V(x, y) = s(V(x', ys))           if ys < y,
///   V(x, y) = K v_s + s(V(x', y))    if ys > y.
/// A stratum l(x) = k only reads stratum k - 1.
class VTable {
public:
    explicit VTable(const WeylGroup& group, VTableOptions options = {});

    const WeylGroup& group() const noexcept { return *group_; }
    const VTableOptions& options() const noexcept { return options_; }
    /// The vector v_s used for generator s.
    const RationalVector& v(int s) const { return v_[static_cast<std::size_t>(s)]; }

    /// Throws NotComparable unless y <= x, LiftingViolation if a recursive
    /// precondition fails.
    const RationalSubspace& get(WeylGroup::Index x, WeylGroup::Index y);
    const RationalSubspace* find(WeylGroup::Index x, WeylGroup::Index y) const;

    void fill_all(unsigned jobs = 1);
    std::size_t entries() const noexcept { return entries_; }
    std::size_t computed() const noexcept { return computed_; }

private:
    std::size_t slot(WeylGroup::Index x, WeylGroup::Index y) const { return x * group_->size() + y; }
    RationalSubspace compute(WeylGroup::Index x, WeylGroup::Index y);

    const WeylGroup* group_;
    VTableOptions options_;
    std::vector<RationalVector> v_;
    std::vector<std::optional<RationalSubspace>> table_;
    std::size_t entries_ = 0;
    std::size_t computed_ = 0;
};

RationalSubspace compute_v(VTable& table, WeylGroup::Index x, WeylGroup::Index y);

/// Fills V(x, y) for every comparable pair, stratified by l(x).
/// Throws RankOverflow when |W|^2 exceeds `budget`.
VTable compute_all(const WeylGroup& group, VTableOptions options = {}, unsigned jobs = 1,
                   std::uint64_t budget = kDefaultBudget);

/// S_lambda, the simple reflections fixing a singular weight.
struct SingularSpec {
    std::vector<int> subset;
};

/// Image of V(x, y) in V / span{v_s : s in S_lambda}, written in the
/// coordinates of S \ S_lambda.
RationalSubspace singular_v(VTable& table, const SingularSpec& spec, WeylGroup::Index x, WeylGroup::Index y);

struct MembershipRow {
    WeylGroup::Index x = 0;
    WeylGroup::Index y = 0;
    int s = 0;
    bool member = false;      // v_s in V(x, y)
    bool x_geq_ys = false;    // x >= ys
    bool rank2 = false;       // x, y in w0 <s, s'> for some s'
};

/// One row per comparable pair y <= x and simple s with xs > x and ys > y.
std::vector<MembershipRow> membership_report(VTable& table);

/// Dimension table as `x_word;y_word;dimV;gj_coeff;match` rows.
std::string dimension_csv(VTable& vtable, RTable& rtable, const std::string& timestamp);
/// Every V(x, y) in the subspace JSON form, keyed by "x_word|y_word".
nlohmann::ordered_json subspace_export(VTable& vtable, const std::string& timestamp);

} // namespace verma_ext
