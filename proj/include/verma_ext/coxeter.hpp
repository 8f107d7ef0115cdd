#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "verma_ext/error.hpp"

namespace verma_ext {

/// Default cap on element-pair operations (|W|^2). Rejects E6, E7 and E8.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// Default cap on the length of y in the exhaustive subword oracle.
inline constexpr int kDefaultOracleMaxLength = 12;

/// Which right descent a recursion strips when several are available.
enum class DescentPolicy { smallest, largest };

struct TypeFactor {
    char family = 'A';  // one of A..G, upper case
    int rank = 1;

    bool operator==(const TypeFactor&) const = default;
};

struct TypeDescriptor {
    std::vector<TypeFactor> factors;

    int total_rank() const;
    /// Canonical spelling, e.g. "A1xA2".
    std::string to_string() const;

    bool operator==(const TypeDescriptor&) const = default;
};

/// Parses FACTOR ("x" FACTOR)*, FACTOR = letter A-G followed by a decimal
/// rank, case-insensitive. Throws InvalidType.
TypeDescriptor parse_type(std::string_view text);

/// Order of the Weyl group of the descriptor, saturating at UINT64_MAX.
std::uint64_t weyl_group_order(const TypeDescriptor& desc);

using IntVector = std::vector<int>;

/// Cartan data and root system of a (possibly reducible) finite Weyl group.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple
/// reflection s_i sends alpha_j to alpha_j - cartan(i, j) * alpha_i.
class CoxeterSystem {
public:
    CoxeterSystem(TypeDescriptor type, std::vector<int> cartan);

    const TypeDescriptor& type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    int cartan(int i, int j) const { return cartan_[index(i, j)]; }
    int coxeter_m(int i, int j) const { return coxeter_m_[index(i, j)]; }
    const std::vector<int>& cartan_matrix() const noexcept { return cartan_; }
    const std::vector<IntVector>& positive_roots() const noexcept { return positive_roots_; }
    std::uint64_t group_order() const noexcept { return group_order_; }
    int longest_length() const noexcept { return static_cast<int>(positive_roots_.size()); }

    /// Descriptor plus a hash of the Cartan matrix, e.g. "B2#1f3a...".
    std::string fingerprint() const;

    void check_index(int i) const;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) +
               static_cast<std::size_t>(j);
    }

    TypeDescriptor type_;
    int rank_ = 0;
    std::vector<int> cartan_;
    std::vector<int> coxeter_m_;
    std::vector<IntVector> positive_roots_;
    std::uint64_t group_order_ = 1;
};

/// Builds the Cartan data blockwise from the factors and enumerates the
/// positive roots by orbit closure. Throws InvalidType, or RankOverflow
/// when |W|^2 exceeds `budget`.
CoxeterSystem build_system(const TypeDescriptor& desc, std::uint64_t budget = kDefaultBudget);
CoxeterSystem build_system(std::string_view desc, std::uint64_t budget = kDefaultBudget);

/// An element of W as the integer matrix of its action on simple-root
/// coordinates (column j is the image of alpha_j). Equality is matrix equality.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(int rank, std::vector<int> matrix, int length)
        : rank_(rank), matrix_(std::move(matrix)), length_(length) {}

    int rank() const noexcept { return rank_; }
    int length() const noexcept { return length_; }
    int at(int row, int col) const { return matrix_[static_cast<std::size_t>(row * rank_ + col)]; }
    const std::vector<int>& matrix() const noexcept { return matrix_; }

    /// Image of a vector given in simple-root coordinates.
    IntVector apply(std::span<const int> v) const;

    bool operator==(const GroupElement& other) const { return matrix_ == other.matrix_; }
    /// Canonical order: (length, row-major matrix entries).
    bool operator<(const GroupElement& other) const;

private:
    int rank_ = 0;
    std::vector<int> matrix_;
    int length_ = 0;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

bool is_negative_root(std::span<const int> root);

GroupElement identity(const CoxeterSystem& sys);
GroupElement simple_reflection(const CoxeterSystem& sys, int i);
GroupElement multiply(const CoxeterSystem& sys, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const CoxeterSystem& sys, const GroupElement& g);
/// Multiplies simple reflections along a word (indices are 0-based).
GroupElement from_word(const CoxeterSystem& sys, std::span<const int> word);

int length(const CoxeterSystem& sys, const GroupElement& g);
/// Bitmask of right descents: bit i set iff g * alpha_i is negative.
std::uint32_t right_descent_mask(const CoxeterSystem& sys, const GroupElement& g);
std::vector<int> right_descents(const CoxeterSystem& sys, const GroupElement& g);
bool has_right_descent(const CoxeterSystem& sys, const GroupElement& g, int i);

/// Picks one set bit of a descent mask according to the policy; -1 if empty.
int pick_descent(std::uint32_t mask, DescentPolicy policy);

/// Bruhat order x <= y via the lifting recursion.
bool bruhat_leq(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y,
                DescentPolicy policy = DescentPolicy::smallest);

/// Every product of a subword of a fixed reduced word for y; exhaustive
/// over all 2^l(y) subwords. Throws BudgetExceeded when l(y) > max_length.
std::vector<GroupElement> subword_products(const CoxeterSystem& sys, const GroupElement& y,
                                           int max_length = kDefaultOracleMaxLength);

/// Subword criterion, independent of bruhat_leq.
bool bruhat_leq_oracle(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y,
                       int max_length = kDefaultOracleMaxLength);

/// All of W sorted by (length, matrix order). Throws RankOverflow.
std::vector<GroupElement> enumerate(const CoxeterSystem& sys, std::uint64_t budget = kDefaultBudget);
GroupElement longest_element(const CoxeterSystem& sys);
/// Reduced word obtained by repeatedly stripping the smallest right descent.
std::vector<int> reduced_word(const CoxeterSystem& sys, const GroupElement& g);
/// Minimal length coset representatives: no right descent in J.
std::vector<GroupElement> min_coset_reps(const CoxeterSystem& sys, std::span<const int> subset,
                                         std::uint64_t budget = kDefaultBudget);

/// 1-based comma separated word, "" for the identity.
std::string format_word(std::span<const int> word);
/// Accepts "", "e" or a comma separated list of 1-based indices.
std::vector<int> parse_word(std::string_view text, int rank);

/// Enumerated W with dense multiplication-by-S tables and a memoized Bruhat
/// matrix. Everything downstream works on indices into this table.
class WeylGroup {
public:
    using Index = std::uint32_t;

    explicit WeylGroup(CoxeterSystem sys, std::uint64_t budget = kDefaultBudget);

    const CoxeterSystem& system() const noexcept { return sys_; }
    int rank() const noexcept { return sys_.rank(); }
    std::size_t size() const noexcept { return elements_.size(); }

    const GroupElement& element(Index w) const { return elements_[w]; }
    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    /// Throws IndexOutOfRange if g is not an element of this group.
    Index index_of(const GroupElement& g) const;

    Index identity() const noexcept { return 0; }
    Index longest() const noexcept { return longest_; }
    Index right_mult(Index w, int s) const { return right_mult_[w * rank_u() + static_cast<std::size_t>(s)]; }
    int length(Index w) const { return elements_[w].length(); }
    std::uint32_t descent_mask(Index w) const { return descents_[w]; }
    bool has_descent(Index w, int s) const { return (descents_[w] >> s) & 1u; }
    int pick_descent(Index w, DescentPolicy policy) const;

    const std::vector<int>& reduced_word(Index w) const { return words_[w]; }
    std::string word_string(Index w) const { return format_word(words_[w]); }
    Index from_word(std::span<const int> word) const;
    Index parse(std::string_view text) const;

    /// x <= y in Bruhat order.
    bool leq(Index x, Index y) const { return bruhat_[x * size() + y] != 0; }
    std::size_t comparable_pairs() const noexcept { return comparable_pairs_; }

    /// Indices grouped by length; stratum k holds every element of length k.
    const std::vector<std::vector<Index>>& strata() const noexcept { return strata_; }

private:
    std::size_t rank_u() const noexcept { return static_cast<std::size_t>(sys_.rank()); }

    CoxeterSystem sys_;
    std::vector<GroupElement> elements_;
    std::unordered_map<GroupElement, Index, GroupElementHash> lookup_;
    std::vector<Index> right_mult_;
    std::vector<std::uint32_t> descents_;
    std::vector<std::vector<int>> words_;
    std::vector<std::uint8_t> bruhat_;
    std::vector<std::vector<Index>> strata_;
    Index longest_ = 0;
    std::size_t comparable_pairs_ = 0;
};

} // namespace verma_ext
