#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "verma_ext/coxeter.hpp"

namespace verma_ext {

/// Dense integer polynomial in q; coefficient i belongs to q^i. The zero
/// polynomial has no coefficients, otherwise the last one is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);
    static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
    static IntPolynomial q() { return IntPolynomial({0, 1}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int i) const;
    std::int64_t leading() const { return is_zero() ? 0 : coeffs_.back(); }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t eval(std::int64_t x) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial&) const = default;

    /// Human form such as "q^3-2q^2+2q-1".
    std::string to_string() const;
    /// Cache form "c0,c1,...,cd"; "0" for the zero polynomial.
    std::string to_csv() const;
    static IntPolynomial from_csv(std::string_view text);

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// Memo of R_{y,x} for every ordered pair of one enumerated group.
///
/// Filling is stratified by l(x): R_{.,x} only reads R_{.,xs} with l(xs) =
/// l(x) - 1, so `fill_all` may split a stratum across threads. Lazy `get`
/// calls are not synchronized and must come from one thread.
class RTable {
public:
    explicit RTable(const WeylGroup& group, DescentPolicy policy = DescentPolicy::smallest);

    const WeylGroup& group() const noexcept { return *group_; }
    DescentPolicy policy() const noexcept { return policy_; }

    /// R_{y,x}; zero unless y <= x.
    const IntPolynomial& get(WeylGroup::Index y, WeylGroup::Index x);
    void fill_all(unsigned jobs = 1);

    /// Number of polynomials produced by the recursion (cache loads excluded).
    std::size_t computed() const noexcept { return computed_; }
    bool complete() const;

    /// Writes every comparable pair as `y_word;x_word;c0,...,cd`.
    void save(const std::filesystem::path& path, const std::string& timestamp = {});
    /// Loads a cache written by `save`. Returns false on fingerprint mismatch;
    /// throws CacheError on malformed rows or violated R invariants.
    bool load(const std::filesystem::path& path);

private:
    std::size_t slot(WeylGroup::Index y, WeylGroup::Index x) const { return y * group_->size() + x; }
    IntPolynomial compute(WeylGroup::Index y, WeylGroup::Index x);

    const WeylGroup* group_;
    DescentPolicy policy_;
    std::vector<std::optional<IntPolynomial>> table_;
    std::size_t computed_ = 0;
};

/// R_{y,x} by the descent recursion.
const IntPolynomial& r_polynomial(RTable& table, WeylGroup::Index y, WeylGroup::Index x);

/// Coefficient of q in (-1)^{l(y)-l(x)-1} R_{y,x}(q). Throws NotComparable
/// unless y <= x.
std::int64_t gj_coefficient(RTable& table, WeylGroup::Index x, WeylGroup::Index y);

/// The same coefficient from the three descent rules alone, never building
/// a polynomial. Throws NotComparable unless y <= x.
std::int64_t r_coeff_direct(const WeylGroup& group, WeylGroup::Index x, WeylGroup::Index y,
                            DescentPolicy policy = DescentPolicy::smallest);

} // namespace verma_ext
