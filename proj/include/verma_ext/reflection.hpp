#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "verma_ext/coxeter.hpp"

namespace verma_ext {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);  // always "p/q"
Rational parse_rational(std::string_view text);

/// A vector of V in the basis {v_s}, with v_s identified with alpha_s.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : coords_(dim) {}
    explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    static RationalVector from_ints(std::span<const int> values);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    bool is_zero() const;

    RationalVector& operator+=(const RationalVector& other);
    RationalVector& operator-=(const RationalVector& other);
    RationalVector& operator*=(const Rational& scalar);
    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator*(const Rational& c, RationalVector a) { return a *= c; }
    friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
    bool operator==(const RationalVector&) const = default;

private:
    std::vector<Rational> coords_;
};

/// A subspace of Q^n stored as its reduced row echelon basis, so two
/// subspaces are equal iff their stored rows are equal.
class RationalSubspace {
public:
    RationalSubspace() = default;
    explicit RationalSubspace(std::size_t ambient) : ambient_(ambient) {}

    /// Span of arbitrary rows (each of length `ambient`).
    static RationalSubspace span(std::size_t ambient, std::vector<RationalVector> rows);
    static RationalSubspace full(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<RationalVector>& basis() const noexcept { return rows_; }
    std::vector<std::size_t> pivots() const;

    bool operator==(const RationalSubspace&) const = default;

    nlohmann::json to_json() const;
    /// Parses {"dim": r, "basis": [["p/q", ...], ...]} into Q^ambient.
    static RationalSubspace from_json(const nlohmann::json& j, std::size_t ambient);

private:
    std::size_t ambient_ = 0;
    std::vector<RationalVector> rows_;
};

/// In-place reduced row echelon form; drops zero rows.
void rref(std::vector<RationalVector>& rows);

RationalVector basis_vector(const CoxeterSystem& sys, int s);
/// <v, alpha_s^vee> = sum_t v_t a(s, t).
Rational coroot_pairing(const CoxeterSystem& sys, int s, const RationalVector& v);
/// v - <v, alpha_s^vee> v_s
RationalVector reflect(const CoxeterSystem& sys, int s, const RationalVector& v);
RationalVector apply(const GroupElement& g, const RationalVector& v);
RationalSubspace act(const GroupElement& g, const RationalSubspace& u);
/// Action of s through `reflect`, one row at a time.
RationalSubspace reflect_subspace(const CoxeterSystem& sys, int s, const RationalSubspace& u);

RationalSubspace zero_subspace(const CoxeterSystem& sys);
RationalSubspace add_line(const RationalSubspace& u, const RationalVector& v);
RationalSubspace sum(const RationalSubspace& u, const RationalSubspace& w);
bool contains(const RationalSubspace& u, const RationalVector& v);
inline std::size_t dim(const RationalSubspace& u) { return u.dim(); }
inline bool equal(const RationalSubspace& u, const RationalSubspace& w) { return u == w; }

/// Image of u in Q^n / span{e_k : k in killed}, written in the remaining
/// coordinates (in increasing order).
RationalSubspace quotient_by_coordinates(const RationalSubspace& u, std::span<const int> killed);

} // namespace verma_ext
