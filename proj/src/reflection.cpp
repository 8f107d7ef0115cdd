#include "verma_ext/reflection.hpp"

#include <algorithm>
#include <cctype>

namespace verma_ext {

namespace {

void check_rank(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::RankMismatch, "dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
        std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (i == s.size()) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw Error(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
        return boost::multiprecision::cpp_int(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

// ---------------------------------------------------------------------------

RationalVector RationalVector::from_ints(std::span<const int> values) {
    RationalVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
    return v;
}

bool RationalVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
    check_rank(dim(), other.dim());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
    check_rank(dim(), other.dim());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scalar) {
    for (auto& c : coords_) c *= scalar;
    return *this;
}

// ---------------------------------------------------------------------------

void rref(std::vector<RationalVector>& rows) {
    if (rows.empty()) return;
    const std::size_t cols = rows.front().dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = 1 / rows[rank][col];
        rows[rank] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
}

RationalSubspace RationalSubspace::span(std::size_t ambient, std::vector<RationalVector> rows) {
    for (const auto& r : rows) check_rank(r.dim(), ambient);
    rref(rows);
    RationalSubspace u(ambient);
    u.rows_ = std::move(rows);
    return u;
}

RationalSubspace RationalSubspace::full(std::size_t ambient) {
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        RationalVector e(ambient);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return span(ambient, std::move(rows));
}

std::vector<std::size_t> RationalSubspace::pivots() const {
    std::vector<std::size_t> out;
    for (const auto& row : rows_)
        for (std::size_t c = 0; c < ambient_; ++c)
            if (row[c] != 0) {
                out.push_back(c);
                break;
            }
    return out;
}

nlohmann::json RationalSubspace::to_json() const {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& c : row.coords()) r.push_back(verma_ext::to_string(c));
        basis.push_back(std::move(r));
    }
    return {{"dim", rows_.size()}, {"basis", std::move(basis)}};
}

RationalSubspace RationalSubspace::from_json(const nlohmann::json& j, std::size_t ambient) {
    try {
        std::vector<RationalVector> rows;
        for (const auto& r : j.at("basis")) {
            std::vector<Rational> coords;
            for (const auto& c : r) coords.push_back(parse_rational(c.get<std::string>()));
            check_rank(coords.size(), ambient);
            rows.emplace_back(std::move(coords));
        }
        auto u = span(ambient, std::move(rows));
        if (u.dim() != j.at("dim").get<std::size_t>())
            throw Error(ErrorKind::ParseError, "subspace dim field disagrees with basis");
        return u;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

// ---------------------------------------------------------------------------

RationalVector basis_vector(const CoxeterSystem& sys, int s) {
    sys.check_index(s);
    RationalVector v(static_cast<std::size_t>(sys.rank()));
    v[static_cast<std::size_t>(s)] = 1;
    return v;
}

Rational coroot_pairing(const CoxeterSystem& sys, int s, const RationalVector& v) {
    sys.check_index(s);
    check_rank(v.dim(), static_cast<std::size_t>(sys.rank()));
    Rational acc = 0;
    for (int t = 0; t < sys.rank(); ++t) {
        const int a = sys.cartan(s, t);
        if (a != 0) acc += a * v[static_cast<std::size_t>(t)];
    }
    return acc;
}

RationalVector reflect(const CoxeterSystem& sys, int s, const RationalVector& v) {
    RationalVector out = v;
    out[static_cast<std::size_t>(s)] -= coroot_pairing(sys, s, v);
    return out;
}

RationalVector apply(const GroupElement& g, const RationalVector& v) {
    const auto n = static_cast<std::size_t>(g.rank());
    check_rank(v.dim(), n);
    RationalVector out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const int m = g.at(static_cast<int>(r), static_cast<int>(c));
            if (m != 0) out[r] += m * v[c];
        }
    return out;
}

RationalSubspace act(const GroupElement& g, const RationalSubspace& u) {
    check_rank(u.ambient(), static_cast<std::size_t>(g.rank()));
    std::vector<RationalVector> rows;
    rows.reserve(u.dim());
    for (const auto& row : u.basis()) rows.push_back(apply(g, row));
    return RationalSubspace::span(u.ambient(), std::move(rows));
}

RationalSubspace reflect_subspace(const CoxeterSystem& sys, int s, const RationalSubspace& u) {
    check_rank(u.ambient(), static_cast<std::size_t>(sys.rank()));
    std::vector<RationalVector> rows;
    rows.reserve(u.dim());
    for (const auto& row : u.basis()) rows.push_back(reflect(sys, s, row));
    return RationalSubspace::span(u.ambient(), std::move(rows));
}

RationalSubspace zero_subspace(const CoxeterSystem& sys) {
    return RationalSubspace(static_cast<std::size_t>(sys.rank()));
}

RationalSubspace add_line(const RationalSubspace& u, const RationalVector& v) {
    check_rank(u.ambient(), v.dim());
    auto rows = u.basis();
    rows.push_back(v);
    return RationalSubspace::span(u.ambient(), std::move(rows));
}

RationalSubspace sum(const RationalSubspace& u, const RationalSubspace& w) {
    check_rank(u.ambient(), w.ambient());
    auto rows = u.basis();
    rows.insert(rows.end(), w.basis().begin(), w.basis().end());
    return RationalSubspace::span(u.ambient(), std::move(rows));
}

bool contains(const RationalSubspace& u, const RationalVector& v) {
    check_rank(u.ambient(), v.dim());
    // Reduce v against the RREF rows; v is a member iff nothing is left.
    RationalVector rest = v;
    const auto piv = u.pivots();
    for (std::size_t r = 0; r < u.dim(); ++r) {
        const Rational c = rest[piv[r]];
        if (c == 0) continue;
        for (std::size_t k = 0; k < u.ambient(); ++k) rest[k] -= c * u.basis()[r][k];
    }
    return rest.is_zero();
}

RationalSubspace quotient_by_coordinates(const RationalSubspace& u, std::span<const int> killed) {
    std::vector<bool> drop(u.ambient(), false);
    for (int k : killed) {
        if (k < 0 || static_cast<std::size_t>(k) >= u.ambient())
            throw Error(ErrorKind::IndexOutOfRange, "coordinate " + std::to_string(k));
        drop[static_cast<std::size_t>(k)] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < u.ambient(); ++c)
        if (!drop[c]) keep.push_back(c);
    std::vector<RationalVector> rows;
    for (const auto& row : u.basis()) {
        RationalVector p(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) p[i] = row[keep[i]];
        rows.push_back(std::move(p));
    }
    return RationalSubspace::span(keep.size(), std::move(rows));
}

} // namespace verma_ext
