#include "verma_ext/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <deque>
#include <limits>
#include <set>

namespace verma_ext {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

bool valid_factor(const TypeFactor& f) {
    switch (f.family) {
    case 'A': return f.rank >= 1;
    case 'B': return f.rank >= 2;
    case 'C': return f.rank >= 3;
    case 'D': return f.rank >= 4;
    case 'E': return f.rank >= 6 && f.rank <= 8;
    case 'F': return f.rank == 4;
    case 'G': return f.rank == 2;
    default: return false;
    }
}

std::uint64_t factor_order(const TypeFactor& f) {
    auto factorial = [](int n) {
        std::uint64_t r = 1;
        for (int k = 2; k <= n; ++k) r = sat_mul(r, static_cast<std::uint64_t>(k));
        return r;
    };
    auto pow2 = [](int n) {
        std::uint64_t r = 1;
        for (int k = 0; k < n; ++k) r = sat_mul(r, 2);
        return r;
    };
    switch (f.family) {
    case 'A': return factorial(f.rank + 1);
    case 'B':
    case 'C': return sat_mul(pow2(f.rank), factorial(f.rank));
    case 'D': return sat_mul(pow2(f.rank - 1), factorial(f.rank));
    case 'E': return f.rank == 6 ? 51'840 : f.rank == 7 ? 2'903'040 : 696'729'600;
    case 'F': return 1'152;
    case 'G': return 12;
    default: return 0;
    }
}

// Cartan block of one irreducible factor, Bourbaki numbering, row-major.
std::vector<int> factor_cartan(const TypeFactor& f) {
    const int n = f.rank;
    std::vector<int> a(static_cast<std::size_t>(n * n), 0);
    auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i * n + j)] = v; };
    auto link = [&](int i, int j) {
        set(i, j, -1);
        set(j, i, -1);
    };
    for (int i = 0; i < n; ++i) set(i, i, 2);

    switch (f.family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'B':  // alpha_n short
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        set(n - 2, n - 1, -1);
        set(n - 1, n - 2, -2);
        break;
    case 'C':  // alpha_n long
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        set(n - 2, n - 1, -2);
        set(n - 1, n - 2, -1);
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':  // 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'F':  // 1-2=>3-4, alpha_3 and alpha_4 short
        link(0, 1);
        set(1, 2, -1);
        set(2, 1, -2);
        link(2, 3);
        break;
    case 'G':  // alpha_1 short
        set(0, 1, -3);
        set(1, 0, -1);
        break;
    default: break;
    }
    return a;
}

int coxeter_from_product(int product) {
    switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw Error(ErrorKind::InvalidType, "Cartan product " + std::to_string(product) +
                                                    " is not crystallographic");
    }
}

} // namespace

int TypeDescriptor::total_rank() const {
    int n = 0;
    for (const auto& f : factors) n += f.rank;
    return n;
}

std::string TypeDescriptor::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i != 0) out += 'x';
        out += factors[i].family;
        out += std::to_string(factors[i].rank);
    }
    return out;
}

TypeDescriptor parse_type(std::string_view text) {
    TypeDescriptor desc;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> TypeDescriptor {
        throw Error(ErrorKind::InvalidType, "'" + std::string(text) + "': " + why);
    };
    if (text.empty()) return fail("empty descriptor");
    while (true) {
        if (pos >= text.size()) return fail("expected a factor");
        const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (family < 'A' || family > 'G') return fail("unknown family");
        ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return fail("missing rank");
        int rank = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, rank);
        if (ec != std::errc{} || ptr != text.data() + pos) return fail("bad rank");
        TypeFactor factor{family, rank};
        if (!valid_factor(factor)) return fail(std::string(1, family) + std::to_string(rank) +
                                                   " is not a Weyl type");
        desc.factors.push_back(factor);
        if (pos == text.size()) break;
        if (text[pos] != 'x' && text[pos] != 'X') return fail("expected 'x' between factors");
        ++pos;
    }
    return desc;
}

std::uint64_t weyl_group_order(const TypeDescriptor& desc) {
    std::uint64_t order = 1;
    for (const auto& f : desc.factors) order = sat_mul(order, factor_order(f));
    return order;
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(TypeDescriptor type, std::vector<int> cartan_entries)
    : type_(std::move(type)), rank_(type_.total_rank()), cartan_(std::move(cartan_entries)) {
    const auto n = static_cast<std::size_t>(rank_);
    if (cartan_.size() != n * n) throw Error(ErrorKind::InvalidType, "Cartan matrix size mismatch");

    coxeter_m_.assign(n * n, 1);
    for (int i = 0; i < rank_; ++i) {
        if (cartan(i, i) != 2) throw Error(ErrorKind::InvalidType, "Cartan diagonal must be 2");
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            const int aij = cartan(i, j);
            const int aji = cartan(j, i);
            if (aij > 0 || (aij == 0) != (aji == 0))
                throw Error(ErrorKind::InvalidType, "Cartan sign pattern violated");
            coxeter_m_[index(i, j)] = coxeter_from_product(aij * aji);
        }
    }
    group_order_ = weyl_group_order(type_);

    // Orbit closure of the simple roots under simple reflections.
    std::set<IntVector> roots;
    std::deque<IntVector> queue;
    for (int i = 0; i < rank_; ++i) {
        IntVector e(n, 0);
        e[static_cast<std::size_t>(i)] = 1;
        roots.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        IntVector beta = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            int pairing = 0;
            for (int j = 0; j < rank_; ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan(i, j);
            if (pairing == 0) continue;
            IntVector image = beta;
            image[static_cast<std::size_t>(i)] -= pairing;
            if (roots.insert(image).second) queue.push_back(std::move(image));
        }
    }
    for (const auto& r : roots)
        if (!is_negative_root(r)) positive_roots_.push_back(r);
    std::sort(positive_roots_.begin(), positive_roots_.end(), [](const IntVector& a, const IntVector& b) {
        int ha = 0, hb = 0;
        for (int c : a) ha += c;
        for (int c : b) hb += c;
        return ha != hb ? ha < hb : a < b;
    });
}

std::string CoxeterSystem::fingerprint() const {
    // FNV-1a over the rank and Cartan entries.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::int64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= static_cast<std::uint64_t>(v >> (8 * byte)) & 0xffu;
            h *= 0x100000001b3ULL;
        }
    };
    mix(rank_);
    for (int a : cartan_) mix(a);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return type_.to_string() + "#" + hex;
}

void CoxeterSystem::check_index(int i) const {
    if (i < 0 || i >= rank_)
        throw Error(ErrorKind::IndexOutOfRange,
                    "simple index " + std::to_string(i) + " outside [0, " + std::to_string(rank_) + ")");
}

CoxeterSystem build_system(const TypeDescriptor& desc, std::uint64_t budget) {
    if (desc.factors.empty()) throw Error(ErrorKind::InvalidType, "empty descriptor");
    for (const auto& f : desc.factors)
        if (!valid_factor(f))
            throw Error(ErrorKind::InvalidType, std::string(1, f.family) + std::to_string(f.rank) +
                                                    " is not a Weyl type");
    const std::uint64_t order = weyl_group_order(desc);
    if (desc.total_rank() > 32 || sat_mul(order, order) > budget)
        throw Error(ErrorKind::RankOverflow, desc.to_string() + " has |W| = " +
                                                 (order == kSaturated ? std::string("overflow")
                                                                      : std::to_string(order)) +
                                                 ", |W|^2 exceeds budget " + std::to_string(budget));

    const int n = desc.total_rank();
    std::vector<int> cartan(static_cast<std::size_t>(n * n), 0);
    int offset = 0;
    for (const auto& f : desc.factors) {
        const auto block = factor_cartan(f);
        for (int i = 0; i < f.rank; ++i)
            for (int j = 0; j < f.rank; ++j)
                cartan[static_cast<std::size_t>((offset + i) * n + offset + j)] =
                    block[static_cast<std::size_t>(i * f.rank + j)];
        offset += f.rank;
    }
    return CoxeterSystem(desc, std::move(cartan));
}

CoxeterSystem build_system(std::string_view desc, std::uint64_t budget) {
    return build_system(parse_type(desc), budget);
}

// ---------------------------------------------------------------------------
// GroupElement

IntVector GroupElement::apply(std::span<const int> v) const {
    IntVector out(static_cast<std::size_t>(rank_), 0);
    for (int r = 0; r < rank_; ++r) {
        int acc = 0;
        for (int c = 0; c < rank_; ++c) acc += at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

bool GroupElement::operator<(const GroupElement& other) const {
    if (length_ != other.length_) return length_ < other.length_;
    return matrix_ < other.matrix_;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : g.matrix()) {
        h ^= static_cast<std::size_t>(v + 0x9e3779b9);
        h *= 1099511628211ULL;
    }
    return h;
}

bool is_negative_root(std::span<const int> root) {
    for (int c : root)
        if (c != 0) return c < 0;
    return false;
}

namespace {

int count_inversions(const CoxeterSystem& sys, const std::vector<int>& matrix) {
    const int n = sys.rank();
    int count = 0;
    for (const auto& beta : sys.positive_roots()) {
        // Sign of any nonzero coordinate of the image decides.
        for (int r = 0; r < n; ++r) {
            int acc = 0;
            for (int c = 0; c < n; ++c)
                acc += matrix[static_cast<std::size_t>(r * n + c)] * beta[static_cast<std::size_t>(c)];
            if (acc != 0) {
                count += acc < 0 ? 1 : 0;
                break;
            }
        }
    }
    return count;
}

GroupElement make_element(const CoxeterSystem& sys, std::vector<int> matrix) {
    const int len = count_inversions(sys, matrix);
    return GroupElement(sys.rank(), std::move(matrix), len);
}

std::vector<int> matmul(int n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int aik = a[static_cast<std::size_t>(i * n + k)];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                out[static_cast<std::size_t>(i * n + j)] += aik * b[static_cast<std::size_t>(k * n + j)];
        }
    return out;
}

std::vector<int> times_simple(const CoxeterSystem& sys, const std::vector<int>& g, int i) {
    const int n = sys.rank();
    std::vector<int> out = g;
    // s_i(alpha_j) = alpha_j - a(i,j) alpha_i, so column j of g*s_i is
    // g_j - a(i,j) g_i.
    for (int j = 0; j < n; ++j) {
        const int a = sys.cartan(i, j);
        if (a == 0) continue;
        for (int r = 0; r < n; ++r)
            out[static_cast<std::size_t>(r * n + j)] -= a * g[static_cast<std::size_t>(r * n + i)];
    }
    return out;
}

bool is_identity_matrix(int n, const std::vector<int>& m) {
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (m[static_cast<std::size_t>(r * n + c)] != (r == c ? 1 : 0)) return false;
    return true;
}

} // namespace

GroupElement identity(const CoxeterSystem& sys) {
    const int n = sys.rank();
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    return GroupElement(n, std::move(m), 0);
}

GroupElement simple_reflection(const CoxeterSystem& sys, int i) {
    sys.check_index(i);
    return make_element(sys, times_simple(sys, identity(sys).matrix(), i));
}

GroupElement multiply(const CoxeterSystem& sys, const GroupElement& g, const GroupElement& h) {
    if (g.rank() != sys.rank() || h.rank() != sys.rank())
        throw Error(ErrorKind::RankMismatch, "element rank differs from system rank");
    return make_element(sys, matmul(sys.rank(), g.matrix(), h.matrix()));
}

GroupElement from_word(const CoxeterSystem& sys, std::span<const int> word) {
    std::vector<int> m = identity(sys).matrix();
    for (int i : word) {
        sys.check_index(i);
        m = times_simple(sys, m, i);
    }
    return make_element(sys, std::move(m));
}

GroupElement inverse(const CoxeterSystem& sys, const GroupElement& g) {
    auto word = reduced_word(sys, g);
    std::reverse(word.begin(), word.end());
    return from_word(sys, word);
}

int length(const CoxeterSystem& sys, const GroupElement& g) {
    return count_inversions(sys, g.matrix());
}

std::uint32_t right_descent_mask(const CoxeterSystem& sys, const GroupElement& g) {
    const int n = sys.rank();
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
        // g * alpha_i is column i.
        for (int r = 0; r < n; ++r) {
            const int c = g.at(r, i);
            if (c != 0) {
                if (c < 0) mask |= 1u << i;
                break;
            }
        }
    }
    return mask;
}

std::vector<int> right_descents(const CoxeterSystem& sys, const GroupElement& g) {
    std::vector<int> out;
    const std::uint32_t mask = right_descent_mask(sys, g);
    for (int i = 0; i < sys.rank(); ++i)
        if ((mask >> i) & 1u) out.push_back(i);
    return out;
}

bool has_right_descent(const CoxeterSystem& sys, const GroupElement& g, int i) {
    sys.check_index(i);
    return (right_descent_mask(sys, g) >> i) & 1u;
}

int pick_descent(std::uint32_t mask, DescentPolicy policy) {
    if (mask == 0) return -1;
    return policy == DescentPolicy::smallest ? std::countr_zero(mask) : 31 - std::countl_zero(mask);
}

bool bruhat_leq(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y,
                DescentPolicy policy) {
    // The recursion only ever follows one branch, so it is a loop.
    std::vector<int> xm = x.matrix();
    std::vector<int> ym = y.matrix();
    int xl = x.length();
    int yl = y.length();
    const int n = sys.rank();
    while (true) {
        if (xl > yl) return false;
        if (yl == 0) return xl == 0;
        const GroupElement yy(n, ym, yl);
        const int s = pick_descent(right_descent_mask(sys, yy), policy);
        const GroupElement xx(n, xm, xl);
        if (has_right_descent(sys, xx, s)) {
            xm = times_simple(sys, xm, s);
            --xl;
        }
        ym = times_simple(sys, ym, s);
        --yl;
    }
}

std::vector<GroupElement> subword_products(const CoxeterSystem& sys, const GroupElement& y,
                                           int max_length) {
    if (y.length() > max_length)
        throw Error(ErrorKind::BudgetExceeded, "subword oracle needs 2^" + std::to_string(y.length()) +
                                                   " subwords, cap is 2^" + std::to_string(max_length));
    const auto word = reduced_word(sys, y);
    std::set<std::vector<int>> seen;
    // Depth-first walk over include/skip decisions, sharing prefixes.
    std::vector<std::pair<std::size_t, std::vector<int>>> stack;
    stack.emplace_back(0, identity(sys).matrix());
    while (!stack.empty()) {
        auto [pos, m] = std::move(stack.back());
        stack.pop_back();
        if (pos == word.size()) {
            seen.insert(std::move(m));
            continue;
        }
        stack.emplace_back(pos + 1, times_simple(sys, m, word[pos]));
        stack.emplace_back(pos + 1, std::move(m));
    }
    std::vector<GroupElement> out;
    out.reserve(seen.size());
    for (const auto& m : seen) out.push_back(make_element(sys, m));
    return out;
}

bool bruhat_leq_oracle(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y,
                       int max_length) {
    const auto products = subword_products(sys, y, max_length);
    return std::find(products.begin(), products.end(), x) != products.end();
}

std::vector<GroupElement> enumerate(const CoxeterSystem& sys, std::uint64_t budget) {
    const std::uint64_t order = sys.group_order();
    if (sat_mul(order, order) > budget)
        throw Error(ErrorKind::RankOverflow, "|W| = " + std::to_string(order) + " exceeds budget");
    std::unordered_map<GroupElement, char, GroupElementHash> seen;
    std::vector<GroupElement> out;
    std::deque<GroupElement> queue;
    queue.push_back(identity(sys));
    seen.emplace(queue.front(), 0);
    while (!queue.empty()) {
        GroupElement g = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < sys.rank(); ++i) {
            GroupElement h = make_element(sys, times_simple(sys, g.matrix(), i));
            if (seen.emplace(h, 0).second) queue.push_back(std::move(h));
        }
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroupElement longest_element(const CoxeterSystem& sys) {
    std::vector<int> m = identity(sys).matrix();
    const std::uint32_t all = sys.rank() == 32 ? ~0u : (1u << sys.rank()) - 1u;
    while (true) {
        const GroupElement g(sys.rank(), m, 0);
        const std::uint32_t ascents = ~right_descent_mask(sys, g) & all;
        if (ascents == 0) break;
        m = times_simple(sys, m, std::countr_zero(ascents));
    }
    return make_element(sys, std::move(m));
}

std::vector<int> reduced_word(const CoxeterSystem& sys, const GroupElement& g) {
    std::vector<int> stripped;
    std::vector<int> m = g.matrix();
    const int n = sys.rank();
    while (!is_identity_matrix(n, m)) {
        const int s = pick_descent(right_descent_mask(sys, GroupElement(n, m, 0)), DescentPolicy::smallest);
        stripped.push_back(s);
        m = times_simple(sys, m, s);
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

std::vector<GroupElement> min_coset_reps(const CoxeterSystem& sys, std::span<const int> subset,
                                         std::uint64_t budget) {
    std::uint32_t mask = 0;
    for (int i : subset) {
        sys.check_index(i);
        mask |= 1u << i;
    }
    std::vector<GroupElement> out;
    for (auto& g : enumerate(sys, budget))
        if ((right_descent_mask(sys, g) & mask) == 0) out.push_back(std::move(g));
    return out;
}

std::string format_word(std::span<const int> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(word[i] + 1);
    }
    return out;
}

std::vector<int> parse_word(std::string_view text, int rank) {
    std::vector<int> word;
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trimmed(text);
    if (text.empty() || text == "e") return word;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = trimmed(text.substr(pos, comma - pos));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorKind::ParseError, "bad word '" + std::string(text) + "'");
        if (value < 1 || value > rank)
            throw Error(ErrorKind::ParseError, "letter " + std::to_string(value) + " outside 1.." +
                                                   std::to_string(rank));
        word.push_back(value - 1);
        pos = comma + 1;
    }
    return word;
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(CoxeterSystem sys, std::uint64_t budget) : sys_(std::move(sys)) {
    elements_ = enumerate(sys_, budget);
    const std::size_t count = elements_.size();
    if (count != sys_.group_order())
        throw Error(ErrorKind::InvalidType, "enumeration found " + std::to_string(count) +
                                                " elements, expected " + std::to_string(sys_.group_order()));
    lookup_.reserve(count);
    for (std::size_t w = 0; w < count; ++w) lookup_.emplace(elements_[w], static_cast<Index>(w));

    const int n = sys_.rank();
    right_mult_.resize(count * rank_u());
    descents_.resize(count);
    words_.resize(count);
    for (std::size_t w = 0; w < count; ++w) {
        descents_[w] = right_descent_mask(sys_, elements_[w]);
        for (int s = 0; s < n; ++s) {
            const GroupElement ws(n, times_simple(sys_, elements_[w].matrix(), s),
                                  elements_[w].length() + (((descents_[w] >> s) & 1u) ? -1 : 1));
            right_mult_[w * rank_u() + static_cast<std::size_t>(s)] = lookup_.at(ws);
        }
    }

    strata_.assign(static_cast<std::size_t>(sys_.longest_length()) + 1, {});
    for (std::size_t w = 0; w < count; ++w)
        strata_[static_cast<std::size_t>(elements_[w].length())].push_back(static_cast<Index>(w));
    longest_ = strata_.back().front();

    // Elements are sorted by length, so w * s with s a descent precedes w.
    for (std::size_t w = 1; w < count; ++w) {
        const int s = verma_ext::pick_descent(descents_[w], DescentPolicy::smallest);
        words_[w] = words_[right_mult(static_cast<Index>(w), s)];
        words_[w].push_back(s);
    }

    // Bruhat matrix by the lifting recursion, filled in order of l(y).
    bruhat_.assign(count * count, 0);
    bruhat_[0] = 1;
    for (std::size_t y = 1; y < count; ++y) {
        const int s = verma_ext::pick_descent(descents_[y], DescentPolicy::smallest);
        const Index ys = right_mult(static_cast<Index>(y), s);
        for (std::size_t x = 0; x < count; ++x) {
            const Index xs = right_mult(static_cast<Index>(x), s);
            const Index lower = ((descents_[x] >> s) & 1u) ? xs : static_cast<Index>(x);
            bruhat_[x * count + y] = bruhat_[lower * count + ys];
        }
    }
    for (std::uint8_t b : bruhat_) comparable_pairs_ += b;
}

WeylGroup::Index WeylGroup::index_of(const GroupElement& g) const {
    const auto it = lookup_.find(g);
    if (it == lookup_.end()) throw Error(ErrorKind::IndexOutOfRange, "element not in group");
    return it->second;
}

int WeylGroup::pick_descent(Index w, DescentPolicy policy) const {
    return verma_ext::pick_descent(descents_[w], policy);
}

WeylGroup::Index WeylGroup::from_word(std::span<const int> word) const {
    Index w = identity();
    for (int s : word) {
        sys_.check_index(s);
        w = right_mult(w, s);
    }
    return w;
}

WeylGroup::Index WeylGroup::parse(std::string_view text) const {
    return from_word(parse_word(text, rank()));
}

} // namespace verma_ext
