#include "verma_ext/rpoly.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "verma_ext/parallel.hpp"

namespace verma_ext {

namespace {

bool odd(int k) { return (k % 2 + 2) % 2 == 1; }

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(text.substr(pos));
            return out;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

std::int64_t IntPolynomial::eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (mag != 1 || i == 0) out += std::to_string(mag);
        if (i >= 1) out += 'q';
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string IntPolynomial::to_csv() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

IntPolynomial IntPolynomial::from_csv(std::string_view text) {
    std::vector<std::int64_t> coeffs;
    for (auto token : split(text, ',')) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorKind::ParseError, "bad coefficient list '" + std::string(text) + "'");
        coeffs.push_back(v);
    }
    return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// RTable

RTable::RTable(const WeylGroup& group, DescentPolicy policy)
    : group_(&group), policy_(policy), table_(group.size() * group.size()) {}

IntPolynomial RTable::compute(WeylGroup::Index y, WeylGroup::Index x) {
    ++computed_;
    if (x == group_->identity()) return IntPolynomial::constant(y == x ? 1 : 0);
    const int s = group_->pick_descent(x, policy_);
    const auto xs = group_->right_mult(x, s);
    const auto ys = group_->right_mult(y, s);
    if (group_->has_descent(y, s)) return get(ys, xs);
    // (q - 1) R_{y,xs} + q R_{ys,xs}
    return IntPolynomial({-1, 1}) * get(y, xs) + IntPolynomial::q() * get(ys, xs);
}

const IntPolynomial& RTable::get(WeylGroup::Index y, WeylGroup::Index x) {
    auto& entry = table_[slot(y, x)];
    if (!entry) entry = compute(y, x);
    return *entry;
}

void RTable::fill_all(unsigned jobs) {
    const std::size_t n = group_->size();
    for (const auto& stratum : group_->strata()) {
        if (resolve_jobs(jobs) <= 1) {
            for (auto x : stratum)
                for (std::size_t y = 0; y < n; ++y) get(static_cast<WeylGroup::Index>(y), x);
            continue;
        }
        // Every entry a stratum needs lives in the previous, sealed stratum.
        std::vector<std::size_t> counts(stratum.size(), 0);
        parallel_for(stratum.size(), jobs, [&](std::size_t k) {
            const auto x = stratum[k];
            for (std::size_t y = 0; y < n; ++y) {
                auto& entry = table_[slot(static_cast<WeylGroup::Index>(y), x)];
                if (entry) continue;
                const auto yi = static_cast<WeylGroup::Index>(y);
                if (x == group_->identity()) {
                    entry = IntPolynomial::constant(yi == x ? 1 : 0);
                } else {
                    const int s = group_->pick_descent(x, policy_);
                    const auto xs = group_->right_mult(x, s);
                    const auto ys = group_->right_mult(yi, s);
                    const auto& below = *table_[slot(ys, xs)];
                    entry = group_->has_descent(yi, s)
                                ? below
                                : IntPolynomial({-1, 1}) * *table_[slot(yi, xs)] + IntPolynomial::q() * below;
                }
                ++counts[k];
            }
        });
        for (auto c : counts) computed_ += c;
    }
}

bool RTable::complete() const {
    for (const auto& e : table_)
        if (!e) return false;
    return true;
}

void RTable::save(const std::filesystem::path& path, const std::string& timestamp) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out << "# verma-ext rpoly cache\n";
    out << "# system: " << group_->system().fingerprint() << "\n";
    out << "# generated: " << timestamp << "\n";
    const std::size_t n = group_->size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto yi = static_cast<WeylGroup::Index>(y);
            const auto xi = static_cast<WeylGroup::Index>(x);
            if (!group_->leq(yi, xi)) continue;
            out << group_->word_string(yi) << ';' << group_->word_string(xi) << ';' << get(yi, xi).to_csv()
                << '\n';
        }
    if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

bool RTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    const std::string fingerprint = group_->system().fingerprint();
    bool fingerprint_seen = false;
    std::size_t rows = 0;
    std::vector<std::optional<IntPolynomial>> loaded(table_.size());
    std::string line;
    std::size_t line_no = 0;
    auto corrupt = [&](const std::string& why) {
        return Error(ErrorKind::CacheError, path.string() + ":" + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '#') {
            constexpr std::string_view key = "# system: ";
            if (line.starts_with(key)) {
                if (line.substr(key.size()) != fingerprint) return false;
                fingerprint_seen = true;
            }
            continue;
        }
        if (!fingerprint_seen) throw corrupt("row before system header");
        const auto fields = split(line, ';');
        if (fields.size() != 3) throw corrupt("expected 3 fields");
        WeylGroup::Index y = 0, x = 0;
        IntPolynomial p;
        try {
            y = group_->parse(fields[0]);
            x = group_->parse(fields[1]);
            p = IntPolynomial::from_csv(fields[2]);
        } catch (const Error& e) {
            throw corrupt(e.what());
        }
        if (!group_->leq(y, x)) throw corrupt("entry for a pair with y not <= x");
        const int gap = group_->length(x) - group_->length(y);
        if (p.degree() != gap) throw corrupt("degree " + std::to_string(p.degree()) + " != " + std::to_string(gap));
        if (p.coeff(0) != (odd(gap) ? -1 : 1)) throw corrupt("constant term has wrong sign");
        loaded[slot(y, x)] = std::move(p);
        ++rows;
    }
    if (!fingerprint_seen) return false;
    if (rows == group_->comparable_pairs()) {
        // A complete file determines every other entry as zero.
        for (std::size_t i = 0; i < loaded.size(); ++i)
            if (!loaded[i]) loaded[i] = IntPolynomial{};
    }
    for (std::size_t i = 0; i < loaded.size(); ++i)
        if (loaded[i]) table_[i] = std::move(loaded[i]);
    return true;
}

// ---------------------------------------------------------------------------

const IntPolynomial& r_polynomial(RTable& table, WeylGroup::Index y, WeylGroup::Index x) {
    return table.get(y, x);
}

std::int64_t gj_coefficient(RTable& table, WeylGroup::Index x, WeylGroup::Index y) {
    const auto& group = table.group();
    if (!group.leq(y, x))
        throw Error(ErrorKind::NotComparable, "y=" + group.word_string(y) + " is not <= x=" + group.word_string(x));
    // (-1)^{l(y)-l(x)-1} has the parity of l(x)-l(y)+1.
    const int exponent = group.length(x) - group.length(y) + 1;
    const std::int64_t c = table.get(y, x).coeff(1);
    const std::int64_t value = odd(exponent) ? -c : c;
    if (value < 0)
        throw Error(ErrorKind::InvariantViolation, "negative q-coefficient " + std::to_string(value) + " for x=" +
                                                       group.word_string(x) + ", y=" + group.word_string(y));
    return value;
}

std::int64_t r_coeff_direct(const WeylGroup& group, WeylGroup::Index x, WeylGroup::Index y,
                            DescentPolicy policy) {
    if (!group.leq(y, x))
        throw Error(ErrorKind::NotComparable, "y=" + group.word_string(y) + " is not <= x=" + group.word_string(x));
    // Each rule recurses once on (xs, .) so the recursion is a loop.
    std::int64_t acc = 0;
    while (x != y) {
        if (x == group.identity())
            throw Error(ErrorKind::LiftingViolation, "descent recursion left the Bruhat interval");
        const int s = group.pick_descent(x, policy);
        const auto xs = group.right_mult(x, s);
        const auto ys = group.right_mult(y, s);
        if (group.has_descent(y, s)) {
            y = ys;
        } else if (!group.leq(ys, xs)) {
            ++acc;
        }
        x = xs;
    }
    return acc;
}

} // namespace verma_ext
