#include "verma_ext/vtable.hpp"

#include <bit>
#include <sstream>

#include "verma_ext/parallel.hpp"

namespace verma_ext {

VTable::VTable(const WeylGroup& group, VTableOptions options)
    : group_(&group), options_(std::move(options)), table_(group.size() * group.size()) {
    const int n = group.rank();
    if (!options_.basis_scale.empty() && options_.basis_scale.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::RankMismatch, "basis_scale needs one entry per generator");
    for (int s = 0; s < n; ++s) {
        RationalVector vs = basis_vector(group.system(), s);
        if (!options_.basis_scale.empty()) {
            const Rational& c = options_.basis_scale[static_cast<std::size_t>(s)];
            if (c == 0) throw Error(ErrorKind::InvariantViolation, "basis scale must be nonzero");
            vs *= c;
        }
        v_.push_back(std::move(vs));
    }
}

RationalSubspace VTable::compute(WeylGroup::Index x, WeylGroup::Index y) {
    const auto& sys = group_->system();
    if (x == y) return zero_subspace(sys);
    const int s = group_->pick_descent(x, options_.policy);
    const auto xs = group_->right_mult(x, s);
    const auto ys = group_->right_mult(y, s);
    auto violation = [&](const char* what) {
        return Error(ErrorKind::LiftingViolation, std::string(what) + " for x=" + group_->word_string(x) +
                                                      ", y=" + group_->word_string(y) + ", s=" +
                                                      std::to_string(s + 1));
    };
    if (group_->has_descent(y, s)) {
        if (!group_->leq(ys, xs)) throw violation("xs >= ys fails");
        return reflect_subspace(sys, s, get(xs, ys));
    }
    if (!group_->leq(y, xs)) throw violation("xs >= y fails");
    return add_line(reflect_subspace(sys, s, get(xs, y)), v_[static_cast<std::size_t>(s)]);
}

const RationalSubspace& VTable::get(WeylGroup::Index x, WeylGroup::Index y) {
    if (!group_->leq(y, x))
        throw Error(ErrorKind::NotComparable,
                    "y=" + group_->word_string(y) + " is not <= x=" + group_->word_string(x));
    auto& entry = table_[slot(x, y)];
    if (!entry) {
        entry = compute(x, y);
        ++entries_;
        ++computed_;
    }
    return *entry;
}

const RationalSubspace* VTable::find(WeylGroup::Index x, WeylGroup::Index y) const {
    const auto& entry = table_[slot(x, y)];
    return entry ? &*entry : nullptr;
}

void VTable::fill_all(unsigned jobs) {
    const std::size_t n = group_->size();
    for (const auto& stratum : group_->strata()) {
        if (resolve_jobs(jobs) <= 1) {
            for (auto x : stratum)
                for (std::size_t y = 0; y < n; ++y)
                    if (group_->leq(static_cast<WeylGroup::Index>(y), x)) get(x, static_cast<WeylGroup::Index>(y));
            continue;
        }
        // Workers only read the sealed previous stratum and write their own x row.
        std::vector<std::size_t> counts(stratum.size(), 0);
        parallel_for(stratum.size(), jobs, [&](std::size_t k) {
            const auto x = stratum[k];
            for (std::size_t y = 0; y < n; ++y) {
                const auto yi = static_cast<WeylGroup::Index>(y);
                if (!group_->leq(yi, x) || table_[slot(x, yi)]) continue;
                table_[slot(x, yi)] = compute(x, yi);
                ++counts[k];
            }
        });
        for (auto c : counts) {
            entries_ += c;
            computed_ += c;
        }
    }
}

RationalSubspace compute_v(VTable& table, WeylGroup::Index x, WeylGroup::Index y) {
    return table.get(x, y);
}

VTable compute_all(const WeylGroup& group, VTableOptions options, unsigned jobs, std::uint64_t budget) {
    const auto n = static_cast<std::uint64_t>(group.size());
    if (n * n > budget)
        throw Error(ErrorKind::RankOverflow, "pair table of " + std::to_string(n) + "^2 exceeds budget " +
                                                 std::to_string(budget));
    VTable table(group, std::move(options));
    table.fill_all(jobs);
    return table;
}

RationalSubspace singular_v(VTable& table, const SingularSpec& spec, WeylGroup::Index x, WeylGroup::Index y) {
    for (int s : spec.subset) table.group().system().check_index(s);
    // v_s is a multiple of the coordinate vector e_s, so killing span{v_s}
    // is dropping coordinate s.
    return quotient_by_coordinates(table.get(x, y), spec.subset);
}

std::vector<MembershipRow> membership_report(VTable& table) {
    const auto& group = table.group();
    const auto& sys = group.system();
    const std::size_t n = group.size();
    const GroupElement& w0 = group.element(group.longest());

    // Support of w0 * x, as a bitmask of generators.
    std::vector<std::uint32_t> support(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        const auto w0x = group.index_of(multiply(sys, w0, group.element(static_cast<WeylGroup::Index>(x))));
        for (int s : group.reduced_word(w0x)) support[x] |= 1u << s;
    }

    std::vector<MembershipRow> rows;
    for (std::size_t xi = 0; xi < n; ++xi) {
        const auto x = static_cast<WeylGroup::Index>(xi);
        for (std::size_t yi = 0; yi < n; ++yi) {
            const auto y = static_cast<WeylGroup::Index>(yi);
            if (!group.leq(y, x)) continue;
            const RationalSubspace& vxy = table.get(x, y);
            for (int s = 0; s < group.rank(); ++s) {
                if (group.has_descent(x, s) || group.has_descent(y, s)) continue;
                MembershipRow row;
                row.x = x;
                row.y = y;
                row.s = s;
                row.member = contains(vxy, table.v(s));
                row.x_geq_ys = group.leq(group.right_mult(y, s), x);
                row.rank2 = std::popcount(support[xi] | support[yi] | (1u << s)) <= 2;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::string dimension_csv(VTable& vtable, RTable& rtable, const std::string& timestamp) {
    const auto& group = vtable.group();
    std::ostringstream out;
    out << "# verma-ext dimension table\n";
    out << "# system: " << group.system().fingerprint() << "\n";
    out << "# generated: " << timestamp << "\n";
    out << "x_word;y_word;dimV;gj_coeff;match\n";
    const std::size_t n = group.size();
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi) {
            const auto x = static_cast<WeylGroup::Index>(xi);
            const auto y = static_cast<WeylGroup::Index>(yi);
            if (!group.leq(y, x)) continue;
            const std::size_t d = vtable.get(x, y).dim();
            const std::int64_t gj = gj_coefficient(rtable, x, y);
            out << group.word_string(x) << ';' << group.word_string(y) << ';' << d << ';' << gj << ';'
                << (static_cast<std::int64_t>(d) == gj ? "true" : "false") << '\n';
        }
    return out.str();
}

nlohmann::ordered_json subspace_export(VTable& vtable, const std::string& timestamp) {
    const auto& group = vtable.group();
    nlohmann::ordered_json doc;
    doc["system"] = group.system().fingerprint();
    doc["generated"] = timestamp;
    nlohmann::ordered_json spaces = nlohmann::ordered_json::object();
    const std::size_t n = group.size();
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi) {
            const auto x = static_cast<WeylGroup::Index>(xi);
            const auto y = static_cast<WeylGroup::Index>(yi);
            if (!group.leq(y, x)) continue;
            spaces[group.word_string(x) + "|" + group.word_string(y)] = vtable.get(x, y).to_json();
        }
    doc["subspaces"] = std::move(spaces);
    return doc;
}

} // namespace verma_ext
