#include "qcert/classifier.hpp"

#include <algorithm>
#include <string>

namespace qcert {

namespace {

constexpr std::array<std::string_view, 10> kDescriptions = {
    "",
    "four real simple points",
    "two pairs of complex conjugate simple points",
    "two real simple points + a pair of complex conjugate simple points",
    "two real simple points + a real double point (simple-contact)",
    "a pair of complex conjugate simple points + a real double point (simple-contact)",
    "two real double points (double contact)",
    "a pair of complex conjugate double points (double contact)",
    "a real simple point + a triple point (three-point contact)",
    "a quadruple point (four-point contact)",
};

// Exact sign of (a - b) for roots of coprime square-free factors (or equal
// rationals). Refines the isolating intervals in place.
int compare_roots(CubicRealRoot& a, CubicRealRoot& b) {
    for (;;) {
        if (a.exact && b.exact) {
            return *a.exact == *b.exact ? 0 : (*a.exact < *b.exact ? -1 : 1);
        }
        if (b.exact) {
            return compare_root(a, *b.exact);
        }
        if (a.exact) {
            return -compare_root(b, *a.exact);
        }
        if (a.interval.hi <= b.interval.lo) {
            return -1;
        }
        if (b.interval.hi <= a.interval.lo) {
            return 1;
        }
        bisect(a.factor, a.interval);
        bisect(b.factor, b.interval);
        if (a.interval.is_exact()) {
            a.exact = a.interval.lo;
        }
        if (b.interval.is_exact()) {
            b.exact = b.interval.lo;
        }
    }
}

IntersectionCase make_case(int id) { return {id, kDescriptions.at(static_cast<std::size_t>(id))}; }

[[noreturn]] void defect(const MonicQuartic& m, const std::string& what) {
    throw ClassificationDefect("no intersection case matches form " + to_string(m) + ": " + what);
}

} // namespace

int CubicRootProfile::total_multiplicity() const {
    int total = conjugate_pair ? 2 : 0;
    for (const auto& r : real_roots) {
        total += r.multiplicity;
    }
    return total;
}

std::vector<std::pair<Rational, int>> CubicRootProfile::rational_roots() const {
    std::vector<std::pair<Rational, int>> out;
    for (const auto& r : real_roots) {
        if (r.exact) {
            out.emplace_back(*r.exact, r.multiplicity);
        }
    }
    return out;
}

int CubicRootProfile::irrational_real_count() const {
    return static_cast<int>(std::count_if(real_roots.begin(), real_roots.end(),
                                          [](const CubicRealRoot& r) { return !r.exact; }));
}

CubicRootProfile cubic_root_profile(const PencilCubic& p) {
    CubicRootProfile profile;
    const auto factors = square_free_decomposition(as_polynomial(p));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Polynomial& h = factors[k];
        if (h.degree() <= 0) {
            continue;
        }
        const auto intervals = isolate_real_roots(h);
        if (static_cast<int>(intervals.size()) < h.degree()) {
            profile.conjugate_pair = true;
        }
        for (const auto& interval : intervals) {
            CubicRealRoot root;
            root.multiplicity = static_cast<int>(k) + 1;
            root.interval = interval;
            root.factor = h;
            root.exact = rational_root_in(h, interval);
            if (root.exact) {
                root.interval = {*root.exact, *root.exact};
            }
            profile.real_roots.push_back(std::move(root));
        }
    }
    // At most three roots: insertion sort with exact comparisons.
    auto& roots = profile.real_roots;
    for (std::size_t i = 1; i < roots.size(); ++i) {
        for (std::size_t j = i; j > 0 && compare_roots(roots[j - 1], roots[j]) > 0; --j) {
            std::swap(roots[j - 1], roots[j]);
        }
    }
    return profile;
}

int compare_root(const CubicRealRoot& root, const Rational& value) {
    if (root.exact) {
        return *root.exact == value ? 0 : (*root.exact < value ? -1 : 1);
    }
    const auto& [lo, hi] = root.interval;
    if (value <= lo) {
        return 1;
    }
    if (value >= hi) {
        return -1;
    }
    const int at_value = root.factor(value).sign();
    if (at_value == 0) {
        return 0;
    }
    // The single root lies in (lo, value) iff the factor changes sign there.
    return at_value != root.factor(lo).sign() ? -1 : 1;
}

std::string_view case_description(int case_id) {
    if (case_id < 1 || case_id > 9) {
        throw std::out_of_range("case id must be in 1..9");
    }
    return kDescriptions[static_cast<std::size_t>(case_id)];
}

IntersectionCase classify_case(const MonicQuartic& m) {
    return classify_case(m, cubic_root_profile(pencil_coeffs(m)));
}

IntersectionCase classify_case(const MonicQuartic& m, const CubicRootProfile& profile) {
    const Rational threshold = minor_threshold(m);
    const auto& roots = profile.real_roots;
    const auto cmp = [&](std::size_t i) { return compare_root(roots[i], threshold); };

    if (profile.total_multiplicity() != 3) {
        defect(m, "root multiplicities do not sum to 3");
    }
    if (profile.conjugate_pair) {
        if (roots.size() != 1 || cmp(0) > 0) {
            defect(m, "real root of a conjugate-pair profile exceeds a3^2/4");
        }
        return make_case(3);
    }
    if (roots.size() == 3) {
        const int c1 = cmp(0);
        const int c2 = cmp(1);
        const int c3 = cmp(2);
        if (c3 <= 0) {
            return make_case(1);
        }
        if ((c1 <= 0 && c2 > 0) || (c1 < 0 && c2 >= 0)) {
            return make_case(2);
        }
        defect(m, "three distinct real roots in an unlisted position");
    }
    if (roots.size() == 2) {
        const bool double_first = roots[0].multiplicity == 2;
        const int c_double = cmp(double_first ? 0 : 1);
        const int c_simple = cmp(double_first ? 1 : 0);
        if (double_first) {
            // lambda1 = lambda2 < lambda3
            if (c_simple <= 0) {
                return make_case(4);
            }
            if (c_double == 0) {
                return make_case(7);
            }
        } else {
            // lambda1 < lambda2 = lambda3
            if (c_double < 0) {
                return make_case(4);
            }
            if (c_double == 0) {
                return make_case(6);
            }
            if (c_simple <= 0) {
                return make_case(5);
            }
        }
        defect(m, "double root in an unlisted position");
    }
    const int c = cmp(0);
    if (c < 0) {
        return make_case(8);
    }
    if (c == 0) {
        return make_case(9);
    }
    defect(m, "triple root above a3^2/4");
}

QuarticRootNature quartic_root_nature(const MonicQuartic& m) {
    QuarticRootNature nature;
    const auto factors = square_free_decomposition(dehomogenize(m));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Polynomial& h = factors[k];
        if (h.degree() <= 0) {
            continue;
        }
        const int real = count_real_roots(h);
        const int pairs = (h.degree() - real) / 2;
        switch (k + 1) {
        case 1:
            nature.real_simple += real;
            nature.complex_simple_pairs += pairs;
            break;
        case 2:
            nature.real_double += real;
            nature.complex_double_pairs += pairs;
            break;
        case 3:
            nature.real_triple += real;
            break;
        default:
            nature.real_quadruple += real;
            break;
        }
    }
    return nature;
}

int case_from_nature(const QuarticRootNature& n) {
    struct Row {
        QuarticRootNature nature;
        int id;
    };
    static const std::array<Row, 9> rows = {{
        {{4, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 2, 0}, 2},
        {{2, 0, 0, 0, 1, 0}, 3},
        {{2, 1, 0, 0, 0, 0}, 4},
        {{0, 1, 0, 0, 1, 0}, 5},
        {{0, 2, 0, 0, 0, 0}, 6},
        {{0, 0, 0, 0, 0, 1}, 7},
        {{1, 0, 1, 0, 0, 0}, 8},
        {{0, 0, 0, 1, 0, 0}, 9},
    }};
    for (const auto& row : rows) {
        if (row.nature == n) {
            return row.id;
        }
    }
    throw ClassificationDefect("root nature does not describe a real quartic");
}

bool lambda0_facts_hold(int case_id, const MonicQuartic& m) {
    const PencilCubic cubic = pencil_coeffs(m);
    const CriticalParam lambda0 = critical_param(cubic);
    if (!lambda0.is_real()) {
        return case_id == 3;
    }
    const QuadExt& l0 = *lambda0.value;
    const int vs_threshold = (l0 - QuadExt(minor_threshold(m))).sign();
    const int g_sign = g_eval(cubic, l0).sign();
    switch (case_id) {
    case 1:
        return vs_threshold < 0 && g_sign > 0;
    case 2:
    case 7:
        return vs_threshold > 0 && g_sign > 0;
    case 3:
        return vs_threshold < 0 || g_sign < 0;
    case 4:
        return vs_threshold < 0 && g_sign >= 0;
    case 5:
        return vs_threshold > 0 && g_sign == 0;
    case 6:
    case 9:
        return vs_threshold == 0 && g_sign == 0;
    case 8:
        return vs_threshold < 0 && g_sign == 0;
    default:
        return false;
    }
}

std::string_view to_string(MemberKind kind) {
    switch (kind) {
    case MemberKind::nondegenerate:
        return "nondegenerate";
    case MemberKind::real_line_pair:
        return "real line-pair";
    case MemberKind::conjugate_line_pair:
        return "complex conjugate line-pair";
    case MemberKind::repeated_line:
        return "real repeated line";
    case MemberKind::zero:
        return "zero";
    }
    return "";
}

DegenerateMember classify_member(const MonicQuartic& m, const Rational& lambda) {
    const auto M = pencil_matrix(m, lambda);
    if (!M.det().is_zero()) {
        return {3, MemberKind::nondegenerate};
    }
    bool rank_two = false;
    for (int r1 = 0; r1 < 3 && !rank_two; ++r1) {
        for (int r2 = r1 + 1; r2 < 3 && !rank_two; ++r2) {
            for (int c1 = 0; c1 < 3 && !rank_two; ++c1) {
                for (int c2 = c1 + 1; c2 < 3 && !rank_two; ++c2) {
                    rank_two = !(M.at(r1, c1) * M.at(r2, c2) - M.at(r1, c2) * M.at(r2, c1)).is_zero();
                }
            }
        }
    }
    if (rank_two) {
        // Eigenvalues (alpha, beta, 0): alpha * beta is the sum of the 2x2 principal minors.
        const auto m2 = M.minors2();
        const Rational product = m2[0] + m2[1] + m2[2];
        return {2, product.sign() > 0 ? MemberKind::conjugate_line_pair : MemberKind::real_line_pair};
    }
    // m11 = 1, so the matrix is never zero.
    return {1, MemberKind::repeated_line};
}

bool degenerate_member_lemmas_hold(const MonicQuartic& m, const CubicRootProfile& profile) {
    const Rational threshold = minor_threshold(m);
    for (const auto& root : profile.real_roots) {
        if (!root.exact) {
            continue;
        }
        const Rational& lambda = *root.exact;
        const DegenerateMember member = classify_member(m, lambda);
        const bool repeated_expected = lambda == threshold && root.multiplicity >= 2;
        switch (member.kind) {
        case MemberKind::real_line_pair:
            if (member.rank != 2 || lambda > threshold || repeated_expected) {
                return false;
            }
            break;
        case MemberKind::conjugate_line_pair:
            if (member.rank != 2 || lambda < threshold || repeated_expected) {
                return false;
            }
            break;
        case MemberKind::repeated_line:
            if (member.rank != 1 || !repeated_expected) {
                return false;
            }
            break;
        default:
            return false;
        }
    }
    return true;
}

} // namespace qcert
