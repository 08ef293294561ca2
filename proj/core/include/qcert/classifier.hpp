#pragma once

/**
 * @file classifier.hpp
 * @brief Nine-way classification of how the conics A1 and A2 meet.
 *
 * Two independent routes produce the case number:
 *
 *  - classify_case() looks only at the roots of g(lambda) = det M(lambda),
 *    their multiplicities, and where they sit relative to a3^2/4;
 *  - quartic_root_nature() factors f(t, 1) and counts real/complex roots by
 *    multiplicity, then maps the pattern through case_from_nature().
 *
 * Both are exact; agreement between them is the main correctness check.
 */

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qcert/forms.hpp"
#include "qcert/pencil.hpp"
#include "qcert/poly.hpp"

namespace qcert {

/// A root profile that matches no row of the classification table.
class ClassificationDefect : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One real root of g with its multiplicity. `factor` is the square-free
/// factor of g that vanishes there and `interval` isolates it for `factor`.
struct CubicRealRoot {
    int multiplicity = 1;
    std::optional<Rational> exact;
    RootInterval interval;
    Polynomial factor;
};

struct CubicRootProfile {
    std::vector<CubicRealRoot> real_roots; ///< ascending
    bool conjugate_pair = false;

    int total_multiplicity() const;
    std::vector<std::pair<Rational, int>> rational_roots() const;
    /// Number of distinct real irrational roots.
    int irrational_real_count() const;
};

CubicRootProfile cubic_root_profile(const PencilCubic& p);

/// Exact sign of (root - value).
int compare_root(const CubicRealRoot& root, const Rational& value);

struct IntersectionCase {
    int id = 0;
    std::string_view description;
};

/// Nature of the common points for case 1..9.
std::string_view case_description(int case_id);

IntersectionCase classify_case(const MonicQuartic& m);
IntersectionCase classify_case(const MonicQuartic& m, const CubicRootProfile& profile);

/// Projective roots (x:y) of f grouped by multiplicity.
struct QuarticRootNature {
    int real_simple = 0;
    int real_double = 0;
    int real_triple = 0;
    int real_quadruple = 0;
    int complex_simple_pairs = 0;
    int complex_double_pairs = 0;

    int total_multiplicity() const {
        return real_simple + 2 * real_double + 3 * real_triple + 4 * real_quadruple +
               2 * complex_simple_pairs + 4 * complex_double_pairs;
    }

    friend bool operator==(const QuarticRootNature&, const QuarticRootNature&) = default;
};

QuarticRootNature quartic_root_nature(const MonicQuartic& m);

/// Case number for a root nature; throws ClassificationDefect if the
/// multiplicities do not describe a real quartic.
int case_from_nature(const QuarticRootNature& nature);

/// Checks the (lambda0, g(lambda0)) facts listed for `case_id`.
bool lambda0_facts_hold(int case_id, const MonicQuartic& m);

enum class MemberKind { nondegenerate, real_line_pair, conjugate_line_pair, repeated_line, zero };

std::string_view to_string(MemberKind kind);

/// Type of the conic M(lambda) for rational lambda.
struct DegenerateMember {
    int rank = 3;
    MemberKind kind = MemberKind::nondegenerate;
};

DegenerateMember classify_member(const MonicQuartic& m, const Rational& lambda);

/// Checks that every rational root of g obeys the line-pair bounds: a real
/// line-pair sits at or below a3^2/4, a conjugate line-pair at or above it,
/// and a repeated line occurs exactly at a3^2/4 with multiplicity >= 2.
/// Irrational roots are skipped. Returns false on the first violation.
bool degenerate_member_lemmas_hold(const MonicQuartic& m, const CubicRootProfile& profile);

} // namespace qcert
