#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "entkit/errors.hpp"
#include "entkit/phase_povm.hpp"
#include "entkit/state.hpp"

namespace entkit {

enum class class_kind { w, ghz_m, ghz_m1 };

// Operator-family identifier: the kind plus the number of qubits it acts
// on. For ghz_m1 the family name carries m-1 (a GHZ3 family lives on four
// qubits) while m stays the operator size.
struct class_tag {
    class_kind kind;
    int m;

    bool operator==(const class_tag&) const = default;
};

inline class_tag w_class(int m) { return {class_kind::w, m}; }
inline class_tag ghz_class(int m) { return {class_kind::ghz_m, m}; }
inline class_tag ghz_m1_class(int m) { return {class_kind::ghz_m1, m}; }

inline void check_class_tag(class_tag tag) {
    const int min_m = tag.kind == class_kind::ghz_m1 ? 3 : 2;
    if (tag.m < min_m) throw domain_error("class needs more qubits");
}

inline std::string tag_string(class_tag tag) {
    check_class_tag(tag);
    switch (tag.kind) {
        case class_kind::w: return "W" + std::to_string(tag.m);
        case class_kind::ghz_m: return "GHZ" + std::to_string(tag.m);
        default: return "GHZ" + std::to_string(tag.m - 1);
    }
}

// Aggregation constant policy. raw keeps the plain term sum; canonical_unit
// scales so the family's reference state (W_m, GHZ_m, GHZ_{m-1} x |0>)
// comes out with aggregate exactly 1.
enum class normalization_mode { raw, canonical_unit };

inline double normalization_constant(class_tag tag, normalization_mode mode) {
    check_class_tag(tag);
    if (mode == normalization_mode::raw) return 1.0;
    switch (tag.kind) {
        case class_kind::w:
            return tag.m / (2.0 * (tag.m - 1));
        case class_kind::ghz_m:
            return 2.0 / (static_cast<double>(tag.m) * (tag.m - 1));
        default:
            return 1.0;
    }
}

// The reduced family fixes one identity qubit. paper emits one operator per
// excluded qubit (the two lowest remaining indices carry the y factors);
// full enumerates every y-pair inside the active set.
enum class ghz_m1_enumeration { paper, full };

namespace detail {

inline std::string subscript_pair(int r1, int r2) {
    return "Q_{" + std::to_string(r1) + "," + std::to_string(r2) + "}";
}

// Subscript in the reduced-family style: y indices run together, then a
// comma and the x indices ("Q_{12,3}"). No x part at m=3.
inline std::string subscript_grouped(const std::vector<int>& ys,
                                     const std::vector<int>& xs) {
    std::string s = "Q_{";
    for (int r : ys) s += std::to_string(r);
    if (!xs.empty()) {
        s += ',';
        for (int r : xs) s += std::to_string(r);
    }
    return s + "}";
}

inline phase_operator pair_op(int m, int r1, int r2, qubit_setting fill,
                              const std::string& tag) {
    std::vector<qubit_setting> settings(m, fill);
    settings[r1 - 1] = qubit_setting::half_pi;
    settings[r2 - 1] = qubit_setting::half_pi;
    phase_operator op = tensor_operator(settings);
    op.label = tag + " " + subscript_pair(r1, r2);
    op.indices = {r1, r2};
    return op;
}

inline phase_operator reduced_op(int m, int excluded, int y1, int y2,
                                 const std::string& tag) {
    std::vector<qubit_setting> settings(m, qubit_setting::pi);
    settings[excluded - 1] = qubit_setting::identity;
    settings[y1 - 1] = qubit_setting::half_pi;
    settings[y2 - 1] = qubit_setting::half_pi;
    phase_operator op = tensor_operator(settings);
    std::vector<int> xs;
    for (int r = 1; r <= m; ++r)
        if (r != excluded && r != y1 && r != y2) xs.push_back(r);
    op.label = tag + " " + subscript_grouped({y1, y2}, xs);
    op.indices = {y1, y2};
    op.indices.insert(op.indices.end(), xs.begin(), xs.end());
    return op;
}

} // namespace detail

/// One operator per pair r1<r2: sigma_y at the pair, identity elsewhere.
inline std::vector<phase_operator> enumerate_w_ops(int m) {
    check_class_tag(w_class(m));
    std::vector<phase_operator> ops;
    for (int r1 = 1; r1 <= m; ++r1)
        for (int r2 = r1 + 1; r2 <= m; ++r2)
            ops.push_back(detail::pair_op(m, r1, r2, qubit_setting::identity,
                                          tag_string(w_class(m))));
    return ops;
}

/// One operator per pair r1<r2: sigma_y at the pair, sigma_x elsewhere.
inline std::vector<phase_operator> enumerate_ghz_m_ops(int m) {
    check_class_tag(ghz_class(m));
    std::vector<phase_operator> ops;
    for (int r1 = 1; r1 <= m; ++r1)
        for (int r2 = r1 + 1; r2 <= m; ++r2)
            ops.push_back(detail::pair_op(m, r1, r2, qubit_setting::pi,
                                          tag_string(ghz_class(m))));
    return ops;
}

/// One identity qubit (the exclusion), sigma_y on two of the rest, sigma_x
/// on the remainder. paper mode pins the y pair to the two smallest active
/// indices and walks the exclusion from qubit m down to 1; at m=4 the order
/// comes out Q_{12,3}, Q_{12,4}, Q_{13,4}, Q_{23,4}.
inline std::vector<phase_operator> enumerate_ghz_m1_ops(
    int m, ghz_m1_enumeration mode = ghz_m1_enumeration::paper) {
    check_class_tag(ghz_m1_class(m));
    const std::string tag = tag_string(ghz_m1_class(m));
    std::vector<phase_operator> ops;
    for (int excluded = m; excluded >= 1; --excluded) {
        std::vector<int> active;
        for (int r = 1; r <= m; ++r)
            if (r != excluded) active.push_back(r);
        if (mode == ghz_m1_enumeration::paper) {
            ops.push_back(detail::reduced_op(m, excluded, active[0], active[1], tag));
        } else {
            for (std::size_t i = 0; i < active.size(); ++i)
                for (std::size_t j = i + 1; j < active.size(); ++j)
                    ops.push_back(detail::reduced_op(m, excluded, active[i],
                                                     active[j], tag));
        }
    }
    return ops;
}

/// |<s| O |conj(s)>|^2, the building block every class aggregate sums.
inline double pair_term(const pure_state& s, const phase_operator& op) {
    if (op.matrix.rows() != s.amplitudes().dim())
        throw shape_error("operator dimension does not match state");
    const pure_state c = conjugate_state(s);
    const cplx bracket = inner(s, matvec(op.matrix, c.amplitudes()));
    return std::norm(bracket);
}

inline std::vector<phase_operator> class_operators(
    class_tag tag, ghz_m1_enumeration mode = ghz_m1_enumeration::paper) {
    switch (tag.kind) {
        case class_kind::w: return enumerate_w_ops(tag.m);
        case class_kind::ghz_m: return enumerate_ghz_m_ops(tag.m);
        default: return enumerate_ghz_m1_ops(tag.m, mode);
    }
}

/// sqrt(constant * sum of pair terms) over the family's operators.
inline double class_concurrence(const pure_state& s, class_tag tag,
                                normalization_mode policy,
                                ghz_m1_enumeration mode = ghz_m1_enumeration::paper) {
    if (tag.m != s.num_qubits())
        throw shape_error("class tag qubit count does not match state");
    double sum = 0.0;
    for (const phase_operator& op : class_operators(tag, mode))
        sum += pair_term(s, op);
    return std::sqrt(normalization_constant(tag, policy) * sum);
}

struct term_entry {
    std::vector<int> idx;
    std::string label;
    double value = 0.0;
};

struct class_report {
    class_tag tag;
    std::vector<term_entry> terms;
    double aggregate = 0.0;
    bool nonzero = false;
};

// Full classification result. consistent compares the W-family verdict
// ("aggregate below tolerance") with the independent separability oracle;
// the two are expected to agree for product states but provably disagree
// for some entangled ones (GHZ_3 being the standard counterexample).
struct concurrence_report {
    pure_state state;
    double tolerance = 1e-10;
    normalization_mode policy = normalization_mode::canonical_unit;
    ghz_m1_enumeration enumeration = ghz_m1_enumeration::paper;
    std::vector<class_report> classes;
    bool oracle_separable = false;
    bool consistent = false;
    std::string note;

    const class_report& for_tag(class_tag tag) const {
        for (const class_report& c : classes)
            if (c.tag == tag) return c;
        throw domain_error("no report entry for class " + tag_string(tag));
    }
};

inline concurrence_report classify(
    const pure_state& s, double tol = 1e-10,
    normalization_mode policy = normalization_mode::canonical_unit,
    ghz_m1_enumeration mode = ghz_m1_enumeration::paper) {
    const int m = s.num_qubits();
    if (m < 2) throw domain_error("classification needs at least two qubits");
    if (!(tol > 0.0)) throw domain_error("tolerance must be positive");

    concurrence_report rep{s, tol, policy, mode, {}, false, false, {}};
    std::vector<class_tag> tags = {w_class(m), ghz_class(m)};
    if (m >= 3) tags.push_back(ghz_m1_class(m));

    for (class_tag tag : tags) {
        class_report cr{tag, {}, 0.0, false};
        double sum = 0.0;
        for (const phase_operator& op : class_operators(tag, mode)) {
            const double v = pair_term(s, op);
            cr.terms.push_back({op.indices, op.label, v});
            sum += v;
        }
        cr.aggregate = std::sqrt(normalization_constant(tag, policy) * sum);
        cr.nonzero = cr.aggregate > tol;
        rep.classes.push_back(std::move(cr));
    }

    rep.oracle_separable = is_fully_separable(s, tol);
    const bool w_zero = !rep.classes.front().nonzero;
    rep.consistent = (w_zero == rep.oracle_separable);
    if (m == 2)
        rep.note = "W2 and GHZ2 families coincide at two qubits";
    return rep;
}

} // namespace entkit
