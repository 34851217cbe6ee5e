// Builds block gates from target coefficients, applies them to the uniform
// superposition, and reports which entanglement family the output lands in.

#include <cstdio>
#include <vector>

#include "entkit/entkit.hpp"

using namespace entkit;

namespace {

void drive(const char* name, int m, const std::vector<cplx>& alphas,
           class_tag tag) {
    const entangler_verification v = verify_entangler(m, alphas, tag);
    std::printf("%s: unitary=%s, %s aggregate %s, condition %s\n", name,
                v.entangler.unitary ? "yes" : "no", tag_string(tag).c_str(),
                fmt_double(v.report.for_tag(tag).aggregate).c_str(),
                v.condition_holds ? "holds" : "fails");
}

} // namespace

int main() {
    std::printf("block gates driven through H|0> on every qubit\n\n");

    drive("identity m=2 ", 2, std::vector<cplx>(4, 1.0), w_class(2));
    drive("CZ       m=2 ", 2, {1.0, 1.0, 1.0, -1.0}, w_class(2));

    std::vector<cplx> cccz(16, 1.0);
    cccz.back() = -1.0;
    drive("CCCZ     m=4 ", 4, cccz, ghz_class(4));

    // a non-gate coefficient list still classifies, it just is not unitary
    const entangler_matrix lossy = build_entangler(
        2, {1.0, 0.0, 0.0, 0.0}, entangler_branch::diagonal_blocks, false);
    const pure_state out = apply_entangler(lossy);
    std::printf("lossy    m=2 : unitary=%s, renormalized output |00> amplitude %s\n",
                lossy.unitary ? "yes" : "no",
                fmt_double(out.amplitude(0).real()).c_str());
    return 0;
}
