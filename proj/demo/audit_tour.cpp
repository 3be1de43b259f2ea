// Library tour: build two desk-scale curves, enumerate their subgroups, and
// audit the two-source extractors over them.

#include <iostream>

#include "ecx/ecx.hpp"
#include "ecx/serialize.hpp"

int main() {
    using namespace ecx;

    // 13-point curve over F_11; the whole group is one subgroup
    PrimeField f11(11);
    Curve<PrimeField> e1(f11, f11.element(1), f11.element(6));
    auto sub = subgroup_from_generator(e1.point(f11.element(2), f11.element(7)));
    std::cout << "curve 1: " << e1.to_string() << ", subgroup order " << sub.order << "\n\n";

    for (int k = 1; k <= 3; ++k)
        std::cout << audit_report_to_text(run_audit(sub, sub, extractor_id::ext1, k, 40)) << "\n";

    // 55-point curve over F_{7^2}; two coprime subgroups give a genuine
    // two-source configuration
    ExtField f49(7, {1, 0, 1});
    Curve<ExtField> e2(f49, f49.from_base(1), f49.from_base(6));
    auto p5 = find_subgroups(e2, 5).at(0);
    auto q11 = find_subgroups(e2, 11).at(0);
    std::cout << "curve 2: " << e2.to_string() << ", subgroups of order " << p5.order << " and "
              << q11.order << "\n\n";
    std::cout << audit_report_to_text(run_audit(p5, q11, extractor_id::ext2, 1, 40));

    // character-sum side: the additive-subgroup ceiling and a bilinear sweep
    auto base = additive_span(f49, std::vector<Fq>{f49.one()});
    std::cout << "\nadditive character sum over embedded F_7: "
              << subgroup_char_sum(f49, base).value << " (ceiling 49)\n";
    double max_ratio = 0;
    for (uint64_t a = 1; a < 11; ++a)
        max_ratio = std::max(max_ratio, bilinear_sum(sub, sub, f11.element(a)).ratio);
    std::cout << "max bilinear ratio |V|/sqrt(q*r*t) over F_11 fixture: " << max_ratio << "\n";
    return 0;
}
