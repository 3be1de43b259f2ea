// Extractor-backed key agreement and the demo stream built on top of it.

#include <iostream>

#include "ecx/ecx.hpp"
#include "ecx/serialize.hpp"

int main() {
    using namespace ecx;

    PrimeField f11(11);
    Curve<PrimeField> curve(f11, f11.element(1), f11.element(6));
    auto G = curve.point(f11.element(2), f11.element(7));

    auto tr = dh_derive(G, 3, 5, 2, dh_mode::two_source);
    std::cout << transcript_to_json(tr).dump(2) << "\n";

    auto sub = subgroup_from_generator(G);
    auto st = make_prng(sub, sub, 3);
    BitPacker packer;
    std::cout << "\nstream: ";
    for (int i = 0; i < 16; ++i) {
        auto [bits, next] = prng_next(std::move(st));
        st = std::move(next);
        std::cout << bits.to_binary_string() << " ";
        packer.append(bits);
    }
    std::cout << "\npacked bytes:";
    for (uint8_t b : packer.finish()) std::printf(" %02x", b);
    std::cout << "\nskipped identity sums: " << st.skipped << "\n";
    return 0;
}
