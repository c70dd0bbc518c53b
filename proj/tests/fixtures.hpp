#ifndef BISIS_TESTS_FIXTURES_HPP
#define BISIS_TESTS_FIXTURES_HPP

#include "bisis/types.hpp"

namespace bisis::fixtures {

inline Params make(double b1, double b2, double d1, double d2, double r1, double r2, double c1,
                   double c2, double cD, double q, Variant variant = Variant::Standard) {
    Params p;
    p.beta1 = b1; p.beta2 = b2;
    p.delta1 = d1; p.delta2 = d2;
    p.r1 = r1; p.r2 = r2;
    p.c1 = c1; p.c2 = c2;
    p.cD = cD; p.q = q;
    p.variant = variant;
    return p;
}

// The published simulation studies. fig7's parameters are not fixed here;
// they come from the deterministic search in the scenarios module.
inline Params fig1() { return make(0.8, 0.7, 0.4, 0.4, 3, 3, 9, 9, 1, 0.5); }
inline Params fig2() { return make(0.9, 0.6, 0.2, 0.2, 0.2, 0.1, 0.6, 0.6, 0.5, 0.5); }
inline Params fig3() { return make(2, 0.3, 0.1, 0.6, 0.6, 0.4, 0.5, 0.5, 0.4, 0.3); }
inline Params fig4() { return make(0.7, 0.1, 0.3, 0.6, 1, 1, 0.6, 1.5, 0.5, 0.6); }
inline Params fig5() { return make(0.4, 0.4, 0.2, 0.2, 1, 2, 4, 4, 2, 0.8); }
inline Params fig6() { return make(0.4, 0.4, 0.2, 0.2, 1, 2, 4, 4, 0.1, 0.8); }
inline Params fig8() {
    return make(0.8, 0.8, 0.1, 0.1, 1.1, 1.1, 0.2, 0.3, 1, 0.1, Variant::Coordination);
}
inline Params fig8b() {
    return make(0.9, 0.8, 0.1, 0.1, 1.1, 1.1, 0.2, 0.3, 1, 0.1, Variant::Coordination);
}

}  // namespace bisis::fixtures

#endif
