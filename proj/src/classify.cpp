#include "supercurve/oneform.hpp"
#include "supercurve/vectorfield.hpp"

namespace supercurve {

FieldClass classify(const VectorField& X) {
    FieldClass c;
    c.in_S1N = sdiv(X).is_zero();
    if (X.sig.N == 2) {
        SuperElement g = apply(X, SuperElement::even_var(X.sig));
        c.in_S2 = c.in_S1N && g.d_odd(1).d_odd(0).is_zero();
    }
    if (X.is_homogeneous()) {
        c.k_multiplier = k_multiplier(X);
        c.in_K1N = c.k_multiplier.has_value();
    }
    return c;
}

} // namespace supercurve
