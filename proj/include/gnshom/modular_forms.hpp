#pragma once

#include <stdexcept>

namespace gnshom {

// Dimensions of the weight-k spaces of classical modular forms (M_k) and cusp
// forms (S_k) for SL_2(Z).
struct FormDims {
    int weight = 0;
    int dim_full = 0;
    int dim_cusp = 0;

    friend bool operator==(const FormDims&, const FormDims&) = default;
};

// The full space is the weight-k slice of the polynomial algebra on the two
// generators of weight 4 and 6, so dim M_k counts lattice points 4a + 6b = k.
// Cusp forms have codimension 1 whenever the full space is nonzero and the
// weight is at least 4.  Weight 0 counts the constants (dim 1, no cusp form).
inline FormDims modular_dims(int k) {
    if (k < 0) throw std::invalid_argument("modular_dims: negative weight");
    FormDims f;
    f.weight = k;
    for (int a = 0; 4 * a <= k; ++a)
        if ((k - 4 * a) % 6 == 0) ++f.dim_full;
    f.dim_cusp = (f.dim_full >= 1 && k >= 4) ? f.dim_full - 1 : 0;
    return f;
}

}  // namespace gnshom
