#pragma once

#include <cstdint>
#include <vector>

#include "enh/elimination.hpp"
#include "enh/smith.hpp"

namespace enh {

struct homology_dims_result {
    std::int64_t free_rank = 0;
    std::vector<integer> torsion;  // empty over a field
};

// Homology at the middle term of C_in --d_in--> C --d_out--> C_out over a
// field. Both matrices are rechecked to compose to zero before any rank is
// trusted.
template <class F>
homology_dims_result homology_dims(const F& field,
                                   const sparse_matrix<typename F::scalar>& d_in,
                                   const sparse_matrix<typename F::scalar>& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("homology_dims: chain dimension mismatch");
    if (!d_out.multiply(d_in).is_zero())
        throw internal_invariant_error("homology_dims: d_out * d_in != 0");
    const int ambient = d_out.cols();
    homology_dims_result res;
    res.free_rank = (ambient - field_rank(field, d_out)) - field_rank(field, d_in);
    return res;
}

inline homology_dims_result homology_dims_z(const sparse_matrix<integer>& d_in,
                                            const sparse_matrix<integer>& d_out,
                                            int column_bound = kDefaultSnfColumnBound) {
    if (!d_out.multiply(d_in).is_zero())
        throw internal_invariant_error("homology_dims: d_out * d_in != 0");
    auto r = integer_homology(d_in, d_out, column_bound);
    return {r.free_rank, std::move(r.torsion)};
}

}  // namespace enh
