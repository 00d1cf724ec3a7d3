#pragma once

#include <vector>

namespace hankelkit {

/// Constants of the AGM splitting for order-m, n = 3 truncated tensors with
/// v_0 = v_{2m}. Index p runs 1..m/2 and is stored at position p - 1.
///
/// For each p: Delta(p)^{2p/m} * delta(p)^{(m-2p)/m} = binom(m,p) binom(m-p,m-2p),
/// and sum_p ((m-2p)/m) delta(p) < 1. Any v_0 >= bound * v_m admits the
/// squares-plus-diagonal-minus-tail decomposition.
struct TruncatedSosBound {
    int order = 0;
    std::vector<double> delta;
    std::vector<double> big_delta;
    std::vector<double> pair_coefficient;  // binom(m,p) binom(m-p,m-2p)
    double delta_weight_sum = 0.0;          // sum_p ((m-2p)/m) delta(p)
    double bound = 0.0;                     // sum_p (p/m) Delta(p)
};

/// Default delta(p) = m / (2 (m-2p)(k-1)) for p < k = m/2 and delta(k) = 1,
/// which makes the weighted delta sum exactly 1/2.
TruncatedSosBound truncated_sos_bound(int order);

}  // namespace hankelkit
