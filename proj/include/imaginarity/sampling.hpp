#ifndef IMAGINARITY_SAMPLING_HPP
#define IMAGINARITY_SAMPLING_HPP

#include <cstdint>

#include "imaginarity/channels.hpp"
#include "imaginarity/states.hpp"
#include "imaginarity/types.hpp"

namespace imaginarity {

// Deterministic samplers for test harnesses; all take explicit seeds and keep
// no hidden RNG state.

// CPTP channel from a complex Ginibre Choi, trace-normalized by the symmetric
// sandwich J <- (I (x) M^{-1/2}) J (I (x) M^{-1/2}), M = Tr_A J, iterated to
// convergence.  Throws after 200 iterations without convergence.
Channel sample_channel(Index dim, std::uint64_t seed);

// Same construction from a real Ginibre matrix; realness is preserved at
// every step, so the result has a real Choi matrix.
Channel sample_real_choi_channel(Index dim, std::uint64_t seed);

PureState sample_pure_state(Index dim, std::uint64_t seed);
DensityMatrix sample_density_matrix(Index dim, std::uint64_t seed);
DensityMatrix sample_real_density_matrix(Index dim, std::uint64_t seed);

// Haar unitary via phase-fixed QR of a complex Ginibre matrix.
ComplexMatrix sample_haar_unitary(Index dim, std::uint64_t seed);

// Haar real orthogonal via sign-fixed QR of a real Ginibre matrix.
RealMatrix sample_real_orthogonal(Index dim, std::uint64_t seed);

}  // namespace imaginarity

#endif  // IMAGINARITY_SAMPLING_HPP
