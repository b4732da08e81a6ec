#pragma once

#include "covseq/core.hpp"

namespace covseq {

/// Folds an (mn,R)-CS row by row into an M x (2n-1) array; row j holds
/// 2n-1 consecutive symbols starting at position j*n. If n does not divide
/// the length, the seed is first extended by its own first eps symbols with
/// minimal eps >= 0 reaching divisibility. Result is an (m x n, R)-C2DS.
TorusArray fold(const CyclicSequence& s, int m, int n, int radius);

/// Row i is the seed rotated left by i(i+1)/2 mod k; for even k an extra
/// row duplicates row k-1. A (2 x n, 2R)-C2DS from an (n,R)-CS.
TorusArray triangular_shift_array(const CyclicSequence& s, int n, int radius);

/// k^{m-1} rows; row i is shifted t_i positions relative to row i-1 where
/// t is the span-(m-1) de Bruijn sequence over the shift alphabet of size k.
/// An (m x n, mR)-C2DS from an (n,R)-CS.
TorusArray debruijn_shift_array(const CyclicSequence& s, int n, int radius, int m);

}  // namespace covseq
