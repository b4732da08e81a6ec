#pragma once

#include "covseq/core.hpp"

namespace covseq {

/// Replaces every codeword by its minimal-period representative.
/// The combined window set is unchanged.
SequenceCode reduce_periodic(const SequenceCode& code);

/// The cyclic sequence written linearly, followed by its own first
/// n-1+eps symbols: the length-n substrings of the result (eps = 0) are
/// exactly the cyclic n-windows of s.
std::string acyclic_extension(const CyclicSequence& s, int n, int eps);

/// Largest t <= cap such that the length-t suffix of a equals the
/// length-t prefix of b.
int max_overlap(const std::string& a, const std::string& b, int cap);

/// Greedy cyclic-superstring assembly: reduces periodicity, considers every
/// rotation of every codeword (acyclically extended by n-1 symbols) and
/// repeatedly joins the cluster pair of maximum suffix/prefix overlap,
/// locking one rotation per codeword; ties broken by lexicographically least
/// joined string. The closing wraparound overlap is applied once.
/// Guarantees: the output's n-window set contains every n-window of the
/// input, and |output| <= sum(k_i + n - 1).
CyclicSequence greedy_merge(const SequenceCode& code);

}  // namespace covseq
