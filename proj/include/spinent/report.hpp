#pragma once
// Text reports: Bob's reduced state with and without post-selection, and the
// built-in self-test.

#include <iosfwd>
#include <string>
#include <vector>

#include "spinent/fermion.hpp"

namespace spinent::cli {

/// Parameter sets shown by `spinent nogo` when none are given: zero field,
/// the default barrier, a field tuned to a 75/25 post-selected split and a
/// strong-field narrow packet.
std::vector<fermion::FermionBarrierParams> default_nogo_sets();

/// For each set: post-selected and full reduced states of B and the largest
/// deviation of the full state from I/2. Throws DomainError on an empty list.
std::string run_nogo_report(const std::vector<fermion::FermionBarrierParams>& sets);

/// Closed forms against the brute-force density-matrix route, flux
/// conservation and the full-state identity. Prints one line per check.
bool run_selftest(std::ostream& out);

}  // namespace spinent::cli
