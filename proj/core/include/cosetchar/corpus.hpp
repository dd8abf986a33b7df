#pragma once

#include <string>
#include <vector>

#include "cosetchar/group_io.hpp"

namespace cosetchar::corpus {

// Small groups with a distinguished normal subgroup, as permutation or
// matrix group specs. N defaults to the trivial subgroup unless stated.

GroupSpec cyclic(std::size_t n);                 // C_n, N = trivial
GroupSpec cyclic_with_subgroup(std::size_t n, std::size_t index);  // C_n > C_(n/index)
GroupSpec symmetric3_alternating();              // S3 > A3
GroupSpec symmetric3_transposition();            // S3 > <(0 1)>, not normal
GroupSpec dihedral8_rotations();                 // D4 > C4
GroupSpec dihedral8_klein();                     // D4 > V4
GroupSpec quaternion_center();                   // Q8 > Z(Q8) = C2
GroupSpec quaternion_cyclic();                   // Q8 > <i> = C4
GroupSpec alternating4_klein();                  // A4 > V4
GroupSpec symmetric4_alternating();              // S4 > A4
GroupSpec frobenius20();                         // F5 = C5 x| C4 > C5
MatrixGroupSpec gl2_sl2(std::uint64_t p);        // GL2(F_p) > SL2(F_p)

struct Entry {
  std::string name;
  GroupSpec spec;
};

/// The (G, N) pairs exercised by the property suite.
std::vector<Entry> property_corpus();

}  // namespace cosetchar::corpus
