#pragma once

#include <iosfwd>
#include <string>

#include "amitsur/field_tower.hpp"

namespace amitsur {

// Plain-text tower description. One record per line, '#' starts a comment:
//
//   name s3
//   characteristic 0            (0 for Q, otherwise a prime p)
//   basis 1 z c zc c2 zc2       (basis element 0 must be the identity)
//   n 3 | m 2 | r 2 | t 2 | s 1
//   mul i j k v                 coefficient of e_k in e_i * e_j
//   sigma i j v                 coefficient of e_i in sigma(e_j)
//   tau i j v                   coefficient of e_i in tau(e_j)
//   b i v                       coordinate i of b
//   lambda i v                  coordinate i of lambda
//
// Values are exact rationals written "p/q" or "p". Entries not listed are 0.

TowerData parse_tower(std::istream& in);
FieldTower load_tower(std::istream& in);
FieldTower load_tower_file(const std::string& path);

// Writes every nonzero entry in the format above; parse_tower reads it back exactly.
void write_tower(std::ostream& out, const FieldTower& tower);

}  // namespace amitsur
