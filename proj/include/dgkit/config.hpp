#pragma once

#include <cstddef>
#include <cstdint>

namespace dgkit {

/// Desk-scale caps. Configuration, not hard limits of the mathematics.
struct Caps {
  std::size_t max_total_dim = 24;   // largest algebra/module accepted by ingest
  std::uint32_t max_prime = 97;     // largest prime-field characteristic
  std::size_t oracle_total_dim = 6; // exhaustive lattice oracles up to here
  std::size_t sweep_limit = 4096;   // max vectors enumerated per component sweep
  std::size_t lattice_limit = 20000;  // max subspaces held by a lattice oracle
  std::size_t hom_grid = 4;         // grid radius for invertible-intertwiner search
  std::size_t root_scan_limit = 200000;  // integer root scan bound
  std::size_t max_hom_enum = 4096;  // max hom-space points enumerated over F_q
};

}  // namespace dgkit
