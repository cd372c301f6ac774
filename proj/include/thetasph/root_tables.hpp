#pragma once

#include <vector>

#include "thetasph/types.hpp"

namespace thetasph::roots::tables {

// Embedded simple-root tables for the exceptional types, Bourbaki numbering,
// in the standard ambient coordinates (entries are integers or halves, exact
// in binary floating point).  The full root sets are recovered by reflection
// closure, and the expected root counts below act as the table checksum.
inline constexpr const char* kVersion = "root-tables-1";

struct SimpleRootTable {
  int rank;
  int ambient_dim;
  int expected_root_count;
  std::vector<Vec> simple_roots;  // Bourbaki order
};

inline SimpleRootTable e8_table() {
  return SimpleRootTable{
      8, 8, 240,
      {
          {0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5},  // alpha1
          {1, 1, 0, 0, 0, 0, 0, 0},                        // alpha2
          {-1, 1, 0, 0, 0, 0, 0, 0},                       // alpha3
          {0, -1, 1, 0, 0, 0, 0, 0},                       // alpha4
          {0, 0, -1, 1, 0, 0, 0, 0},                       // alpha5
          {0, 0, 0, -1, 1, 0, 0, 0},                       // alpha6
          {0, 0, 0, 0, -1, 1, 0, 0},                       // alpha7
          {0, 0, 0, 0, 0, -1, 1, 0},                       // alpha8
      }};
}

inline SimpleRootTable e7_table() {
  auto t = e8_table();
  t.rank = 7;
  t.expected_root_count = 126;
  t.simple_roots.resize(7);
  return t;
}

inline SimpleRootTable e6_table() {
  auto t = e8_table();
  t.rank = 6;
  t.expected_root_count = 72;
  t.simple_roots.resize(6);
  return t;
}

inline SimpleRootTable f4_table() {
  return SimpleRootTable{
      4, 4, 48,
      {
          {0, 1, -1, 0},           // alpha1
          {0, 0, 1, -1},           // alpha2
          {0, 0, 0, 1},            // alpha3
          {0.5, -0.5, -0.5, -0.5}, // alpha4
      }};
}

inline SimpleRootTable g2_table() {
  return SimpleRootTable{
      2, 3, 12,
      {
          {1, -1, 0},   // alpha1 (short)
          {-2, 1, 1},   // alpha2 (long)
      }};
}

}  // namespace thetasph::roots::tables
