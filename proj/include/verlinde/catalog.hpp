#pragma once

#include "verlinde/modular_data.hpp"

#include <string>
#include <vector>

namespace verlinde {

// Built-in modular data for standard rational theories.  All closed forms
// here are external standard references, independent of the identity checks
// they feed.

ModularData gen_trivial();
// Labels 0..n-1, S_{ab} = e^{2 pi i ab/n}/sqrt(n), dual(a) = -a mod n,
// h_a = a(n-a)/(2n).
ModularData gen_abelian(long long n);
// Level-k affine su(2): labels j = 0, 1/2, ..., k/2 with the sine formula
// S_{j j'} = sqrt(2/(k+2)) sin(pi (2j+1)(2j'+1)/(k+2)).
ModularData gen_su2(long long k);
// Virasoro minimal model, 2 <= p < q coprime; Kac-table labels modulo
// (r,s) ~ (p-r,q-s), canonical representative with smaller r*q + s.
ModularData gen_minimal(long long p, long long q);
ModularData gen_ising();
ModularData gen_fibonacci();

// Fusion table predicted combinatorially (truncated Clebsch-Gordan, modular
// addition, BPZ truncation, hand-listed small tables).  Same flat layout as
// FusionTable::tensor.  These never touch the S-matrix.
std::vector<long long> oracle_fusion(const ModularData& md);

struct CatalogModel {
  std::string name;
  ModularData (*gen)();
};

// The fixed acceptance set: trivial, su2_1..su2_16, z1..z24, ising,
// fibonacci, minimal_2_5, minimal_3_4.
std::vector<ModularData> catalog_models();

// Family names and parameter hints for the CLI.
std::vector<std::string> catalog_families();

}  // namespace verlinde
