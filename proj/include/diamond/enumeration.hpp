#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "diamond/tableaux.hpp"

namespace diamond {

using BigInt = boost::multiprecision::cpp_int;

// Admissible columns of height k, in letter-sequence order.
std::vector<SymplecticColumn> enum_admissible_columns(int n, int k);

// Semi-standard symplectic tableaux of shape lambda in lexicographic column order.
void for_each_ss_sp(int n, const Shape& lambda, const std::function<void(const SpTableau&)>& visit);
std::vector<SpTableau> enum_ss_sp(int n, const Shape& lambda);
std::vector<SpTableau> enum_qs_sp(int n, const Shape& lambda);
std::uint64_t count_ss_sp(int n, const Shape& lambda);

// Classical semi-standard tableaux over 1..n.
std::vector<SlTableau> enum_ss_sl(int n, const Shape& lambda);
std::vector<SlTableau> enum_qs_sl(int n, const Shape& lambda);

// Weyl dimension of the sp(2n) irreducible with highest weight sum a_k w_k.
BigInt weyl_dim_sp(int n, const std::vector<int>& a);
// Same for sl(n), weight sum a_k w_k with k < n.
BigInt weyl_dim_sl(int n, const std::vector<int>& a);

}  // namespace diamond
