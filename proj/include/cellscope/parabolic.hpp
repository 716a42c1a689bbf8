#pragma once

#include "cellscope/element_set.hpp"
#include "cellscope/permutation.hpp"

namespace cellscope {

/// w = left_component * min_rep with left_component in W_K and min_rep the
/// shortest element of the right coset W_K w.
struct CosetDecomposition {
  Permutation left_component;
  Permutation min_rep;
  GenSet k;
};

/// w_J: reverses the points of every maximal run of J, fixes the rest.
Permutation longest_element(const GenSet& j);

/// d in D_J iff d(i) < d(i+1) for every s_i in J.
bool in_coset_reps(const Permutation& w, const GenSet& j);
/// d in D_K^{-1} iff l(s d) > l(d) for every s in K.
bool in_inverse_coset_reps(const Permutation& w, const GenSet& k);
/// True iff w lies in the parabolic subgroup W_J.
bool in_parabolic(const Permutation& w, const GenSet& j);

ElementSet min_left_coset_reps(const GenSet& j);
CosetDecomposition left_decompose(const Permutation& w, const GenSet& k);
/// D_{K,J} = D_K^{-1} ∩ D_J.
ElementSet double_coset_reps(const GenSet& k, const GenSet& j);

/// All elements of W_J, lexicographic.
std::vector<Permutation> parabolic_elements(const GenSet& j);

/// K ∩ d J d^{-1}, for d in D_J.
GenSet conjugate_intersection(const GenSet& k, const Permutation& d, const GenSet& j);

}  // namespace cellscope
