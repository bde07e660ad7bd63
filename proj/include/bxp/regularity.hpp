// Regularity and unit-regularity witnesses in B(X, P).

#ifndef BXP_REGULARITY_HPP_
#define BXP_REGULARITY_HPP_

#include "bxp/core.hpp"

namespace bxp {

  //! A transformation g with fgf = f.
  struct RegularityWitness {
    enum class Flavor { plain, unit };

    Transformation g;
    Flavor         flavor = Flavor::plain;
  };

  //! Builds g in B(X, P) with fgf = f and chi(g) = chi(f)^-1.
  //!
  //! A point y of X_i in the image of f is sent to its least preimage; any
  //! other point of X_i is sent to the least point of block i chi(f)^-1.
  //! Throws NotInB.
  RegularityWitness regular_witness(Transformation const& f, Partition const& P);

  //! f is a unit of B(X, P): it preserves P, its character is a permutation,
  //! and every block restriction is a bijection.
  bool is_unit(Transformation const& f, Partition const& P);

  //! c(f|X_i) = d(f|X_i) for every block i. Throws NotInB.
  bool is_unit_regular(Transformation const& f, Partition const& P);

  //! Builds a unit g of B(X, P) with fgf = f and chi(g) = chi(f)^-1.
  //!
  //! For each target block X_i with source X_j (j = i chi(f)^-1), an image
  //! point goes to its least preimage and the remaining points of X_i go,
  //! in ascending order, to the non-least preimages of X_j in ascending
  //! order. Throws NotInB, or NotUnitRegular carrying the source block j
  //! of the first target block i (in block order) whose restriction
  //! X_j -> X_i has c != d.
  RegularityWitness unit_regular_witness(Transformation const& f,
                                         Partition const&      P);

  //! Every element of B(X, P) is unit-regular, i.e. P is uniform.
  bool semigroup_unit_regular(Partition const& P);

}  // namespace bxp

#endif  // BXP_REGULARITY_HPP_
