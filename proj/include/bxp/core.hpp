// Ground-set combinatorics for partition-preserving transformations.
//
// Conventions: the ground set X is {0, ..., n - 1}; maps act on the right and
// compose left to right, so x(fg) = (xf)g.

#ifndef BXP_CORE_HPP_
#define BXP_CORE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bxp/errors.hpp"

namespace bxp {

  using point_type = std::size_t;

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  //! A partition of {0, ..., n - 1} into nonempty blocks.
  //!
  //! Blocks are stored in canonical form: each block sorted ascending and
  //! the blocks ordered by their minimum element. Block indices 0..m-1 form
  //! the index set I.
  class Partition {
   public:
    //! Throws InvalidPartition if the blocks are empty, overlap, contain an
    //! empty block, or do not cover an initial segment {0, ..., n - 1}.
    explicit Partition(std::vector<std::vector<point_type>> blocks);

    //! Consecutive blocks of the given sizes: {0..s0-1}, {s0..s0+s1-1}, ...
    static Partition from_sizes(std::span<std::size_t const> sizes);

    std::size_t degree() const noexcept {
      return _block_of.size();
    }

    std::size_t number_of_blocks() const noexcept {
      return _blocks.size();
    }

    std::vector<point_type> const& block(std::size_t i) const {
      return _blocks.at(i);
    }

    std::vector<std::vector<point_type>> const& blocks() const noexcept {
      return _blocks;
    }

    std::size_t block_of(point_type x) const {
      return _block_of.at(x);
    }

    std::size_t block_size(std::size_t i) const {
      return _blocks.at(i).size();
    }

    std::size_t max_block_size() const noexcept;

    //! All blocks have the same size.
    bool is_uniform() const noexcept;

    bool operator==(Partition const& that) const noexcept {
      return _blocks == that._blocks;
    }

   private:
    std::vector<std::vector<point_type>> _blocks;
    std::vector<std::size_t>             _block_of;
  };

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  //! A total self-map of {0, ..., n - 1} stored as its image list.
  class Transformation {
   public:
    Transformation() = default;

    //! Throws InvalidTransformation if an entry is out of range.
    explicit Transformation(std::vector<point_type> images);

    static Transformation identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](point_type x) const {
      return _images[x];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    //! Number of distinct image points.
    std::size_t rank() const;

    bool is_bijective() const;

    auto operator<=>(Transformation const&) const = default;
    bool operator==(Transformation const&) const = default;

   private:
    std::vector<point_type> _images;
  };

  //! x(fg) = (xf)g. Throws SizeMismatch if the degrees differ.
  Transformation compose(Transformation const& f, Transformation const& g);

  ////////////////////////////////////////////////////////////////////////
  // Permutation of the block index set
  ////////////////////////////////////////////////////////////////////////

  //! A bijection of {0, ..., m - 1}, used for characters and for the
  //! block permutations that witness Green's relations.
  class Permutation {
   public:
    Permutation() = default;

    //! Throws InvalidTransformation if `images` is not a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t m);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::size_t operator[](std::size_t i) const {
      return _images[i];
    }

    std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }

    Permutation inverse() const;

    bool is_identity() const noexcept;

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<std::size_t> _images;
  };

  ////////////////////////////////////////////////////////////////////////
  // Character
  ////////////////////////////////////////////////////////////////////////

  //! The self-map of I induced by a partition-preserving transformation:
  //! i maps to j whenever X_i f is contained in X_j.
  struct Character {
    std::vector<std::size_t> map;
    bool                     is_permutation = false;

    std::size_t domain_size() const noexcept {
      return map.size();
    }

    //! Present iff is_permutation.
    std::optional<Permutation> as_permutation() const;

    bool operator==(Character const&) const = default;
  };

  //! Left-to-right composition of characters: i(ab) = (ia)b.
  Character compose(Character const& a, Character const& b);

  //! Every block of `P` is mapped into a single block.
  bool preserves_partition(Transformation const& f, Partition const& P);

  //! Throws NotPartitionPreserving (or SizeMismatch).
  Character character(Transformation const& f, Partition const& P);

  //! f preserves P and its character is a permutation of I.
  bool in_B(Transformation const& f, Partition const& P);

  ////////////////////////////////////////////////////////////////////////
  // Block restrictions
  ////////////////////////////////////////////////////////////////////////

  //! f restricted to X_i, viewed as a map X_i -> X_j with j = i chi(f).
  struct BlockRestriction {
    std::size_t source_block = 0;
    std::size_t target_block = 0;
    //! The points of X_i in ascending order.
    std::vector<point_type> domain;
    //! The points of X_j in ascending order.
    std::vector<point_type> codomain;
    //! values[k] is the image of domain[k].
    std::vector<point_type> values;

    //! Distinct image points, ascending.
    std::vector<point_type> image() const;

    //! Number of kernel classes, i.e. |X_i f|.
    std::size_t rank() const;

    bool operator==(BlockRestriction const&) const = default;
  };

  //! One restriction per block, in block order. Throws NotPartitionPreserving.
  std::vector<BlockRestriction> block_restrictions(Transformation const& f,
                                                   Partition const&      P);

  //! c(r) = |X_i| minus the number of kernel classes of r.
  std::size_t collapse(BlockRestriction const& r);

  //! d(r) = |X_j| - |X_i f|.
  std::size_t defect(BlockRestriction const& r);

  ////////////////////////////////////////////////////////////////////////
  // Kernels
  ////////////////////////////////////////////////////////////////////////

  //! The partition of a set of points into classes of equal image.
  //!
  //! Classes are sorted ascending internally and ordered by minimum element.
  class KernelPartition {
   public:
    KernelPartition() = default;
    explicit KernelPartition(std::vector<std::vector<point_type>> classes);

    std::vector<std::vector<point_type>> const& classes() const noexcept {
      return _classes;
    }

    std::size_t size() const noexcept {
      return _classes.size();
    }

    bool operator==(KernelPartition const&) const = default;

   private:
    std::vector<std::vector<point_type>> _classes;
  };

  KernelPartition kernel_partition(Transformation const& f);

  //! The classes of pi(f) that meet `A` (whole classes, not intersections).
  KernelPartition kernel_restricted(Transformation const&   f,
                                    std::span<point_type const> A);

  //! Every class of p is contained in some class of q.
  bool refines(KernelPartition const& p, KernelPartition const& q);

  ////////////////////////////////////////////////////////////////////////
  // Size profile
  ////////////////////////////////////////////////////////////////////////

  //! counts[lambda] = number of blocks i with |X_i f| = lambda. Only
  //! nonzero counts are stored.
  struct SizeProfile {
    using Map = std::map<std::size_t, std::size_t>;

    Map counts;

    std::size_t total() const noexcept;

    std::size_t count(std::size_t lambda) const {
      auto it = counts.find(lambda);
      return it == counts.end() ? 0 : it->second;
    }

    bool operator==(SizeProfile const&) const = default;
  };

  //! Throws NotInB.
  SizeProfile size_profile(Transformation const& f, Partition const& P);

  ////////////////////////////////////////////////////////////////////////
  // Validated elements of B(X, P)
  ////////////////////////////////////////////////////////////////////////

  //! An element of B(X, P) together with the data every decision procedure
  //! reads: its character, the image set of each block, and its kernel.
  //!
  //! Construction throws NotInB (or SizeMismatch) for anything outside
  //! B(X, P).
  class BElement {
   public:
    BElement(Transformation f, std::shared_ptr<Partition const> P);
    BElement(Transformation f, Partition const& P);

    Transformation const& transformation() const noexcept {
      return _f;
    }

    Partition const& partition() const noexcept {
      return *_partition;
    }

    std::shared_ptr<Partition const> const& shared_partition() const noexcept {
      return _partition;
    }

    Permutation const& character() const noexcept {
      return _character;
    }

    //! X_i f, ascending.
    std::vector<point_type> const& block_image(std::size_t i) const {
      return _block_images.at(i);
    }

    //! |X_i f|.
    std::size_t block_image_size(std::size_t i) const {
      return _block_images.at(i).size();
    }

    std::vector<std::size_t> block_image_sizes() const;

    KernelPartition const& kernel() const noexcept {
      return _kernel;
    }

    SizeProfile size_profile() const;

   private:
    Transformation                       _f;
    std::shared_ptr<Partition const>     _partition;
    Permutation                          _character;
    std::vector<std::vector<point_type>> _block_images;
    KernelPartition                      _kernel;
  };

  //! Throws NotInB with the offending block when f is not in B(X, P).
  void validate_in_B(Transformation const& f, Partition const& P);

}  // namespace bxp

template <>
struct std::hash<bxp::Transformation> {
  std::size_t operator()(bxp::Transformation const& f) const noexcept;
};

#endif  // BXP_CORE_HPP_
