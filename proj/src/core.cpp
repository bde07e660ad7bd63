#include "bxp/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace bxp {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<std::vector<point_type>> blocks)
      : _blocks(std::move(blocks)) {
    if (_blocks.empty()) {
      throw InvalidPartition("a partition needs at least one block");
    }
    std::size_t n = 0;
    for (auto& b : _blocks) {
      if (b.empty()) {
        throw InvalidPartition("blocks must be nonempty");
      }
      std::sort(b.begin(), b.end());
      n += b.size();
    }
    std::sort(_blocks.begin(),
              _blocks.end(),
              [](auto const& a, auto const& b) { return a.front() < b.front(); });

    constexpr auto unset = static_cast<std::size_t>(-1);
    _block_of.assign(n, unset);
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      for (point_type x : _blocks[i]) {
        if (x >= n) {
          throw InvalidPartition("point " + std::to_string(x)
                                 + " outside the ground set 0.."
                                 + std::to_string(n - 1));
        }
        if (_block_of[x] != unset) {
          throw InvalidPartition("point " + std::to_string(x)
                                 + " occurs more than once");
        }
        _block_of[x] = i;
      }
    }
  }

  Partition Partition::from_sizes(std::span<std::size_t const> sizes) {
    std::vector<std::vector<point_type>> blocks;
    point_type                           next = 0;
    for (std::size_t s : sizes) {
      std::vector<point_type> b(s);
      std::iota(b.begin(), b.end(), next);
      next += s;
      blocks.push_back(std::move(b));
    }
    return Partition(std::move(blocks));
  }

  std::size_t Partition::max_block_size() const noexcept {
    std::size_t result = 0;
    for (auto const& b : _blocks) {
      result = std::max(result, b.size());
    }
    return result;
  }

  bool Partition::is_uniform() const noexcept {
    return std::all_of(_blocks.begin(), _blocks.end(), [this](auto const& b) {
      return b.size() == _blocks.front().size();
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<point_type> images)
      : _images(std::move(images)) {
    for (point_type y : _images) {
      if (y >= _images.size()) {
        throw InvalidTransformation("image point " + std::to_string(y)
                                    + " out of range for degree "
                                    + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<point_type> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Transformation(std::move(im));
  }

  std::size_t Transformation::rank() const {
    std::vector<bool> seen(degree(), false);
    std::size_t       result = 0;
    for (point_type y : _images) {
      if (!seen[y]) {
        seen[y] = true;
        ++result;
      }
    }
    return result;
  }

  bool Transformation::is_bijective() const {
    return rank() == degree();
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw SizeMismatch(f.degree(), g.degree());
    }
    std::vector<point_type> im(f.degree());
    for (point_type x = 0; x < im.size(); ++x) {
      im[x] = g[f[x]];
    }
    return Transformation(std::move(im));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t j : _images) {
      if (j >= _images.size() || seen[j]) {
        throw InvalidTransformation("not a permutation");
      }
      seen[j] = true;
    }
  }

  Permutation Permutation::identity(std::size_t m) {
    std::vector<std::size_t> im(m);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      inv[_images[i]] = i;
    }
    return Permutation(std::move(inv));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Character
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_bijection(std::vector<std::size_t> const& map) {
      std::vector<bool> seen(map.size(), false);
      for (std::size_t j : map) {
        if (j >= map.size() || seen[j]) {
          return false;
        }
        seen[j] = true;
      }
      return true;
    }

    void check_degree(Transformation const& f, Partition const& P) {
      if (f.degree() != P.degree()) {
        throw SizeMismatch(P.degree(), f.degree());
      }
    }

    // Index of the first block not mapped into a single block, or
    // number_of_blocks() if every block is.
    std::size_t first_straddling_block(Transformation const& f,
                                       Partition const&      P) {
      for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
        auto const& b      = P.block(i);
        std::size_t target = P.block_of(f[b.front()]);
        for (point_type x : b) {
          if (P.block_of(f[x]) != target) {
            return i;
          }
        }
      }
      return P.number_of_blocks();
    }
  }  // namespace

  std::optional<Permutation> Character::as_permutation() const {
    if (!is_permutation) {
      return std::nullopt;
    }
    return Permutation(map);
  }

  Character compose(Character const& a, Character const& b) {
    if (a.domain_size() != b.domain_size()) {
      throw SizeMismatch(a.domain_size(), b.domain_size());
    }
    Character result;
    result.map.resize(a.domain_size());
    for (std::size_t i = 0; i < a.domain_size(); ++i) {
      result.map[i] = b.map[a.map[i]];
    }
    result.is_permutation = is_bijection(result.map);
    return result;
  }

  bool preserves_partition(Transformation const& f, Partition const& P) {
    check_degree(f, P);
    return first_straddling_block(f, P) == P.number_of_blocks();
  }

  Character character(Transformation const& f, Partition const& P) {
    check_degree(f, P);
    std::size_t bad = first_straddling_block(f, P);
    if (bad != P.number_of_blocks()) {
      throw NotPartitionPreserving(bad);
    }
    Character result;
    result.map.resize(P.number_of_blocks());
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      result.map[i] = P.block_of(f[P.block(i).front()]);
    }
    result.is_permutation = is_bijection(result.map);
    return result;
  }

  bool in_B(Transformation const& f, Partition const& P) {
    check_degree(f, P);
    return preserves_partition(f, P) && character(f, P).is_permutation;
  }

  void validate_in_B(Transformation const& f, Partition const& P) {
    check_degree(f, P);
    std::size_t bad = first_straddling_block(f, P);
    if (bad != P.number_of_blocks()) {
      throw NotInB(bad, "is not mapped into a single block");
    }
    std::vector<bool> hit(P.number_of_blocks(), false);
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      std::size_t j = P.block_of(f[P.block(i).front()]);
      if (hit[j]) {
        throw NotInB(i,
                     "maps into block " + std::to_string(j)
                         + ", already the target of another block");
      }
      hit[j] = true;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Block restrictions
  ////////////////////////////////////////////////////////////////////////

  std::vector<point_type> BlockRestriction::image() const {
    std::vector<point_type> im(values);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  std::size_t BlockRestriction::rank() const {
    return image().size();
  }

  std::vector<BlockRestriction> block_restrictions(Transformation const& f,
                                                   Partition const&      P) {
    Character                     chi = character(f, P);
    std::vector<BlockRestriction> result;
    result.reserve(P.number_of_blocks());
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      BlockRestriction r;
      r.source_block = i;
      r.target_block = chi.map[i];
      r.domain       = P.block(i);
      r.codomain     = P.block(r.target_block);
      r.values.reserve(r.domain.size());
      for (point_type x : r.domain) {
        r.values.push_back(f[x]);
      }
      result.push_back(std::move(r));
    }
    return result;
  }

  std::size_t collapse(BlockRestriction const& r) {
    return r.domain.size() - r.rank();
  }

  std::size_t defect(BlockRestriction const& r) {
    return r.codomain.size() - r.rank();
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernels
  ////////////////////////////////////////////////////////////////////////

  KernelPartition::KernelPartition(std::vector<std::vector<point_type>> classes)
      : _classes(std::move(classes)) {
    for (auto& c : _classes) {
      std::sort(c.begin(), c.end());
    }
    std::sort(_classes.begin(), _classes.end());
  }

  KernelPartition kernel_partition(Transformation const& f) {
    std::vector<std::vector<point_type>> by_image(f.degree());
    for (point_type x = 0; x < f.degree(); ++x) {
      by_image[f[x]].push_back(x);
    }
    std::erase_if(by_image, [](auto const& c) { return c.empty(); });
    return KernelPartition(std::move(by_image));
  }

  KernelPartition kernel_restricted(Transformation const&       f,
                                    std::span<point_type const> A) {
    std::vector<bool> hit(f.degree(), false);
    for (point_type a : A) {
      hit[f[a]] = true;
    }
    std::vector<std::vector<point_type>> by_image(f.degree());
    for (point_type x = 0; x < f.degree(); ++x) {
      if (hit[f[x]]) {
        by_image[f[x]].push_back(x);
      }
    }
    std::erase_if(by_image, [](auto const& c) { return c.empty(); });
    return KernelPartition(std::move(by_image));
  }

  bool refines(KernelPartition const& p, KernelPartition const& q) {
    point_type bound = 0;
    for (auto const& c : q.classes()) {
      bound = std::max(bound, c.back() + 1);
    }
    constexpr auto      unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_of(bound, unset);
    for (std::size_t k = 0; k < q.size(); ++k) {
      for (point_type x : q.classes()[k]) {
        class_of[x] = k;
      }
    }
    for (auto const& c : p.classes()) {
      if (c.front() >= bound || class_of[c.front()] == unset) {
        return false;
      }
      std::size_t k = class_of[c.front()];
      for (point_type x : c) {
        if (x >= bound || class_of[x] != k) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Size profile
  ////////////////////////////////////////////////////////////////////////

  std::size_t SizeProfile::total() const noexcept {
    std::size_t result = 0;
    for (auto const& [lambda, n] : counts) {
      result += n;
    }
    return result;
  }

  SizeProfile size_profile(Transformation const& f, Partition const& P) {
    return BElement(f, P).size_profile();
  }

  ////////////////////////////////////////////////////////////////////////
  // BElement
  ////////////////////////////////////////////////////////////////////////

  BElement::BElement(Transformation f, std::shared_ptr<Partition const> P)
      : _f(std::move(f)), _partition(std::move(P)) {
    validate_in_B(_f, *_partition);
    auto const& part = *_partition;
    std::vector<std::size_t> chi(part.number_of_blocks());
    _block_images.resize(part.number_of_blocks());
    for (std::size_t i = 0; i < part.number_of_blocks(); ++i) {
      chi[i] = part.block_of(_f[part.block(i).front()]);
      auto& im = _block_images[i];
      for (point_type x : part.block(i)) {
        im.push_back(_f[x]);
      }
      std::sort(im.begin(), im.end());
      im.erase(std::unique(im.begin(), im.end()), im.end());
    }
    _character = Permutation(std::move(chi));
    _kernel    = kernel_partition(_f);
  }

  BElement::BElement(Transformation f, Partition const& P)
      : BElement(std::move(f), std::make_shared<Partition const>(P)) {}

  std::vector<std::size_t> BElement::block_image_sizes() const {
    std::vector<std::size_t> result;
    result.reserve(_block_images.size());
    for (auto const& im : _block_images) {
      result.push_back(im.size());
    }
    return result;
  }

  SizeProfile BElement::size_profile() const {
    SizeProfile result;
    for (auto const& im : _block_images) {
      ++result.counts[im.size()];
    }
    return result;
  }

}  // namespace bxp

std::size_t
std::hash<bxp::Transformation>::operator()(bxp::Transformation const& f) const
    noexcept {
  std::size_t seed = f.degree();
  for (auto y : f.images()) {
    seed ^= y + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
