#include "bxp/regularity.hpp"

#include <algorithm>
#include <vector>

namespace bxp {

  namespace {
    constexpr auto unset = static_cast<point_type>(-1);

    // least_preimage[y] is the least x with xf = y, or unset.
    std::vector<point_type> least_preimages(Transformation const& f) {
      std::vector<point_type> result(f.degree(), unset);
      for (point_type x = 0; x < f.degree(); ++x) {
        if (result[f[x]] == unset) {
          result[f[x]] = x;
        }
      }
      return result;
    }
  }  // namespace

  RegularityWitness regular_witness(Transformation const& f,
                                    Partition const&      P) {
    BElement   e(f, P);
    auto const alpha = e.character().inverse();
    auto const pre   = least_preimages(f);

    std::vector<point_type> g(f.degree());
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      point_type fallback = P.block(alpha[i]).front();
      for (point_type x : P.block(i)) {
        g[x] = pre[x] != unset ? pre[x] : fallback;
      }
    }
    return {Transformation(std::move(g)), RegularityWitness::Flavor::plain};
  }

  bool is_unit(Transformation const& f, Partition const& P) {
    if (!preserves_partition(f, P)) {
      return false;
    }
    auto const chi = character(f, P);
    if (!chi.is_permutation) {
      return false;
    }
    for (auto const& r : block_restrictions(f, P)) {
      if (r.domain.size() != r.codomain.size() || r.rank() != r.domain.size()) {
        return false;
      }
    }
    return true;
  }

  bool is_unit_regular(Transformation const& f, Partition const& P) {
    validate_in_B(f, P);
    for (auto const& r : block_restrictions(f, P)) {
      if (collapse(r) != defect(r)) {
        return false;
      }
    }
    return true;
  }

  RegularityWitness unit_regular_witness(Transformation const& f,
                                         Partition const&      P) {
    validate_in_B(f, P);
    auto const restrictions = block_restrictions(f, P);
    // Target blocks in order: X_i is filled from X_j, j = i chi(f)^-1.
    auto const source = character(f, P).as_permutation()->inverse();
    for (std::size_t i = 0; i < P.number_of_blocks(); ++i) {
      auto const& r = restrictions[source[i]];
      if (collapse(r) != defect(r)) {
        throw NotUnitRegular(r.source_block, collapse(r), defect(r));
      }
    }

    auto const              pre = least_preimages(f);
    std::vector<point_type> g(f.degree(), unset);
    for (auto const& r : restrictions) {
      // r : X_j -> X_i, and g restricted to X_i is a bijection X_i -> X_j.
      std::vector<point_type> non_transversal;
      for (point_type x : r.domain) {
        if (pre[f[x]] != x) {
          non_transversal.push_back(x);
        }
      }
      std::vector<point_type> outside_image;
      for (point_type y : r.codomain) {
        if (pre[y] == unset) {
          outside_image.push_back(y);
        } else {
          g[y] = pre[y];
        }
      }
      // c = d makes these the same length.
      for (std::size_t k = 0; k < outside_image.size(); ++k) {
        g[outside_image[k]] = non_transversal[k];
      }
    }
    return {Transformation(std::move(g)), RegularityWitness::Flavor::unit};
  }

  bool semigroup_unit_regular(Partition const& P) {
    return P.is_uniform();
  }

}  // namespace bxp
