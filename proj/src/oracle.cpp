#include "bxp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

namespace bxp {

  namespace {
    constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      return __builtin_mul_overflow(a, b, &r) ? saturated : r;
    }

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      return __builtin_add_overflow(a, b, &r) ? saturated : r;
    }

    std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
      std::uint64_t r = 1;
      while (exp-- > 0) {
        r = sat_mul(r, base);
      }
      return r;
    }

    constexpr std::size_t max_exact_blocks = 20;

    void require_member(Transformation const& f, SemigroupTable const& T) {
      if (!T.contains(f)) {
        throw ElementNotInTable();
      }
    }

    // compose(f, g) == target without allocating.
    bool product_equals(Transformation const& f,
                        Transformation const& g,
                        Transformation const& target) {
      for (point_type x = 0; x < f.degree(); ++x) {
        if (g[f[x]] != target[x]) {
          return false;
        }
      }
      return true;
    }

    class DisjointSets {
     public:
      explicit DisjointSets(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // Relabels arbitrary keys densely in order of first occurrence.
    template <typename Key>
    std::vector<std::size_t> dense_labels(std::vector<Key> const& keys) {
      std::map<Key, std::size_t> seen;
      std::vector<std::size_t>   result;
      result.reserve(keys.size());
      for (auto const& k : keys) {
        result.push_back(seen.try_emplace(k, seen.size()).first->second);
      }
      return result;
    }

    std::size_t count_labels(std::vector<std::size_t> const& labels) {
      return labels.empty()
                 ? 0
                 : *std::max_element(labels.begin(), labels.end()) + 1;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t b_size(Partition const& P) {
    std::size_t const m = P.number_of_blocks();
    if (m > max_exact_blocks) {
      // Lower bound from the size-preserving characters alone: there are
      // prod (multiplicity of s)! of them and each contributes prod s^s.
      std::map<std::size_t, std::size_t> mult;
      std::uint64_t                      bound = 1;
      for (std::size_t i = 0; i < m; ++i) {
        auto s = P.block_size(i);
        bound  = sat_mul(bound, sat_mul(sat_pow(s, s), ++mult[s]));
      }
      return bound;
    }
    // Permanent of w[i][j] = |X_j|^{|X_i|} by dynamic programming over the
    // set of columns already used.
    std::vector<std::vector<std::uint64_t>> w(m, std::vector<std::uint64_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        w[i][j] = sat_pow(P.block_size(j), P.block_size(i));
      }
    }
    std::vector<std::uint64_t> dp(std::size_t(1) << m, 0);
    dp[0] = 1;
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
      std::size_t const row = std::popcount(mask) - 1;
      std::uint64_t     sum = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (std::size_t(1) << j)) {
          sum = sat_add(sum, sat_mul(dp[mask ^ (std::size_t(1) << j)], w[row][j]));
        }
      }
      dp[mask] = sum;
    }
    return dp.back();
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupTable
  ////////////////////////////////////////////////////////////////////////

  SemigroupTable::SemigroupTable(Partition P, std::uint64_t cap)
      : _partition(std::make_shared<Partition const>(std::move(P))) {
    auto const&         part     = *_partition;
    std::uint64_t const estimate = b_size(part);
    if (estimate > cap) {
      throw TooLarge(estimate, cap);
    }
    std::size_t const n = part.degree();
    std::size_t const m = part.number_of_blocks();
    _elements.reserve(estimate);

    // Choose the character alpha, then map every point of X_i anywhere in
    // X_{i alpha}; the block family of an element determines it uniquely.
    std::vector<std::size_t> alpha(m);
    std::iota(alpha.begin(), alpha.end(), 0);
    do {
      std::vector<std::vector<point_type> const*> target(n);
      for (point_type x = 0; x < n; ++x) {
        target[x] = &part.block(alpha[part.block_of(x)]);
      }
      std::vector<std::size_t> digit(n, 0);
      std::vector<point_type>  im(n);
      while (true) {
        for (point_type x = 0; x < n; ++x) {
          im[x] = (*target[x])[digit[x]];
        }
        _elements.emplace_back(im);
        std::size_t x = 0;
        while (x < n && ++digit[x] == target[x]->size()) {
          digit[x++] = 0;
        }
        if (x == n) {
          break;
        }
      }
    } while (std::next_permutation(alpha.begin(), alpha.end()));

    std::sort(_elements.begin(), _elements.end());
    build_index();
  }

  SemigroupTable::SemigroupTable(Partition P, std::vector<Transformation> elements)
      : _partition(std::make_shared<Partition const>(std::move(P))),
        _elements(std::move(elements)) {
    for (auto const& f : _elements) {
      if (!in_B(f, *_partition)) {
        throw ParseError("table contains an element outside B(X,P)");
      }
    }
    std::sort(_elements.begin(), _elements.end());
    if (std::adjacent_find(_elements.begin(), _elements.end())
        != _elements.end()) {
      throw ParseError("table contains duplicate elements");
    }
    if (_elements.size() != b_size(*_partition)) {
      throw ParseError("table is incomplete: " + std::to_string(_elements.size())
                       + " of " + std::to_string(b_size(*_partition))
                       + " elements");
    }
    build_index();
  }

  void SemigroupTable::build_index() {
    _index.reserve(_elements.size());
    for (std::size_t k = 0; k < _elements.size(); ++k) {
      _index.emplace(_elements[k], k);
      if (_elements[k].is_bijective()) {
        _units.push_back(k);
      }
    }
  }

  std::size_t SemigroupTable::index(Transformation const& f) const {
    auto it = _index.find(f);
    if (it == _index.end()) {
      throw ElementNotInTable();
    }
    return it->second;
  }

  std::size_t SemigroupTable::identity_index() const {
    return index(Transformation::identity(_partition->degree()));
  }

  SemigroupTable enumerate(Partition const& P, std::uint64_t cap) {
    return SemigroupTable(P, cap);
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct searches
  ////////////////////////////////////////////////////////////////////////

  bool oracle_leq_L(Transformation const& f,
                    Transformation const& g,
                    SemigroupTable const& T) {
    require_member(f, T);
    require_member(g, T);
    return std::any_of(T.elements().begin(),
                       T.elements().end(),
                       [&](auto const& h) { return product_equals(h, g, f); });
  }

  bool oracle_leq_R(Transformation const& f,
                    Transformation const& g,
                    SemigroupTable const& T) {
    require_member(f, T);
    require_member(g, T);
    return std::any_of(T.elements().begin(),
                       T.elements().end(),
                       [&](auto const& h) { return product_equals(g, h, f); });
  }

  bool oracle_leq_J(Transformation const& f,
                    Transformation const& g,
                    SemigroupTable const& T) {
    require_member(f, T);
    require_member(g, T);
    std::unordered_set<Transformation> left;
    for (auto const& h : T.elements()) {
      left.insert(compose(h, g));
    }
    for (auto const& x : left) {
      for (auto const& h1 : T.elements()) {
        if (product_equals(x, h1, f)) {
          return true;
        }
      }
    }
    return false;
  }

  bool oracle_eq_D(Transformation const& f,
                   Transformation const& g,
                   SemigroupTable const& T) {
    require_member(f, T);
    require_member(g, T);
    for (auto const& h : T.elements()) {
      if (oracle_leq_L(f, h, T) && oracle_leq_L(h, f, T)
          && oracle_leq_R(h, g, T) && oracle_leq_R(g, h, T)) {
        return true;
      }
    }
    return false;
  }

  bool oracle_regular(Transformation const& f, SemigroupTable const& T) {
    require_member(f, T);
    return std::any_of(T.elements().begin(), T.elements().end(), [&](auto const& b) {
      return product_equals(compose(f, b), f, f);
    });
  }

  bool oracle_unit_regular(Transformation const& f, SemigroupTable const& T) {
    require_member(f, T);
    return std::any_of(T.units().begin(), T.units().end(), [&](auto k) {
      return product_equals(compose(f, T.at(k)), f, f);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // IdealOracle
  ////////////////////////////////////////////////////////////////////////

  IdealOracle::IdealOracle(SemigroupTable const& T) : _n(T.size()) {
    std::size_t const words = (_n + 63) / 64;
    _left.assign(_n, bitset(words, 0));
    _right.assign(_n, bitset(words, 0));

    auto const& el = T.elements();
    for (std::size_t g = 0; g < _n; ++g) {
      for (std::size_t h = 0; h < _n; ++h) {
        std::size_t hg = T.index(compose(el[h], el[g]));
        std::size_t gh = T.index(compose(el[g], el[h]));
        _left[g][hg >> 6] |= std::uint64_t(1) << (hg & 63);
        _right[g][gh >> 6] |= std::uint64_t(1) << (gh & 63);
      }
    }

    // SgS is the union of xS over x in Sg.
    _two_sided.assign(_n, bitset(words, 0));
    for (std::size_t g = 0; g < _n; ++g) {
      auto& ideal = _two_sided[g];
      for (std::size_t x = 0; x < _n; ++x) {
        if (test(_left, g, x)) {
          for (std::size_t w = 0; w < words; ++w) {
            ideal[w] |= _right[x][w];
          }
        }
      }
    }

    _l_class = dense_labels(_left);
    _r_class = dense_labels(_right);
    _j_class = dense_labels(_two_sided);

    std::vector<std::pair<std::size_t, std::size_t>> lr(_n);
    for (std::size_t k = 0; k < _n; ++k) {
      lr[k] = {_l_class[k], _r_class[k]};
    }
    _h_class = dense_labels(lr);

    _number_of_r = count_labels(_r_class);
    _lr_present.assign(count_labels(_l_class) * _number_of_r, false);
    for (std::size_t k = 0; k < _n; ++k) {
      _lr_present[_l_class[k] * _number_of_r + _r_class[k]] = true;
    }

    // D-classes for counting: the join of L and R.
    DisjointSets             sets(_n);
    std::vector<std::size_t> first_in_l(count_labels(_l_class), _n);
    std::vector<std::size_t> first_in_r(count_labels(_r_class), _n);
    for (std::size_t k = 0; k < _n; ++k) {
      auto& fl = first_in_l[_l_class[k]];
      auto& fr = first_in_r[_r_class[k]];
      if (fl == _n) {
        fl = k;
      } else {
        sets.unite(fl, k);
      }
      if (fr == _n) {
        fr = k;
      } else {
        sets.unite(fr, k);
      }
    }
    std::vector<std::size_t> roots(_n);
    for (std::size_t k = 0; k < _n; ++k) {
      roots[k] = sets.find(k);
    }
    _d_class = dense_labels(roots);
  }

  std::size_t IdealOracle::number_of_l_classes() const noexcept {
    return count_labels(_l_class);
  }
  std::size_t IdealOracle::number_of_r_classes() const noexcept {
    return count_labels(_r_class);
  }
  std::size_t IdealOracle::number_of_h_classes() const noexcept {
    return count_labels(_h_class);
  }
  std::size_t IdealOracle::number_of_d_classes() const noexcept {
    return count_labels(_d_class);
  }
  std::size_t IdealOracle::number_of_j_classes() const noexcept {
    return count_labels(_j_class);
  }

  ////////////////////////////////////////////////////////////////////////
  // Table dumps
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr char const* table_format  = "bxp-semigroup-table";
    constexpr int         table_version = 1;
  }  // namespace

  void write_table(std::ostream& out, SemigroupTable const& T) {
    nlohmann::ordered_json doc;
    doc["format"]  = table_format;
    doc["version"] = table_version;
    doc["n"]       = T.partition().degree();
    doc["blocks"]  = T.partition().blocks();
    doc["size"]    = T.size();
    auto& elements = doc["elements"] = nlohmann::ordered_json::array();
    for (auto const& f : T.elements()) {
      elements.push_back(f.images());
    }
    out << doc.dump() << '\n';
  }

  SemigroupTable read_table(std::istream& in) {
    try {
      auto const doc = nlohmann::json::parse(in);
      if (doc.at("format") != table_format) {
        throw ParseError("not a semigroup table dump");
      }
      if (doc.at("version") != table_version) {
        throw ParseError("unsupported table version "
                         + doc.at("version").dump());
      }
      Partition P(doc.at("blocks").get<std::vector<std::vector<point_type>>>());
      if (doc.at("n").get<std::size_t>() != P.degree()) {
        throw ParseError("n does not match the blocks");
      }
      std::vector<Transformation> elements;
      for (auto const& e : doc.at("elements")) {
        auto im = e.get<std::vector<point_type>>();
        if (im.size() != P.degree()) {
          throw ParseError("element of wrong degree");
        }
        elements.emplace_back(std::move(im));
      }
      if (doc.at("size").get<std::size_t>() != elements.size()) {
        throw ParseError("size does not match the element count");
      }
      return SemigroupTable(std::move(P), std::move(elements));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed table dump: ") + e.what());
    } catch (InvalidPartition const& e) {
      throw ParseError(e.what());
    } catch (InvalidTransformation const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace bxp
