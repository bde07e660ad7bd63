// Naive reference computations used as test oracles. Everything here works
// on raw image vectors and block lists, and deliberately shares no code with
// the library beyond the standard library.

#ifndef BXP_TESTS_BRUTE_HPP_
#define BXP_TESTS_BRUTE_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

namespace brute {

  using Map    = std::vector<std::size_t>;
  using Blocks = std::vector<std::vector<std::size_t>>;

  // All n^n maps of {0, ..., n - 1}, lexicographic.
  inline std::vector<Map> all_maps(std::size_t n) {
    std::vector<Map> out;
    Map              f(n, 0);
    while (true) {
      out.push_back(f);
      std::size_t k = n;
      while (k > 0 && f[k - 1] == n - 1) {
        f[--k] = 0;
      }
      if (k == 0) {
        return out;
      }
      ++f[k - 1];
    }
  }

  // All set partitions of {0, ..., n - 1}, via restricted growth strings.
  // Blocks are listed by least element.
  inline std::vector<Blocks> set_partitions(std::size_t n) {
    std::vector<Blocks> out;
    std::vector<std::size_t> a(n, 0);
    auto emit = [&] {
      Blocks b;
      for (std::size_t x = 0; x < n; ++x) {
        if (a[x] == b.size()) {
          b.emplace_back();
        }
        b[a[x]].push_back(x);
      }
      out.push_back(b);
    };
    auto rec = [&](auto& self, std::size_t x, std::size_t m) -> void {
      if (x == n) {
        emit();
        return;
      }
      for (std::size_t v = 0; v <= m; ++v) {
        a[x] = v;
        self(self, x + 1, std::max(m, v + 1));
      }
    };
    if (n > 0) {
      a[0] = 0;
      rec(rec, 1, 1);
    }
    return out;
  }

  inline std::size_t degree(Blocks const& P) {
    std::size_t n = 0;
    for (auto const& b : P) {
      n += b.size();
    }
    return n;
  }

  inline std::size_t block_of(Blocks const& P, std::size_t x) {
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (std::find(P[i].begin(), P[i].end(), x) != P[i].end()) {
        return i;
      }
    }
    return P.size();
  }

  // x (f g) = (x f) g.
  inline Map compose(Map const& f, Map const& g) {
    Map h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      h[x] = g[f[x]];
    }
    return h;
  }

  // Target block of each block, or empty if some block straddles two.
  inline std::vector<std::size_t> block_targets(Map const& f, Blocks const& P) {
    std::vector<std::size_t> t;
    for (auto const& b : P) {
      std::size_t j = block_of(P, f[b.front()]);
      for (auto x : b) {
        if (block_of(P, f[x]) != j) {
          return {};
        }
      }
      t.push_back(j);
    }
    return t;
  }

  inline bool preserves(Map const& f, Blocks const& P) {
    return !block_targets(f, P).empty();
  }

  inline bool in_B(Map const& f, Blocks const& P) {
    auto t = block_targets(f, P);
    if (t.empty()) {
      return false;
    }
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) == t.end();
  }

  inline std::vector<Map> elements(Blocks const& P) {
    std::vector<Map> out;
    for (auto& f : all_maps(degree(P))) {
      if (in_B(f, P)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  inline bool bijective(Map const& f) {
    std::set<std::size_t> s(f.begin(), f.end());
    return s.size() == f.size();
  }

  inline std::set<std::size_t> image(Map const& f, std::vector<std::size_t> const& A) {
    std::set<std::size_t> s;
    for (auto x : A) {
      s.insert(f[x]);
    }
    return s;
  }

  inline std::vector<std::size_t> image_sizes(Map const& f, Blocks const& P) {
    std::vector<std::size_t> s;
    for (auto const& b : P) {
      s.push_back(image(f, b).size());
    }
    return s;
  }

  enum class Cond { subset, equal, same_size, at_most };

  // X_i f compared with X_{i alpha} g for every block i.
  inline bool per_block(Cond                            c,
                        std::vector<std::size_t> const& alpha,
                        Map const&                      f,
                        Map const&                      g,
                        Blocks const&                   P) {
    if (alpha.size() != P.size()) {
      return false;
    }
    std::vector<bool> used(P.size(), false);
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (alpha[i] >= P.size() || used[alpha[i]]) {
        return false;
      }
      used[alpha[i]] = true;
      auto const fi = image(f, P[i]);
      auto const ga = image(g, P[alpha[i]]);
      bool       ok = false;
      switch (c) {
        case Cond::subset:
          ok = std::includes(ga.begin(), ga.end(), fi.begin(), fi.end());
          break;
        case Cond::equal:
          ok = fi == ga;
          break;
        case Cond::same_size:
          ok = fi.size() == ga.size();
          break;
        case Cond::at_most:
          ok = fi.size() <= ga.size();
          break;
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  // Kernel as a set of classes.
  inline std::set<std::set<std::size_t>> kernel(Map const& f) {
    std::vector<std::set<std::size_t>> by_value(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      by_value[f[x]].insert(x);
    }
    std::set<std::set<std::size_t>> out;
    for (auto& c : by_value) {
      if (!c.empty()) {
        out.insert(c);
      }
    }
    return out;
  }

  // f u f = f for some bijection u in the given element list.
  inline bool unit_regular(Map const& f, std::vector<Map> const& S) {
    for (auto const& u : S) {
      if (bijective(u) && compose(compose(f, u), f) == f) {
        return true;
      }
    }
    return false;
  }

  // Principal ideals of every element of S, as sets of indices into S.
  struct Ideals {
    std::vector<std::set<std::size_t>> left, right, two_sided;
  };

  inline Ideals ideals(std::vector<Map> const& S) {
    auto index = [&](Map const& m) {
      return static_cast<std::size_t>(
          std::lower_bound(S.begin(), S.end(), m) - S.begin());
    };
    Ideals I;
    for (auto const& g : S) {
      std::set<std::size_t> l, r, j;
      for (auto const& h : S) {
        l.insert(index(compose(h, g)));
        r.insert(index(compose(g, h)));
      }
      for (auto const& h : S) {
        auto hg = compose(h, g);
        for (auto const& k : S) {
          j.insert(index(compose(hg, k)));
        }
      }
      I.left.push_back(std::move(l));
      I.right.push_back(std::move(r));
      I.two_sided.push_back(std::move(j));
    }
    return I;
  }

  // Sum over all bijections alpha of the blocks of prod_i |X_{i alpha}|^{|X_i|}.
  inline std::size_t formula(Blocks const& P) {
    std::vector<std::size_t> perm(P.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      perm[i] = i;
    }
    std::size_t total = 0;
    do {
      std::size_t term = 1;
      for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t k = 0; k < P[i].size(); ++k) {
          term *= P[perm[i]].size();
        }
      }
      total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  }

}  // namespace brute

#endif  // BXP_TESTS_BRUTE_HPP_
