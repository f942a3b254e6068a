#include "lexsemi/posets.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "lexsemi/error.hpp"

namespace lexsemi {
namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const FinPoset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size(), false));
  for (auto [i, j] : p.strict_pairs()) m[i - 1][j - 1] = true;
  return m;
}

FinPoset from_matrix(const Matrix& m) {
  std::vector<FinPoset::Pair> pairs;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j]) pairs.emplace_back(int(i) + 1, int(j) + 1);
    }
  }
  return FinPoset::from_pairs(m.size(), pairs);
}

// Backtracking search for the minimal code. The code appends, for the k-th
// placed vertex v and every earlier placed u, the bits (u<v, v<u); a partial
// assignment therefore fixes a prefix of the code and can be pruned.
class Canonicalizer {
 public:
  explicit Canonicalizer(const FinPoset& p) : m_(to_matrix(p)), n_(p.size()) {
    std::vector<std::pair<int, int>> degree(n_, {0, 0});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (m_[j][i]) ++degree[i].first;
        if (m_[i][j]) ++degree[i].second;
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return degree[a] < degree[b];
    });
    // slot_class_[k]: the invariant the vertex placed at slot k must have.
    for (int v : order_) slot_class_.push_back(degree[v]);
    degree_ = std::move(degree);
  }

  FinPoset run() {
    placed_.clear();
    used_.assign(n_, false);
    code_.clear();
    best_.clear();
    have_best_ = false;
    search();
    Matrix out(n_, std::vector<bool>(n_, false));
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        out[a][b] = m_[best_placement_[a]][best_placement_[b]];
      }
    }
    return from_matrix(out);
  }

 private:
  void search() {
    const std::size_t k = placed_.size();
    if (k == n_) {
      if (!have_best_ || code_ < best_) {
        best_ = code_;
        best_placement_ = placed_;
        have_best_ = true;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || degree_[v] != slot_class_[k]) continue;
      const std::size_t mark = code_.size();
      for (int u : placed_) {
        code_.push_back(m_[u][v]);
        code_.push_back(m_[v][u]);
      }
      if (have_best_ && std::lexicographical_compare(
                            best_.begin(), best_.begin() + code_.size(),
                            code_.begin(), code_.end())) {
        code_.resize(mark);
        continue;
      }
      used_[v] = true;
      placed_.push_back(static_cast<int>(v));
      search();
      placed_.pop_back();
      used_[v] = false;
      code_.resize(mark);
    }
  }

  Matrix m_;
  std::size_t n_;
  std::vector<int> order_;
  std::vector<std::pair<int, int>> degree_;
  std::vector<std::pair<int, int>> slot_class_;
  std::vector<int> placed_;
  std::vector<bool> used_;
  std::vector<bool> code_;
  std::vector<bool> best_;
  std::vector<int> best_placement_;
  bool have_best_ = false;
};

}  // namespace

FinPoset FinPoset::from_pairs(std::size_t n, std::span<const Pair> pairs) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || std::size_t(i) > n || std::size_t(j) > n) {
      throw DomainError("poset pair " + std::to_string(i) + "<" +
                        std::to_string(j) + " out of range 1.." +
                        std::to_string(n));
    }
    m[i - 1][j - 1] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) m[i][j] = true;
      }
    }
  }
  FinPoset p;
  p.n_ = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i]) throw DomainError("poset relation contains a cycle");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j]) p.pairs_.emplace_back(int(i) + 1, int(j) + 1);
    }
  }
  return p;
}

bool FinPoset::less(int i, int j) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
}

std::vector<FinPoset::Pair> FinPoset::covering_pairs() const {
  std::vector<Pair> out;
  for (auto [i, j] : pairs_) {
    bool covered = true;
    for (int k = 1; k <= int(n_) && covered; ++k) {
      if (less(i, k) && less(k, j)) covered = false;
    }
    if (covered) out.emplace_back(i, j);
  }
  return out;
}

bool FinPoset::is_chain() const { return pairs_.size() == n_ * (n_ - 1) / 2; }

FinPoset chain_poset(std::size_t n) {
  std::vector<FinPoset::Pair> pairs;
  for (int i = 1; i < int(n); ++i) pairs.emplace_back(i, i + 1);
  return FinPoset::from_pairs(n, pairs);
}

FinPoset relabel(const FinPoset& p, std::span<const int> new_label) {
  if (new_label.size() != p.size()) {
    throw DomainError("relabeling has the wrong length");
  }
  std::vector<FinPoset::Pair> pairs;
  for (auto [i, j] : p.strict_pairs()) {
    pairs.emplace_back(new_label[i - 1], new_label[j - 1]);
  }
  return FinPoset::from_pairs(p.size(), pairs);
}

bool is_connected(const FinPoset& p) {
  const std::size_t n = p.size();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (auto [i, j] : p.strict_pairs()) {
    const std::size_t a = find(i - 1);
    const std::size_t b = find(j - 1);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

FinPoset canonical_form(const FinPoset& p) {
  if (p.size() > kCanonicalFormLimit) {
    throw SizeLimitError("canonical_form supports at most " +
                         std::to_string(kCanonicalFormLimit) +
                         " vertices, got " + std::to_string(p.size()));
  }
  return Canonicalizer(p).run();
}

bool isomorphic(const FinPoset& p, const FinPoset& q) {
  if (p.size() != q.size() ||
      p.strict_pairs().size() != q.strict_pairs().size()) {
    if (p.size() > kCanonicalFormLimit || q.size() > kCanonicalFormLimit) {
      throw SizeLimitError("isomorphic supports at most " +
                           std::to_string(kCanonicalFormLimit) + " vertices");
    }
    return false;
  }
  return canonical_form(p) == canonical_form(q);
}

}  // namespace lexsemi
