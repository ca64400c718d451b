#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <vector>

#include "cantor/bitstring.hpp"
#include "cantor/errors.hpp"
#include "cantor/rational.hpp"

namespace cantor {

namespace detail {

// Binary trie used only during canonicalization. A node is "full" when the
// whole cylinder at that node is covered by the inserted generators.
struct TrieNode {
  bool covered = false;
  std::unique_ptr<TrieNode> child[2];
};

inline void trie_insert(TrieNode& node, const BitString& sigma, std::size_t at) {
  if (node.covered) return;  // absorbed by a shorter generator
  if (at == sigma.length()) {
    node.covered = true;
    node.child[0].reset();
    node.child[1].reset();
    return;
  }
  int b = sigma.bit(at);
  if (!node.child[b]) node.child[b] = std::make_unique<TrieNode>();
  trie_insert(*node.child[b], sigma, at + 1);
}

inline bool trie_full(const TrieNode& node) {
  if (node.covered) return true;
  return node.child[0] && node.child[1] && trie_full(*node.child[0]) &&
         trie_full(*node.child[1]);
}

inline void trie_emit(const TrieNode& node, std::string& prefix,
                      std::vector<BitString>& out) {
  if (trie_full(node)) {
    out.emplace_back(prefix);
    return;
  }
  for (int b = 0; b < 2; ++b) {
    if (!node.child[b]) continue;
    prefix.push_back(b ? '1' : '0');
    trie_emit(*node.child[b], prefix, out);
    prefix.pop_back();
  }
}

// Complement within the full space: at a node not covered, a missing child
// means the sibling cylinder lies entirely outside the set.
inline void trie_complement(const TrieNode& node, std::string& prefix,
                            std::vector<BitString>& out) {
  if (node.covered) return;
  if (!node.child[0] && !node.child[1]) {
    out.emplace_back(prefix);
    return;
  }
  for (int b = 0; b < 2; ++b) {
    prefix.push_back(b ? '1' : '0');
    if (node.child[b]) {
      trie_complement(*node.child[b], prefix, out);
    } else {
      out.emplace_back(prefix);
    }
    prefix.pop_back();
  }
}

}  // namespace detail

/// A clopen subset of Cantor space as a canonical finite union of cylinders:
/// the generators form a prefix-free antichain with sibling pairs merged to
/// fixpoint, so extensional equality is syntactic equality of the sorted
/// generator list. These are the only objects with unconditionally exact
/// measure.
class ClopenSet {
 public:
  ClopenSet() = default;  // the empty set

  static ClopenSet empty_set() { return ClopenSet(); }

  static ClopenSet full() { return cylinder(BitString()); }

  static ClopenSet cylinder(const BitString& sigma) {
    ClopenSet s;
    s.generators_.push_back(sigma);
    return s;
  }

  static ClopenSet normalized(const std::vector<BitString>& generators) {
    detail::TrieNode root;
    for (const auto& g : generators) detail::trie_insert(root, g, 0);
    ClopenSet s;
    std::string prefix;
    detail::trie_emit(root, prefix, s.generators_);
    std::sort(s.generators_.begin(), s.generators_.end());
    return s;
  }

  const std::vector<BitString>& generators() const { return generators_; }

  bool is_empty() const { return generators_.empty(); }
  bool is_full() const { return generators_.size() == 1 && generators_[0].empty(); }

  std::size_t max_generator_length() const {
    std::size_t m = 0;
    for (const auto& g : generators_) m = std::max(m, g.length());
    return m;
  }

  // Generators are pairwise disjoint, so the measure is a plain sum.
  Rational measure() const {
    Rational total(0);
    for (const auto& g : generators_) total += cylinder_measure(g);
    return total;
  }

  // [sigma] subseteq this; exact because of canonicity.
  bool contains_cylinder(const BitString& sigma) const {
    for (const auto& g : generators_)
      if (g.is_prefix_of(sigma)) return true;
    return false;
  }

  CylinderFit classify(const PointPrefix& y) const {
    bool undecided = false;
    for (const auto& g : generators_) {
      switch (classify_cylinder(g, y)) {
        case CylinderFit::Inside: return CylinderFit::Inside;
        case CylinderFit::Undecided: undecided = true; break;
        case CylinderFit::Outside: break;
      }
    }
    return undecided ? CylinderFit::Undecided : CylinderFit::Outside;
  }

  bool subset_of(const ClopenSet& other) const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [&](const BitString& g) { return other.contains_cylinder(g); });
  }

  friend ClopenSet operator|(const ClopenSet& a, const ClopenSet& b) {
    std::vector<BitString> gens = a.generators_;
    gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
    return normalized(gens);
  }

  friend ClopenSet operator&(const ClopenSet& a, const ClopenSet& b) {
    std::vector<BitString> gens;
    for (const auto& ga : a.generators_)
      for (const auto& gb : b.generators_) {
        // [ga] and [gb] intersect exactly when one extends the other, and
        // then the intersection is the longer cylinder.
        if (ga.is_prefix_of(gb)) gens.push_back(gb);
        else if (gb.is_prefix_of(ga)) gens.push_back(ga);
      }
    return normalized(gens);
  }

  friend ClopenSet operator~(const ClopenSet& a) {
    detail::TrieNode root;
    for (const auto& g : a.generators_) detail::trie_insert(root, g, 0);
    ClopenSet s;
    std::string prefix;
    detail::trie_complement(root, prefix, s.generators_);
    std::sort(s.generators_.begin(), s.generators_.end());
    return s;
  }

  friend ClopenSet operator-(const ClopenSet& a, const ClopenSet& b) { return a & ~b; }

  bool operator==(const ClopenSet&) const = default;

 private:
  std::vector<BitString> generators_;  // sorted canonical antichain
};

inline ClopenSet normalize(const std::vector<BitString>& generators) {
  return ClopenSet::normalized(generators);
}

// All length-d strings whose cylinders lie inside A. |result| / 2^d is the
// measure of A; this is the brute-force oracle behind the acceptance tests.
inline std::vector<BitString> members_at_depth(const ClopenSet& a, std::size_t d) {
  require(d >= a.max_generator_length(), ErrorKind::DepthTooSmall,
          "depth " + std::to_string(d) + " below max generator length " +
              std::to_string(a.max_generator_length()));
  std::vector<BitString> out;
  for (const auto& g : a.generators()) {
    std::size_t free_bits = d - g.length();
    // Generators are disjoint, so extensions never repeat across generators.
    for (Integer v = 0; v < pow2_int(free_bits); ++v) {
      std::string bits = g.str();
      for (std::size_t i = 0; i < free_bits; ++i)
        bits.push_back(bit_test(v, static_cast<unsigned>(free_bits - 1 - i)) ? '1' : '0');
      out.emplace_back(bits);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cantor
