#ifndef ARTKERNEL_CHARACTER_HPP
#define ARTKERNEL_CHARACTER_HPP

#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"
#include "artkernel/rational.hpp"

namespace artkernel {

// A character up to positive rescaling, stored as a primitive integral weight
// vector (gcd of the nonzero entries is 1). Restrictions to subgraphs keep the
// ambient values and may be identically zero; user-facing construction rejects
// the zero character.
class Character {
 public:
  Character() = default;

  static Character normalize(const std::map<VertexId, Rational>& raw) {
    if (raw.empty()) throw_input("empty_character", "character has no weights");
    long long scale = 1;
    bool any_nonzero = false;
    for (const auto& [v, q] : raw) {
      if (!q.is_zero()) any_nonzero = true;
      scale = lcm_checked(scale, q.den);
    }
    if (!any_nonzero) throw_input("zero_character", "the zero character is not allowed");
    Character f;
    long long g = 0;
    for (const auto& [v, q] : raw) {
      long long w = checked_mul(q.num, scale / q.den);
      f.weights_[v] = w;
      g = std::gcd(g, std::llabs(w));
    }
    for (auto& [v, w] : f.weights_) w /= g;
    return f;
  }

  static Character from_integers(const std::map<VertexId, long long>& raw) {
    std::map<VertexId, Rational> q;
    for (const auto& [v, w] : raw) q.emplace(v, Rational(w));
    return normalize(q);
  }

  // Restriction of f to s; value-preserving, may be identically zero.
  Character restrict_to(const VertexSet& s) const {
    Character out;
    for (const auto& v : s) out.weights_[v] = value(v);
    return out;
  }

  long long value(const VertexId& v) const {
    auto it = weights_.find(v);
    if (it == weights_.end()) throw_input("unknown_vertex", "character has no weight for '" + v + "'");
    return it->second;
  }

  const std::map<VertexId, long long>& weights() const { return weights_; }

  VertexSet support() const {
    VertexSet out;
    for (const auto& [v, w] : weights_)
      if (w != 0) out.push_back(v);
    return out;
  }

  bool is_zero() const {
    for (const auto& [v, w] : weights_)
      if (w != 0) return false;
    return true;
  }

  // Keys must coincide with the graph's vertex list.
  void check_keys(const Graph& g) const {
    if (static_cast<int>(weights_.size()) != g.vertex_count())
      throw_input("character_key_mismatch", "character must assign a weight to every vertex");
    for (const auto& [v, w] : weights_)
      if (!g.has_vertex(v))
        throw_input("character_key_mismatch", "character weight for unknown vertex '" + v + "'");
  }

 private:
  std::map<VertexId, long long> weights_;
};

// Generator d of the image subgroup dZ = f(A_s); d = 0 encodes the trivial
// image (f vanishing on all of s).
inline long long image_on(const Character& f, const VertexSet& s) {
  if (s.empty()) throw_input("empty_subset", "image_on requires a nonempty subset");
  long long d = 0;
  for (const auto& v : s) d = std::gcd(d, std::llabs(f.value(v)));
  return d;
}

struct ExtendedIndex {
  bool infinite = false;
  long long value = 1;

  static ExtendedIndex finite(long long v) { return {false, v}; }
  static ExtendedIndex inf() { return {true, 0}; }
  std::string str() const { return infinite ? "infinite" : std::to_string(value); }
};

// [f(A_ambient) : f(A_sub)] as an extended index.
inline ExtendedIndex index_of_subgraph(const Character& f, const VertexSet& ambient,
                                       const VertexSet& sub) {
  if (!set_subset(sub, ambient))
    throw_input("not_subset", "index requires sub to be contained in ambient");
  long long da = image_on(f, ambient);
  if (da == 0) throw_input("trivial_image", "ambient image of the character is trivial");
  long long ds = image_on(f, sub);
  if (ds == 0) return ExtendedIndex::inf();
  require_internal(ds % da == 0, "image generator of subgraph must be a multiple of ambient's");
  return ExtendedIndex::finite(ds / da);
}

inline VertexSet living_subgraph(const Character& f, const Graph& g) {
  f.check_keys(g);
  VertexSet out;
  for (const auto& v : g.vertices())
    if (f.value(v) != 0) out.push_back(v);
  return out;
}

inline VertexSet dead_subgraph(const Character& f, const Graph& g) {
  f.check_keys(g);
  VertexSet out;
  for (const auto& v : g.vertices())
    if (f.value(v) == 0) out.push_back(v);
  return out;
}

// Meier-VanWyk criterion: ker(f) is finitely generated iff the living
// subgraph is connected and dominating (every vertex lies in it or is
// adjacent to it).
inline bool kernel_is_fg(const Character& f, const Graph& g) {
  require_connected(g, "kernel_is_fg");
  f.check_keys(g);
  auto living = living_subgraph(f, g);
  if (living.empty()) throw_input("zero_character", "the zero character is not allowed");
  if (!is_connected(full_subgraph(g, living))) return false;
  for (const auto& v : g.vertices()) {
    if (set_contains(living, v)) continue;
    bool dominated = false;
    for (int w : g.neighbors(g.index_of(v)))
      if (f.value(g.name(w)) != 0) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

enum class KernelClass { FinitelyGenerated, Wild };

struct Classification {
  KernelClass kind = KernelClass::FinitelyGenerated;
  VertexSet living, dead;
  // Wild witness: a separating subgraph contained in the dead subgraph.
  VertexSet witness;
  // "dead_subgraph" when the living subgraph is disconnected, otherwise
  // "link" with the offending vertex.
  std::string witness_kind;
  VertexId link_vertex;
};

inline Classification classify(const Character& f, const Graph& g) {
  require_connected(g, "classify");
  f.check_keys(g);
  Classification res;
  res.living = living_subgraph(f, g);
  res.dead = dead_subgraph(f, g);
  if (res.living.empty()) throw_input("zero_character", "the zero character is not allowed");
  if (kernel_is_fg(f, g)) {
    res.kind = KernelClass::FinitelyGenerated;
    return res;
  }
  res.kind = KernelClass::Wild;
  if (!is_connected(full_subgraph(g, res.living))) {
    res.witness = res.dead;
    res.witness_kind = "dead_subgraph";
    require_internal(is_separating(g, res.witness), "dead subgraph must separate");
    return res;
  }
  // Living subgraph connected but not dominating: some vertex's link is dead.
  VertexSet best_link;
  VertexId best_vertex;
  for (const auto& v : g.vertices()) {
    if (f.value(v) != 0) continue;
    bool all_dead = true;
    VertexSet link;
    for (int w : g.neighbors(g.index_of(v))) {
      link.push_back(g.name(w));
      if (f.value(g.name(w)) != 0) all_dead = false;
    }
    std::sort(link.begin(), link.end());
    if (!all_dead) continue;
    if (best_link.empty() || link < best_link) {
      best_link = link;
      best_vertex = v;
    }
  }
  require_internal(!best_link.empty(), "non-dominating living subgraph must leave a dead link");
  res.witness = best_link;
  res.witness_kind = "link";
  res.link_vertex = best_vertex;
  require_internal(is_separating(g, res.witness) && set_subset(res.witness, res.dead),
                   "wild witness must be separating and dead");
  return res;
}

// Kernel classes of restrictions, where the restricted graph may be
// disconnected or the restriction may vanish.
enum class RestrictionClass { Zero, FgKernel, NonFgKernel };

inline RestrictionClass classify_restriction(const Graph& piece, const Character& f_piece) {
  f_piece.check_keys(piece);
  if (f_piece.is_zero()) return RestrictionClass::Zero;
  if (!is_connected(piece)) return RestrictionClass::NonFgKernel;
  return kernel_is_fg(f_piece, piece) ? RestrictionClass::FgKernel : RestrictionClass::NonFgKernel;
}

inline std::string restriction_class_name(RestrictionClass c) {
  switch (c) {
    case RestrictionClass::Zero:
      return "zero";
    case RestrictionClass::FgKernel:
      return "fg_kernel";
    case RestrictionClass::NonFgKernel:
      return "non_fg_kernel";
  }
  return "?";
}

// Free-product report for a disconnected graph: the RAAG splits as the free
// product over connected components; classify itself refuses such input.
struct ComponentReport {
  VertexSet component;
  RestrictionClass restriction;
};

inline std::vector<ComponentReport> component_free_product(const Character& f, const Graph& g) {
  f.check_keys(g);
  std::vector<ComponentReport> out;
  for (const auto& comp : connected_components(g)) {
    ComponentReport r;
    r.component = comp;
    r.restriction = classify_restriction(full_subgraph(g, comp), f.restrict_to(comp));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace artkernel

#endif  // ARTKERNEL_CHARACTER_HPP
