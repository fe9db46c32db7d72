#ifndef ARTKERNEL_GROUP_HPP
#define ARTKERNEL_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "artkernel/character.hpp"
#include "artkernel/errors.hpp"
#include "artkernel/graph.hpp"

namespace artkernel {

// Recursive description of a group appearing in a decomposition.
//
//   FreeAbelian(n)           Z^n (n = 0 is the trivial group)
//   Free(n) / Free(inf)      F_n, possibly of infinite rank
//   FreeProduct[...]         free product of the factors
//   UnresolvedKernel(s, f)   ker(f|_{A_s}), finitely generated, not yet split
//   WildKernel(s, f)         ker(f|_{A_s}), known not finitely generated
struct GroupDescriptor {
  enum class Kind { FreeAbelian, Free, FreeProduct, UnresolvedKernel, WildKernel };

  Kind kind = Kind::FreeAbelian;
  long long rank = 0;          // FreeAbelian, finite Free
  bool infinite_rank = false;  // Free only
  std::vector<GroupDescriptor> factors;
  VertexSet subgraph;   // kernels only
  Character character;  // kernels only; restriction of the ambient character

  static GroupDescriptor free_abelian(long long n) {
    GroupDescriptor d;
    d.kind = Kind::FreeAbelian;
    d.rank = n;
    return d;
  }
  static GroupDescriptor free_group(long long n) {
    GroupDescriptor d;
    d.kind = Kind::Free;
    d.rank = n;
    return d;
  }
  static GroupDescriptor free_group_infinite() {
    GroupDescriptor d;
    d.kind = Kind::Free;
    d.infinite_rank = true;
    return d;
  }
  static GroupDescriptor free_product(std::vector<GroupDescriptor> fs) {
    GroupDescriptor d;
    d.kind = Kind::FreeProduct;
    d.factors = std::move(fs);
    return d;
  }
  static GroupDescriptor unresolved_kernel(VertexSet s, Character f) {
    GroupDescriptor d;
    d.kind = Kind::UnresolvedKernel;
    d.subgraph = std::move(s);
    d.character = std::move(f);
    return d;
  }
  static GroupDescriptor wild_kernel(VertexSet s, Character f) {
    GroupDescriptor d;
    d.kind = Kind::WildKernel;
    d.subgraph = std::move(s);
    d.character = std::move(f);
    return d;
  }

  bool is_trivial() const {
    if (kind == Kind::FreeAbelian || kind == Kind::Free)
      return !infinite_rank && rank == 0;
    if (kind == Kind::FreeProduct) {
      for (const auto& f : factors)
        if (!f.is_trivial()) return false;
      return true;
    }
    return false;
  }

  // Rank as an abstract group when it is determined by the descriptor;
  // nullopt for kernels and infinite-rank free groups.
  std::optional<long long> rank_if_known() const {
    switch (kind) {
      case Kind::FreeAbelian:
        return rank;
      case Kind::Free:
        if (infinite_rank) return std::nullopt;
        return rank;
      case Kind::FreeProduct: {
        long long total = 0;
        for (const auto& f : factors) {
          auto r = f.rank_if_known();
          if (!r) return std::nullopt;
          total += *r;
        }
        return total;
      }
      default:
        return std::nullopt;
    }
  }

  std::string label() const {
    switch (kind) {
      case Kind::FreeAbelian:
        if (rank == 0) return "1";
        if (rank == 1) return "Z";
        return "Z^" + std::to_string(rank);
      case Kind::Free:
        if (infinite_rank) return "F_inf";
        return "F_" + std::to_string(rank);
      case Kind::FreeProduct: {
        std::string s;
        for (const auto& f : factors) {
          if (!s.empty()) s += " * ";
          s += f.label();
        }
        return s.empty() ? "1" : s;
      }
      case Kind::UnresolvedKernel:
      case Kind::WildKernel: {
        std::string s = kind == Kind::WildKernel ? "ker!(" : "ker(";
        for (std::size_t i = 0; i < subgraph.size(); ++i) {
          if (i) s += ",";
          s += subgraph[i];
        }
        return s + ")";
      }
    }
    return "?";
  }
};

namespace detail {

inline int kind_order(GroupDescriptor::Kind k) {
  switch (k) {
    case GroupDescriptor::Kind::Free:
      return 0;
    case GroupDescriptor::Kind::FreeAbelian:
      return 1;
    case GroupDescriptor::Kind::FreeProduct:
      return 2;
    case GroupDescriptor::Kind::UnresolvedKernel:
      return 3;
    case GroupDescriptor::Kind::WildKernel:
      return 4;
  }
  return 5;
}

inline bool descriptor_less(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.kind != b.kind) return kind_order(a.kind) < kind_order(b.kind);
  if (a.rank != b.rank) return a.rank > b.rank;
  return a.subgraph < b.subgraph;
}

}  // namespace detail

// Canonical free-product form: nested products flattened, free factors merged
// into one leading factor, trivial factors dropped. A single surviving factor
// is returned bare; the trivial group becomes FreeAbelian(0).
inline GroupDescriptor canonical_free_product(const std::vector<GroupDescriptor>& factors) {
  long long free_rank = 0;
  bool free_infinite = false;
  std::vector<GroupDescriptor> rest;
  std::function<void(const GroupDescriptor&)> absorb = [&](const GroupDescriptor& d) {
    switch (d.kind) {
      case GroupDescriptor::Kind::Free:
        if (d.infinite_rank)
          free_infinite = true;
        else
          free_rank += d.rank;
        break;
      case GroupDescriptor::Kind::FreeProduct:
        for (const auto& f : d.factors) absorb(f);
        break;
      default:
        if (!d.is_trivial()) rest.push_back(d);
        break;
    }
  };
  for (const auto& d : factors) absorb(d);
  std::sort(rest.begin(), rest.end(), detail::descriptor_less);
  std::vector<GroupDescriptor> out;
  if (free_infinite)
    out.push_back(GroupDescriptor::free_group_infinite());
  else if (free_rank > 0)
    out.push_back(GroupDescriptor::free_group(free_rank));
  for (auto& d : rest) out.push_back(std::move(d));
  if (out.empty()) return GroupDescriptor::free_abelian(0);
  if (out.size() == 1) return out.front();
  return GroupDescriptor::free_product(std::move(out));
}

}  // namespace artkernel

#endif  // ARTKERNEL_GROUP_HPP
