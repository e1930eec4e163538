#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ellschub/ring/poly.hpp"

namespace ellschub {

class VarRegistry {
 public:
  VarRegistry() = default;
  explicit VarRegistry(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  int index_of(const std::string& name) const noexcept;  // -1 when absent
  int require(const std::string& name) const;             // throws UnknownVariable

 private:
  std::vector<std::string> names_;
};

struct RingConfig {
  // Denominators of larger total degree are stored without gcd reduction.
  unsigned gcd_degree_bound = 400;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variables plus a fixed table of irreducible factors ("atoms") that
// denominators are factored over. Atoms are primitive with positive leading
// coefficient and must be irreducible in Z[x]; callers guarantee this.
class Ring {
 public:
  static RingPtr create(std::vector<std::string> names, std::vector<Poly> atoms = {}, RingConfig config = {});

  const VarRegistry& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const RingConfig& config() const noexcept { return config_; }

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const Poly& atom(std::uint32_t id) const { return atoms_.at(id); }
  std::uint32_t atom_mask(std::uint32_t id) const { return atom_masks_.at(id); }
  std::optional<std::uint32_t> find_atom(const Poly& p) const;
  const Poly& atom_power(std::uint32_t id, std::uint32_t e) const;

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

 private:
  Ring(VarRegistry vars, std::vector<Poly> atoms, RingConfig config);

  VarRegistry vars_;
  std::vector<Poly> atoms_;
  std::vector<std::uint32_t> atom_masks_;
  std::unordered_map<Poly, std::uint32_t, PolyHash> atom_index_;
  RingConfig config_;
  mutable std::shared_mutex pow_mutex_;
  mutable std::unordered_map<std::uint64_t, Poly> pow_cache_;
};

}  // namespace ellschub
