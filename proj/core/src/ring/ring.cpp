#include "ellschub/ring/ring.hpp"

#include <mutex>
#include <set>

#include "ellschub/errors.hpp"

namespace ellschub {

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(Monomial::kMaxVars)) {
    throw Error(ErrorKind::RegistryFull, "at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::Parse, "empty variable name");
    if (!seen.insert(n).second) throw Error(ErrorKind::Parse, "duplicate variable name " + n);
  }
}

int VarRegistry::index_of(const std::string& name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int VarRegistry::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw Error(ErrorKind::UnknownVariable, "unknown variable " + name);
  return i;
}

RingPtr Ring::create(std::vector<std::string> names, std::vector<Poly> atoms, RingConfig config) {
  return RingPtr(new Ring(VarRegistry(std::move(names)), std::move(atoms), config));
}

Ring::Ring(VarRegistry vars, std::vector<Poly> atoms, RingConfig config) : vars_(std::move(vars)), config_(config) {
  for (auto& a : atoms) {
    if (a.is_constant() || a.is_monomial()) continue;
    a.make_primitive();
    if (!a.monomial_content().is_one()) throw Error(ErrorKind::Parse, "atom has a monomial factor");
    if (atom_index_.count(a)) continue;
    auto id = static_cast<std::uint32_t>(atoms_.size());
    atom_index_.emplace(a, id);
    atom_masks_.push_back(a.var_mask());
    atoms_.push_back(std::move(a));
  }
}

std::optional<std::uint32_t> Ring::find_atom(const Poly& p) const {
  auto it = atom_index_.find(p);
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

const Poly& Ring::atom_power(std::uint32_t id, std::uint32_t e) const {
  if (e == 1) return atoms_.at(id);
  std::uint64_t key = (static_cast<std::uint64_t>(id) << 32) | e;
  {
    std::shared_lock lock(pow_mutex_);
    auto it = pow_cache_.find(key);
    if (it != pow_cache_.end()) return it->second;
  }
  Poly p = atoms_.at(id).pow(e);
  std::unique_lock lock(pow_mutex_);
  auto [it, inserted] = pow_cache_.emplace(key, std::move(p));
  return it->second;
}

}  // namespace ellschub
