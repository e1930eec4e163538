#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ellschub {

enum class Family { A, B, C, D, G2 };

const char* family_name(Family f);
Family parse_family(const std::string& s);

struct CartanSpec {
  Family family = Family::A;
  int rank = 1;
  std::string name() const;  // "A2", "C3", "G2"
};

// Integer vector in the basis of simple roots.
using RootVec = std::vector<int>;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Generators are indexed 0..rank-1 internally. Labels follow the usual
// conventions: A and G2 count from 1, B, C and D from 0 (alpha_0 is the
// special root, alpha_i = e_{i+1} - e_i for i >= 1).
class RootSystem {
 public:
  static RootSystemPtr build(const CartanSpec& spec);

  const CartanSpec& spec() const noexcept { return spec_; }
  Family family() const noexcept { return spec_.family; }
  int rank() const noexcept { return spec_.rank; }

  // <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  int symmetrizer(int i) const { return sym_[i]; }
  int pairing(const RootVec& lambda, int i) const;  // <lambda, alpha_i^vee>
  RootVec reflect(int i, const RootVec& lambda) const;

  int label(int g) const;
  int generator(int label) const;  // throws InvalidWord
  std::string label_string(int g) const { return std::to_string(label(g)); }

  RootVec simple_root(int i) const;
  const std::vector<RootVec>& positive_roots() const noexcept { return positive_; }
  std::size_t num_positive() const noexcept { return positive_.size(); }
  // Index into positive_roots() of +-lambda, if lambda is a root.
  std::optional<int> positive_index(const RootVec& lambda) const;
  bool is_root(const RootVec& lambda) const { return positive_index(lambda).has_value(); }
  static bool is_positive(const RootVec& lambda);

  // Epsilon coordinates for the classical families.
  bool has_epsilon() const noexcept { return spec_.family != Family::G2; }
  int n() const noexcept;  // number of epsilon coordinates
  std::vector<int> to_epsilon(const RootVec& lambda) const;
  RootVec from_epsilon(const std::vector<int>& e) const;

  // Action of generator g on a signed epsilon index (+-1..+-n).
  int act_on_signed_index(int g, int value) const;

  // Bracket notation of y_lambda ("[13]", "[-12]"); empty when unavailable.
  std::string bracket(const RootVec& lambda) const;
  // Root lambda with y_lambda = [text]; throws Parse.
  RootVec parse_bracket(const std::string& text) const;

 private:
  explicit RootSystem(const CartanSpec& spec);
  void enumerate_roots();

  CartanSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<std::vector<int>> simple_eps_;
  std::vector<RootVec> positive_;
  std::map<RootVec, int> index_;
};

std::string format_root(const RootVec& v);

}  // namespace ellschub
