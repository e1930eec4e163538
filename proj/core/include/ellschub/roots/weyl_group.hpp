#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "ellschub/roots/root_system.hpp"

namespace ellschub {

// Index of an element in its WeylGroup. Elements are numbered by length,
// then by shortlex reduced word, so the identity is 0.
using WeylElem = std::uint32_t;
using Word = std::vector<int>;  // generator indices, not labels

class WeylGroup;
using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1000000;
  static WeylGroupPtr build(RootSystemPtr system, std::size_t cap = kDefaultCap);
  static WeylGroupPtr build(const CartanSpec& spec, std::size_t cap = kDefaultCap) {
    return build(RootSystem::build(spec), cap);
  }

  const RootSystem& system() const noexcept { return *system_; }
  const RootSystemPtr& system_ptr() const noexcept { return system_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return lengths_.size(); }
  WeylElem identity() const noexcept { return 0; }
  WeylElem longest() const noexcept { return static_cast<WeylElem>(size() - 1); }
  int max_length() const noexcept { return lengths_.back(); }

  int length(WeylElem w) const { return lengths_[w]; }
  const Word& word(WeylElem w) const { return words_[w]; }
  WeylElem lmul(int i, WeylElem w) const { return left_[w * rank_ + i]; }   // s_i w
  WeylElem rmul(WeylElem w, int i) const { return right_[w * rank_ + i]; }  // w s_i
  WeylElem generator(int i) const { return right_[i]; }
  WeylElem mul(WeylElem a, WeylElem b) const;
  WeylElem inverse(WeylElem w) const { return inverse_[w]; }
  WeylElem from_word(std::span<const int> word) const;
  bool is_left_descent(int i, WeylElem w) const { return length(lmul(i, w)) < length(w); }
  bool is_right_descent(WeylElem w, int i) const { return length(rmul(w, i)) < length(w); }

  // w(alpha_j) in simple-root coordinates.
  RootVec simple_image(WeylElem w, int j) const;
  RootVec act(WeylElem w, const RootVec& lambda) const;

  bool bruhat_leq(WeylElem v, WeylElem w) const;
  WeylElem reflection(const RootVec& beta) const;
  std::vector<RootVec> pos_pos_set(WeylElem w) const;
  std::vector<Word> reduced_words(WeylElem w) const;

  // Classical signed-permutation model: entry k is w(k) in one-line
  // notation (type A) or window notation (types B, C, D).
  bool has_window() const noexcept { return system_->has_epsilon(); }
  const std::vector<int>& window(WeylElem w) const;
  WeylElem from_window(const std::vector<int>& win) const;

  // Text forms: one-line "312", window "2 -1 3", G2 words "s1s2".
  std::string format(WeylElem w) const;
  WeylElem parse(const std::string& text) const;
  std::string format_word(const Word& w) const;  // labels "1,2,1"; "" for the empty word
  Word parse_word(const std::string& text) const;

 private:
  WeylGroup() = default;

  RootSystemPtr system_;
  int rank_ = 0;
  std::vector<int> images_;  // size * rank * rank
  std::vector<int> lengths_;
  std::vector<Word> words_;
  std::vector<WeylElem> left_, right_, inverse_;
  std::vector<std::vector<int>> windows_;
  std::map<std::vector<int>, WeylElem> by_window_;
  std::map<std::vector<int>, WeylElem> by_images_;
  mutable std::mutex refl_mutex_;
  mutable std::map<RootVec, WeylElem> refl_cache_;
};

}  // namespace ellschub
