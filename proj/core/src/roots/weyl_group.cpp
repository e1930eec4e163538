#include "ellschub/roots/weyl_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "ellschub/errors.hpp"

namespace ellschub {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '*') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

WeylGroupPtr WeylGroup::build(RootSystemPtr system, std::size_t cap) {
  std::shared_ptr<WeylGroup> g(new WeylGroup());
  const RootSystem& rs = *system;
  const int r = rs.rank();
  g->system_ = system;
  g->rank_ = r;

  // breadth-first closure on the images of the simple roots
  std::vector<std::vector<int>> imgs;
  std::vector<int> len;
  std::unordered_map<std::vector<int>, WeylElem, VecHash> index;
  std::vector<int> id(r * r, 0);
  for (int j = 0; j < r; ++j) id[j * r + j] = 1;
  imgs.push_back(id);
  len.push_back(0);
  index.emplace(id, 0);
  std::vector<WeylElem> right_old;
  for (std::size_t head = 0; head < imgs.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      const std::vector<int> cur = imgs[head];
      std::vector<int> nxt(r * r);
      for (int j = 0; j < r; ++j) {
        int a = rs.cartan(i, j);
        for (int k = 0; k < r; ++k) nxt[j * r + k] = cur[j * r + k] - a * cur[i * r + k];
      }
      auto it = index.find(nxt);
      WeylElem e;
      if (it == index.end()) {
        if (imgs.size() >= cap) {
          throw Error(ErrorKind::GroupTooLarge, "Weyl group of " + rs.spec().name() + " exceeds " + std::to_string(cap) + " elements");
        }
        e = static_cast<WeylElem>(imgs.size());
        index.emplace(nxt, e);
        imgs.push_back(std::move(nxt));
        len.push_back(len[head] + 1);
      } else {
        e = it->second;
      }
      right_old.push_back(e);
    }
  }
  const std::size_t size = imgs.size();
  std::vector<WeylElem> left_old(size * r);
  for (std::size_t w = 0; w < size; ++w) {
    for (int i = 0; i < r; ++i) {
      std::vector<int> nxt(imgs[w]);
      for (int j = 0; j < r; ++j) {
        int p = 0;
        for (int k = 0; k < r; ++k) p += nxt[j * r + k] * rs.cartan(i, k);
        nxt[j * r + i] -= p;
      }
      left_old[w * r + i] = index.at(nxt);
    }
  }
  // shortlex words by greedy left descents, elements already in length order
  std::vector<Word> words_old(size);
  for (std::size_t w = 1; w < size; ++w) {
    for (int i = 0; i < r; ++i) {
      WeylElem v = left_old[w * r + i];
      if (len[v] < len[w]) {
        words_old[w].push_back(i);
        words_old[w].insert(words_old[w].end(), words_old[v].begin(), words_old[v].end());
        break;
      }
    }
  }
  std::vector<WeylElem> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](WeylElem a, WeylElem b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return words_old[a] < words_old[b];
  });
  std::vector<WeylElem> renum(size);
  for (std::size_t k = 0; k < size; ++k) renum[order[k]] = static_cast<WeylElem>(k);

  g->images_.resize(size * r * r);
  g->lengths_.resize(size);
  g->words_.resize(size);
  g->left_.resize(size * r);
  g->right_.resize(size * r);
  for (std::size_t k = 0; k < size; ++k) {
    WeylElem o = order[k];
    std::copy(imgs[o].begin(), imgs[o].end(), g->images_.begin() + k * r * r);
    g->lengths_[k] = len[o];
    g->words_[k] = words_old[o];
    for (int i = 0; i < r; ++i) {
      g->left_[k * r + i] = renum[left_old[o * r + i]];
      g->right_[k * r + i] = renum[right_old[o * r + i]];
    }
    g->by_images_.emplace(imgs[o], static_cast<WeylElem>(k));
  }
  g->inverse_.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    Word rev(g->words_[k].rbegin(), g->words_[k].rend());
    g->inverse_[k] = g->from_word(rev);
  }
  if (rs.has_epsilon()) {
    const int nn = rs.n();
    g->windows_.resize(size);
    std::vector<int> idw(nn);
    std::iota(idw.begin(), idw.end(), 1);
    g->windows_[0] = idw;
    for (std::size_t k = 1; k < size; ++k) {
      int first = g->words_[k].front();
      WeylElem rest = g->lmul(first, static_cast<WeylElem>(k));
      auto win = g->windows_[rest];
      for (auto& x : win) x = rs.act_on_signed_index(first, x);
      g->windows_[k] = std::move(win);
    }
    for (std::size_t k = 0; k < size; ++k) g->by_window_.emplace(g->windows_[k], static_cast<WeylElem>(k));
  }
  return g;
}

WeylElem WeylGroup::mul(WeylElem a, WeylElem b) const {
  WeylElem out = a;
  for (int i : words_[b]) out = rmul(out, i);
  return out;
}

WeylElem WeylGroup::from_word(std::span<const int> word) const {
  WeylElem out = 0;
  for (int i : word) {
    if (i < 0 || i >= rank_) throw Error(ErrorKind::InvalidWord, "generator index out of range");
    out = rmul(out, i);
  }
  return out;
}

RootVec WeylGroup::simple_image(WeylElem w, int j) const {
  auto base = images_.begin() + (static_cast<std::size_t>(w) * rank_ + j) * rank_;
  return RootVec(base, base + rank_);
}

RootVec WeylGroup::act(WeylElem w, const RootVec& lambda) const {
  RootVec out(rank_, 0);
  const int* img = images_.data() + static_cast<std::size_t>(w) * rank_ * rank_;
  for (int j = 0; j < rank_; ++j) {
    if (!lambda[j]) continue;
    for (int k = 0; k < rank_; ++k) out[k] += lambda[j] * img[j * rank_ + k];
  }
  return out;
}

bool WeylGroup::bruhat_leq(WeylElem v, WeylElem w) const {
  // v <= w iff min(v, vs) <= ws for a right descent s of w
  while (true) {
    if (length(v) > length(w)) return false;
    if (length(v) == length(w)) return v == w;
    if (v == 0) return true;
    int s = words_[w].back();
    WeylElem vs = rmul(v, s);
    if (length(vs) < length(v)) v = vs;
    w = rmul(w, s);
  }
}

WeylElem WeylGroup::reflection(const RootVec& beta0) const {
  auto idx = system_->positive_index(beta0);
  if (!idx) throw Error(ErrorKind::InvalidElement, "not a root: " + format_root(beta0));
  const RootVec& beta = system_->positive_roots()[*idx];
  {
    std::lock_guard lock(refl_mutex_);
    auto it = refl_cache_.find(beta);
    if (it != refl_cache_.end()) return it->second;
  }
  for (WeylElem w = 0; w < size(); ++w) {
    for (int i = 0; i < rank_; ++i) {
      if (simple_image(w, i) == beta) {
        WeylElem r = mul(rmul(w, i), inverse(w));
        std::lock_guard lock(refl_mutex_);
        refl_cache_.emplace(beta, r);
        return r;
      }
    }
  }
  throw Error(ErrorKind::InvalidElement, "root not in the orbit of a simple root");
}

std::vector<RootVec> WeylGroup::pos_pos_set(WeylElem w) const {
  std::vector<RootVec> out;
  WeylElem wi = inverse(w);
  for (const auto& a : system_->positive_roots()) {
    if (RootSystem::is_positive(act(wi, a))) out.push_back(a);
  }
  return out;
}

std::vector<Word> WeylGroup::reduced_words(WeylElem w) const {
  if (w == 0) return {Word{}};
  std::vector<Word> out;
  for (int s = 0; s < rank_; ++s) {
    WeylElem ws = rmul(w, s);
    if (length(ws) > length(w)) continue;
    for (auto word : reduced_words(ws)) {
      word.push_back(s);
      out.push_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<int>& WeylGroup::window(WeylElem w) const {
  if (!has_window()) throw Error(ErrorKind::WrongType, "G2 elements have no window notation");
  return windows_[w];
}

WeylElem WeylGroup::from_window(const std::vector<int>& win) const {
  if (!has_window()) throw Error(ErrorKind::WrongType, "G2 elements have no window notation");
  auto it = by_window_.find(win);
  if (it == by_window_.end()) throw Error(ErrorKind::InvalidElement, "not an element of " + system_->spec().name());
  return it->second;
}

std::string WeylGroup::format(WeylElem w) const {
  if (!has_window()) {
    if (w == 0) return "id";
    std::string s;
    for (int i : words_[w]) s += "s" + system_->label_string(i);
    return s;
  }
  const auto& win = windows_[w];
  std::string s;
  bool compact = system_->family() == Family::A && win.size() <= 9;
  for (std::size_t k = 0; k < win.size(); ++k) {
    if (k && !compact) s += " ";
    s += std::to_string(win[k]);
  }
  return s;
}

WeylElem WeylGroup::parse(const std::string& text0) const {
  std::string text = trim(text0);
  if (text.empty() || text == "id" || text == "e") return 0;
  if (text[0] == 's' || text[0] == 'S') {
    Word word;
    std::size_t pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ',' || c == ' ' || c == '*') {
        ++pos;
        continue;
      }
      if (c != 's' && c != 'S') throw Error(ErrorKind::InvalidElement, "cannot parse element " + text);
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw Error(ErrorKind::InvalidElement, "cannot parse element " + text);
      try {
        word.push_back(system_->generator(std::stoi(text.substr(start, pos - start))));
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidElement, e.what());
      }
    }
    return from_word(word);
  }
  if (!has_window()) throw Error(ErrorKind::InvalidElement, "G2 elements are written as words, e.g. s1s2");
  auto toks = split_tokens(text);
  std::vector<int> win;
  const int nn = system_->n();
  if (toks.size() == 1 && all_digits(toks[0]) && static_cast<int>(toks[0].size()) == nn && nn > 1) {
    for (char c : toks[0]) win.push_back(c - '0');
  } else {
    for (const auto& t : toks) {
      try {
        std::size_t used = 0;
        win.push_back(std::stoi(t, &used));
        if (used != t.size()) throw Error(ErrorKind::InvalidElement, "cannot parse element " + text);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidElement, "cannot parse element " + text);
      }
    }
  }
  if (static_cast<int>(win.size()) != nn) {
    throw Error(ErrorKind::InvalidElement, "element " + text + " needs " + std::to_string(nn) + " entries");
  }
  return from_window(win);
}

std::string WeylGroup::format_word(const Word& w) const {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += system_->label_string(w[k]);
  }
  return s;
}

Word WeylGroup::parse_word(const std::string& text0) const {
  std::string text = trim(text0);
  Word out;
  if (text.empty() || text == "e" || text == "id") return out;
  for (auto t : split_tokens(text)) {
    if (!t.empty() && (t[0] == 's' || t[0] == 'S')) t.erase(t.begin());
    if (!all_digits(t)) throw Error(ErrorKind::InvalidWord, "bad letter '" + t + "' in word " + text);
    out.push_back(system_->generator(std::stoi(t)));
  }
  return out;
}

}  // namespace ellschub
