// Copyright 2026 The omsr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omsr/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace omsr {

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  for (int l : w) {
    if (!r.empty() && r.back() == -l) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

namespace {

Word power(const Word& w, long k) {
  Word base = k < 0 ? inverse_word(w) : w;
  Word r;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& labels)
      : s_(text), labels_(labels) {
    order_.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) order_[i] = static_cast<int>(i);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return labels_[a].size() > labels_[b].size();
    });
  }

  Word parse_all() {
    Word w = product();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse word \"" + std::string(s_) +
                                "\" at offset " + std::to_string(pos_) + ": " +
                                what);
  }

  void skip_space() {
    while (pos_ < s_.size() &&
           (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) {
      ++pos_;
    }
    // U+00B7 middle dot as explicit multiplication.
    if (s_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      skip_space();
    }
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (c == '(' || c == '1') return true;
    return match_label() >= 0;
  }

  int match_label() const {
    for (int g : order_) {
      const std::string& l = labels_[g];
      if (!l.empty() && s_.substr(pos_, l.size()) == l) return g;
    }
    return -1;
  }

  Word product() {
    Word w;
    while (at_atom_start()) {
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("expected generator");
    if (s_[pos_] == '(') {
      ++pos_;
      Word w = product();
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return w;
    }
    int g = match_label();
    if (g >= 0) {
      pos_ += labels_[g].size();
      return Word{g + 1};
    }
    if (s_[pos_] == '1') {
      ++pos_;
      return Word{};
    }
    fail("expected generator");
  }

  // Returns the integer encoded by a run of superscript characters, if any.
  bool superscript(long* value) {
    static const char* digits[] = {"\xE2\x81\xB0", "\xC2\xB9",     "\xC2\xB2",
                                   "\xC2\xB3",     "\xE2\x81\xB4", "\xE2\x81\xB5",
                                   "\xE2\x81\xB6", "\xE2\x81\xB7", "\xE2\x81\xB8",
                                   "\xE2\x81\xB9"};
    static const std::string_view minus = "\xE2\x81\xBB";
    std::size_t p = pos_;
    bool neg = false;
    if (s_.substr(p, minus.size()) == minus) {
      neg = true;
      p += minus.size();
    }
    long v = 0;
    bool any = false;
    for (;;) {
      bool hit = false;
      for (int d = 0; d < 10; ++d) {
        std::string_view ds = digits[d];
        if (s_.substr(p, ds.size()) == ds) {
          v = v * 10 + d;
          p += ds.size();
          hit = any = true;
          break;
        }
      }
      if (!hit) break;
    }
    if (!any) return false;
    pos_ = p;
    *value = neg ? -v : v;
    return true;
  }

  long integer() {
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  Word factor() {
    Word w = atom();
    for (;;) {
      long k;
      if (superscript(&k)) {
        w = power(w, k);
        continue;
      }
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != '^') break;
      ++pos_;
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == '{') {
        ++pos_;
        skip_space();
        k = integer();
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != '}') fail("missing '}'");
        ++pos_;
        w = power(w, k);
      } else if (pos_ < s_.size() &&
                 (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        w = power(w, integer());
      } else {
        Word c = atom();
        Word r = inverse_word(c);
        r.insert(r.end(), w.begin(), w.end());
        r.insert(r.end(), c.begin(), c.end());
        w = std::move(r);
      }
    }
    return w;
  }

  std::string_view s_;
  const std::vector<std::string>& labels_;
  std::vector<int> order_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits on `sep` at brace/parenthesis depth zero.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& labels) {
  return free_reduce(WordParser(text, labels).parse_all());
}

std::string format_word(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int g = (w[i] > 0 ? w[i] : -w[i]) - 1;
    long k = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
    out += labels.at(g);
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '<') t.erase(t.begin());
  if (!t.empty() && t.back() == '>') t.pop_back();
  auto bar = t.find('|');
  Presentation p;
  std::string gens = trim(t.substr(0, bar));
  for (auto& g : split_top(gens, ',')) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    p.generators.push_back(g);
  }
  if (bar == std::string::npos) return p;
  for (auto& rel : split_top(t.substr(bar + 1), ',')) {
    if (rel.empty()) continue;
    auto sides = split_top(rel, '=');
    std::vector<Word> words;
    for (auto& side : sides) words.push_back(parse_word(side, p.generators));
    if (words.size() == 1) {
      if (!words[0].empty()) p.relators.push_back(words[0]);
      continue;
    }
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      Word r = words[i];
      Word inv = inverse_word(words[i + 1]);
      r.insert(r.end(), inv.begin(), inv.end());
      r = free_reduce(r);
      if (!r.empty()) p.relators.push_back(r);
    }
  }
  return p;
}

}  // namespace omsr
