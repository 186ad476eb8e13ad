#pragma once

// Finitely presented groups: the presentation grammar, Todd-Coxeter coset
// enumeration over the trivial subgroup, and abelianization through the
// Smith normal form of the relator exponent-sum matrix.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eq5/errors.hpp"
#include "eq5/exactfield.hpp"

namespace eq5 {

struct Letter {
  int gen = 0;
  long exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word: adjacent letters have distinct generators and
/// every exponent is nonzero.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) append(l);
  }

  static Word power(int gen, long exp) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Total number of generator symbols, |exp| summed.
  long length() const {
    long n = 0;
    for (const Letter& l : letters_) n += std::labs(l.exp);
    return n;
  }

  void append(Letter l) {
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exp += l.exp;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    for (const Letter& l : b.letters_) w.append(l);
    return w;
  }

  Word pow(long n) const {
    Word base = n < 0 ? inverse() : *this;
    Word w;
    for (long i = 0; i < std::labs(n); ++i) w = w * base;
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Drops relators that reduce to the empty word.
  void add_relator(const Word& w) {
    if (!w.empty()) relators.push_back(w);
  }
};

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += names[static_cast<std::size_t>(l.gen)];
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

inline std::string format_presentation(const Presentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ", " : "") + p.generators[i];
  s += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) s += (i ? ", " : "") + format_word(p.relators[i], p.generators);
  return s + ">";
}

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view s) : s_(s) {}

  Presentation parse() {
    Presentation p;
    skip_ws();
    expect('<');
    skip_ws();
    if (peek() != '|') {
      while (true) {
        skip_ws();
        std::size_t at = pos_;
        std::string name = ident();
        if (index_.count(name)) throw SyntaxError(at, "duplicate generator '" + name + "'");
        index_[name] = static_cast<int>(p.generators.size());
        p.generators.push_back(name);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_ws();
    expect('|');
    skip_ws();
    if (peek() != '>') {
      while (true) {
        skip_ws();
        Word lhs = word();
        skip_ws();
        if (peek() == '=') {
          ++pos_;
          skip_ws();
          Word rhs = word();
          lhs = lhs * rhs.inverse();
        }
        p.add_relator(lhs);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip_ws();
    expect('>');
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "trailing characters");
    return p;
  }

 private:
  // word := '1' | factor ( ['*'] factor )*
  Word word() {
    skip_ws();
    if (peek() == '1' && !is_ident_char(peek(1))) {
      ++pos_;
      return Word();
    }
    Word w = factor();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        skip_ws();
        w = w * factor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        w = w * factor();
      } else {
        return w;
      }
    }
  }

  // factor := (ident | '(' word ')') ['^' integer]
  Word factor() {
    skip_ws();
    Word base;
    if (peek() == '(') {
      ++pos_;
      base = word();
      skip_ws();
      expect(')');
    } else {
      std::size_t at = pos_;
      std::string name = ident();
      auto it = index_.find(name);
      if (it == index_.end()) throw Error(Errc::UnknownGenerator, "'" + name + "' at position " + std::to_string(at));
      base = Word::power(it->second, 1);
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      return base.pow(integer());
    }
    return base;
  }

  long integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw SyntaxError(pos_, "expected integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  std::string ident() {
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw SyntaxError(pos_, "expected identifier");
    while (is_ident_char(peek())) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::string, int> index_;
};

}  // namespace detail

/// Grammar: `< g1, g2, ... | w1, w2, ... >`; words are products such as
/// `g1^3 g2^-2` or `(a b)^2`, `1` is the empty word, and `u = v` stands
/// for the relator u v^-1.
inline Presentation parse_presentation(std::string_view text) { return detail::PresentationParser(text).parse(); }

// ---------------------------------------------------------------------------
// Coset enumeration.

inline constexpr std::size_t kDefaultMaxCosets = 100000;

struct CosetResult {
  enum class Status { Completed, Exceeded };

  Status status = Status::Exceeded;
  std::size_t order = 0;
  /// table[c][2g] = c . g, table[c][2g+1] = c . g^-1 (Completed only).
  std::vector<std::vector<std::size_t>> table;
  std::size_t cosets_used = 0;
  std::size_t max_cosets = 0;

  bool completed() const { return status == Status::Completed; }
};

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : ncols_(2 * p.generators.size()), max_(max_cosets) {
    for (const Word& w : p.relators) {
      std::vector<std::size_t> cols;
      for (const Letter& l : w.letters())
        for (long i = 0; i < std::labs(l.exp); ++i)
          cols.push_back(2 * static_cast<std::size_t>(l.gen) + (l.exp < 0 ? 1 : 0));
      relators_.push_back(std::move(cols));
    }
  }

  CosetResult run() {
    new_coset();
    for (std::size_t c = 0; c < fwd_.size() && !overflow_; ++c) {
      for (const auto& r : relators_) {
        if (!live(c) || overflow_) break;
        scan_and_fill(c, r);
      }
      for (std::size_t x = 0; x < ncols_ && live(c) && !overflow_; ++x)
        if (at(c, x) == kNone) define(c, x);
    }
    CosetResult res;
    res.cosets_used = fwd_.size();
    res.max_cosets = max_;
    if (overflow_) return res;
    res.status = CosetResult::Status::Completed;
    std::vector<std::size_t> renum(fwd_.size(), kNone);
    for (std::size_t c = 0; c < fwd_.size(); ++c)
      if (live(c)) renum[c] = res.order++;
    res.table.assign(res.order, std::vector<std::size_t>(ncols_));
    for (std::size_t c = 0; c < fwd_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < ncols_; ++x) res.table[renum[c]][x] = renum[at(c, x)];
    }
    return res;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static std::size_t inv(std::size_t x) { return x ^ 1U; }
  std::size_t& at(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  bool live(std::size_t c) const { return fwd_[c] == c; }

  std::size_t new_coset() {
    std::size_t c = fwd_.size();
    fwd_.push_back(c);
    table_.resize(table_.size() + ncols_, kNone);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    if (fwd_.size() >= max_) {
      overflow_ = true;
      return;
    }
    std::size_t d = new_coset();
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  // Scan w from both ends at coset c; close a gap of one letter by a
  // deduction, a gap of zero letters by a coincidence, otherwise define.
  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(w.size()) - 1;
    auto letter = [&](long k) { return w[static_cast<std::size_t>(k)]; };
    while (true) {
      while (i <= j && at(f, letter(i)) != kNone) f = at(f, letter(i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(letter(j))) != kNone) b = at(b, inv(letter(j--)));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, letter(i)) = b;
        at(b, inv(letter(i))) = f;
        return;
      }
      define(f, letter(i));
      if (overflow_) return;
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t r = k;
    while (fwd_[r] != r) r = fwd_[r];
    while (fwd_[k] != r) {
      std::size_t next = fwd_[k];
      fwd_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    fwd_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t e = queue[q];
      for (std::size_t x = 0; x < ncols_; ++x) {
        std::size_t f = at(e, x);
        if (f == kNone) continue;
        if (at(f, inv(x)) == e) at(f, inv(x)) = kNone;
        std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kNone) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inv(x)) != kNone) {
          merge(e1, at(f1, inv(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inv(x)) = e1;
        }
      }
    }
  }

  std::size_t ncols_;
  std::size_t max_;
  bool overflow_ = false;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::size_t> fwd_;
  std::vector<std::size_t> table_;
};

}  // namespace detail

/// Enumerates the cosets of the trivial subgroup, i.e. the elements.
/// Completed(n) certifies |G| = n; Exceeded is inconclusive.
/// Strategy: HLT relator scanning, cosets processed in creation order,
/// columns in generator order, no lookahead.
inline CosetResult todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets < 1) throw Error(Errc::BadParam, "max_cosets must be >= 1");
  return detail::CosetEnumerator(p, max_cosets).run();
}

/// The table is complete, each column is a permutation inverse to its
/// partner column, the action is transitive, and every relator fixes
/// every coset.
inline bool coset_table_consistent(const Presentation& p, const CosetResult& r) {
  if (!r.completed()) return false;
  const std::size_t n = r.order;
  const std::size_t ncols = 2 * p.generators.size();
  if (r.table.size() != n) return false;
  for (std::size_t c = 0; c < n; ++c) {
    if (r.table[c].size() != ncols) return false;
    for (std::size_t x = 0; x < ncols; ++x) {
      std::size_t d = r.table[c][x];
      if (d >= n || r.table[d][x ^ 1U] != c) return false;
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> todo{0};
  if (n > 0) seen[0] = true;
  for (std::size_t h = 0; h < todo.size(); ++h)
    for (std::size_t x = 0; x < ncols; ++x) {
      std::size_t d = r.table[todo[h]][x];
      if (!seen[d]) {
        seen[d] = true;
        todo.push_back(d);
      }
    }
  if (todo.size() != n) return false;
  for (const Word& w : p.relators)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t d = c;
      for (const Letter& l : w.letters())
        for (long i = 0; i < std::labs(l.exp); ++i)
          d = r.table[d][2 * static_cast<std::size_t>(l.gen) + (l.exp < 0 ? 1 : 0)];
      if (d != c) return false;
    }
  return true;
}

inline nlohmann::ordered_json to_json(const CosetResult& r) {
  nlohmann::ordered_json j;
  j["status"] = r.completed() ? "Completed" : "Exceeded";
  if (r.completed()) j["order"] = r.order;
  j["max_cosets_used"] = r.cosets_used;
  return j;
}

// ---------------------------------------------------------------------------
// Smith normal form and abelianization.

using IntMatrix = std::vector<std::vector<Integer>>;

/// Invariant factors d1 | d2 | ... | dr (all positive, r = rank) of an
/// integer matrix, by gcd pivoting with full row/column elimination.
inline std::vector<Integer> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> out;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&](bool whole_block) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (sgn(m[i][j]) == 0) continue;
          if (bi == rows || abs(m[i][j]) < abs(m[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) return false;
      std::swap(m[t], m[bi]);
      swap_cols(t, bj);
      return true;
    };
    if (!move_min_to_pivot(true)) break;
    while (true) {
      const Integer p = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        Integer q = m[i][t] / p;  // truncating: |remainder| < |p|
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        Integer q = m[t][j] / p;
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = sgn(m[i][t]) != 0;
      for (std::size_t j = t + 1; j < cols && !dirty; ++j) dirty = sgn(m[t][j]) != 0;
      if (dirty) {
        move_min_to_pivot(false);
        continue;
      }
      // Pivot must divide the rest of the block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(m[i][j]) != 0 && m[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

struct Abelianization {
  std::vector<Integer> torsion;  // invariant factors > 1
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }

  std::string to_string() const {
    if (trivial()) return "1";
    std::string s;
    for (const Integer& d : torsion) s += (s.empty() ? "" : " x ") + std::string("Z_") + d.get_str();
    if (free_rank > 0) s += (s.empty() ? "" : " x ") + std::string("Z") + (free_rank > 1 ? "^" + std::to_string(free_rank) : "");
    return s;
  }
};

/// Rows are relators, columns generators, entries exponent sums.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), std::vector<Integer>(p.generators.size(), Integer(0)));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Letter& l : p.relators[r].letters()) m[r][static_cast<std::size_t>(l.gen)] += l.exp;
  return m;
}

inline Abelianization abelianization(const Presentation& p) {
  Abelianization a;
  std::vector<Integer> d = p.relators.empty() ? std::vector<Integer>{} : smith_normal_form(relation_matrix(p));
  for (const Integer& x : d)
    if (x > 1) a.torsion.push_back(x);
  a.free_rank = p.generators.size() - d.size();
  return a;
}

}  // namespace eq5
