#include "xsect/regex.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "xsect/utf8.hpp"

namespace xsect {

namespace {

constexpr char32_t kEpsilon = 0xFFFFFFFF;

struct Thompson {
  struct Arc {
    char32_t label;  // kEpsilon for an epsilon arc
    std::size_t to;
  };
  std::vector<std::vector<Arc>> arcs;

  std::size_t add_state() {
    arcs.emplace_back();
    return arcs.size() - 1;
  }
  void connect(std::size_t from, char32_t label, std::size_t to) { arcs[from].push_back({label, to}); }
};

struct Fragment {
  std::size_t start;
  std::size_t accept;
};

class RegexParser {
 public:
  RegexParser(std::vector<char32_t> pattern, Thompson& graph) : text_(std::move(pattern)), g_(graph) {}

  Fragment parse() {
    Fragment f = alternation();
    if (pos_ < text_.size()) {
      throw RegexError(pos_, text_[pos_] == U')' ? "unbalanced ')'" : "unexpected character");
    }
    return f;
  }

 private:
  Fragment alternation() {
    Fragment left = concatenation();
    while (peek(U'|')) {
      ++pos_;
      Fragment right = concatenation();
      const std::size_t s = g_.add_state();
      const std::size_t t = g_.add_state();
      g_.connect(s, kEpsilon, left.start);
      g_.connect(s, kEpsilon, right.start);
      g_.connect(left.accept, kEpsilon, t);
      g_.connect(right.accept, kEpsilon, t);
      left = {s, t};
    }
    return left;
  }

  Fragment concatenation() {
    std::optional<Fragment> acc;
    while (pos_ < text_.size() && text_[pos_] != U'|' && text_[pos_] != U')') {
      Fragment next = repetition();
      if (acc) {
        g_.connect(acc->accept, kEpsilon, next.start);
        acc->accept = next.accept;
      } else {
        acc = next;
      }
    }
    if (!acc) {
      const std::size_t s = g_.add_state();
      return {s, s};
    }
    return *acc;
  }

  Fragment repetition() {
    Fragment f = atom();
    while (pos_ < text_.size() && (text_[pos_] == U'*' || text_[pos_] == U'+' || text_[pos_] == U'?')) {
      const char32_t op = text_[pos_++];
      const std::size_t s = g_.add_state();
      const std::size_t t = g_.add_state();
      g_.connect(s, kEpsilon, f.start);
      g_.connect(f.accept, kEpsilon, t);
      if (op != U'+') g_.connect(s, kEpsilon, t);
      if (op != U'?') g_.connect(f.accept, kEpsilon, f.start);
      f = {s, t};
    }
    return f;
  }

  Fragment atom() {
    const std::size_t at = pos_;
    const char32_t c = text_[pos_++];
    switch (c) {
      case U'(': {
        Fragment inner = alternation();
        if (!peek(U')')) throw RegexError(at, "unbalanced '('");
        ++pos_;
        return inner;
      }
      case U'*':
      case U'+':
      case U'?':
        throw RegexError(at, "repetition operator with nothing to repeat");
      case U'\\':
        if (pos_ >= text_.size()) throw RegexError(at, "dangling escape");
        return literal(text_[pos_++]);
      default:
        return literal(c);
    }
  }

  Fragment literal(char32_t c) {
    const std::size_t s = g_.add_state();
    const std::size_t t = g_.add_state();
    g_.connect(s, c, t);
    return {s, t};
  }

  bool peek(char32_t c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::vector<char32_t> text_;
  Thompson& g_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> epsilon_closure(const Thompson& g, std::size_t from) {
  std::vector<unsigned char> seen(g.arcs.size(), 0);
  std::vector<std::size_t> closure{from};
  seen[from] = 1;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const auto& arc : g.arcs[closure[i]]) {
      if (arc.label == kEpsilon && !seen[arc.to]) {
        seen[arc.to] = 1;
        closure.push_back(arc.to);
      }
    }
  }
  return closure;
}

}  // namespace

Nfa compile_regex(std::string_view pattern) {
  std::vector<char32_t> text;
  try {
    text = utf8::decode(pattern);
  } catch (const utf8::DecodeError& e) {
    throw RegexError(e.offset(), e.what());
  }

  Thompson g;
  const Fragment root = RegexParser(std::move(text), g).parse();

  std::map<char32_t, SymbolId> ids;
  for (const auto& out : g.arcs) {
    for (const auto& arc : out) {
      if (arc.label != kEpsilon) ids.emplace(arc.label, 0);
    }
  }
  std::vector<char32_t> alphabet;
  for (auto& [glyph, id] : ids) {
    id = static_cast<SymbolId>(alphabet.size());
    alphabet.push_back(glyph);
  }

  // Epsilon elimination: keep the start state and every target of a symbol
  // arc that is reachable from it; q --a--> r whenever some p in the closure
  // of q has p --a--> r; q is final when its closure holds the accept state.
  constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> renumber(g.arcs.size(), kUnmapped);
  std::vector<std::size_t> kept{root.start};
  renumber[root.start] = 0;
  std::vector<State> finals;
  std::vector<Nfa::Transition> transitions;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const std::size_t q = kept[i];
    for (std::size_t p : epsilon_closure(g, q)) {
      if (p == root.accept) finals.push_back(static_cast<State>(i));
      for (const auto& arc : g.arcs[p]) {
        if (arc.label == kEpsilon) continue;
        if (renumber[arc.to] == kUnmapped) {
          renumber[arc.to] = kept.size();
          kept.push_back(arc.to);
        }
        transitions.push_back({static_cast<State>(i), ids.at(arc.label), static_cast<State>(renumber[arc.to])});
      }
    }
  }
  const State initial = 0;
  return Nfa::build(std::move(alphabet), kept.size(), std::span(&initial, 1), finals, transitions);
}

}  // namespace xsect
