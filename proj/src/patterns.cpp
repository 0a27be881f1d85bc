#include "shakekit/patterns.hpp"

#include <algorithm>
#include <cctype>

#include "shakekit/errors.hpp"

namespace shakekit::patterns {

// ---------------------------------------------------------------------------
// Construction

Pattern Pattern::make(Node n) { return Pattern(std::make_shared<const Node>(std::move(n))); }

Pattern Pattern::atom(std::string name, bool wrapping_one) {
  if (name.empty()) throw DomainError("pattern atom needs a name");
  return make(Node{Op::Atom, std::move(name), wrapping_one, 0, nullptr, nullptr});
}
Pattern Pattern::star(Pattern p) { return make(Node{Op::Star, {}, false, 0, p.node_, nullptr}); }
Pattern Pattern::bar(Pattern p) { return make(Node{Op::Bar, {}, false, 0, p.node_, nullptr}); }
Pattern Pattern::twist(Pattern p, long long n) {
  return make(Node{Op::Twist, {}, false, n, p.node_, nullptr});
}
Pattern Pattern::compose(Pattern inner, Pattern outer) {
  return make(Node{Op::Compose, {}, false, 0, inner.node_, outer.node_});
}
Pattern Pattern::power(Pattern p, long long m) {
  if (m < 1) throw DomainError("pattern power needs exponent >= 1, got " + std::to_string(m));
  return make(Node{Op::Power, {}, false, m, p.node_, nullptr});
}
Pattern Pattern::pound(Pattern p) { return make(Node{Op::Pound, {}, false, 0, p.node_, nullptr}); }
Pattern Pattern::inverse(Pattern p) {
  return make(Node{Op::Inverse, {}, false, 0, p.node_, nullptr});
}

bool Pattern::operator==(const Pattern& o) const {
  if (node_ == o.node_) return true;
  if (op() != o.op()) return false;
  switch (op()) {
    case Op::Atom: return name() == o.name() && wrapping_one() == o.wrapping_one();
    case Op::Compose: return lhs() == o.lhs() && rhs() == o.rhs();
    case Op::Twist:
    case Op::Power: return count() == o.count() && arg() == o.arg();
    default: return arg() == o.arg();
  }
}

std::size_t Pattern::depth() const {
  switch (op()) {
    case Op::Atom: return 1;
    case Op::Compose: return 1 + std::max(lhs().depth(), rhs().depth());
    default: return 1 + arg().depth();
  }
}

std::string Pattern::to_string() const {
  auto operand = [](const Pattern& p) {
    return p.op() == Op::Compose ? "(" + p.to_string() + ")" : p.to_string();
  };
  switch (op()) {
    case Op::Atom: return name();
    case Op::Star: return operand(arg()) + "*";
    case Op::Bar: return "bar(" + arg().to_string() + ")";
    case Op::Twist: return operand(arg()) + "_" + std::to_string(count());
    case Op::Power: return operand(arg()) + "^" + std::to_string(count());
    case Op::Pound: return operand(arg()) + "#";
    case Op::Inverse: return operand(arg()) + "^-1";
    case Op::Compose: return lhs().to_string() + " o " + operand(rhs());
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PatternParser {
 public:
  PatternParser(std::string_view src, const std::set<std::string>& wrapping_one)
      : src_(src), wrapping_one_(wrapping_one) {}

  Pattern run() {
    Pattern t = term();
    skip_ws();
    if (!at_end()) throw SyntaxError(std::string("unexpected '") + peek() + "'", pos_);
    return t;
  }

 private:
  Pattern term() {
    Pattern t = factor();
    for (;;) {
      skip_ws();
      if (peek() != 'o') return t;
      ++pos_;
      t = Pattern::compose(t, factor());
    }
  }

  Pattern factor() {
    Pattern t = primary();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        t = Pattern::star(t);
      } else if (c == '#') {
        ++pos_;
        t = Pattern::pound(t);
      } else if (c == '_') {
        ++pos_;
        t = Pattern::twist(t, signed_int());
      } else if (c == '^') {
        ++pos_;
        skip_ws();
        if (peek() == '-') {
          const std::size_t at = pos_;
          if (signed_int() != -1) throw SyntaxError("only ^-1 is allowed as a negative power", at);
          t = Pattern::inverse(t);
        } else {
          const std::size_t at = pos_;
          const long long m = signed_int();
          if (m < 1) throw SyntaxError("power exponent must be >= 1", at);
          t = Pattern::power(t, m);
        }
      } else {
        return t;
      }
    }
  }

  Pattern primary() {
    skip_ws();
    if (src_.substr(pos_, 3) == "bar") {
      pos_ += 3;
      skip_ws();
      expect('(');
      Pattern inner = term();
      skip_ws();
      expect(')');
      return Pattern::bar(inner);
    }
    if (peek() == '(') {
      ++pos_;
      Pattern inner = term();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isupper(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      ++pos_;
      while (std::isupper(static_cast<unsigned char>(peek())) ||
             std::isdigit(static_cast<unsigned char>(peek())) || peek() == '\'') {
        ++pos_;
      }
      std::string name(src_.substr(start, pos_ - start));
      const bool w1 = wrapping_one_.contains(name);
      return Pattern::atom(std::move(name), w1);
    }
    if (at_end()) throw SyntaxError("unexpected end of pattern", pos_);
    throw SyntaxError(std::string("unexpected '") + peek() + "'", pos_);
  }

  long long signed_int() {
    skip_ws();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected integer", pos_);
    try {
      return sign * std::stoll(std::string(src_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw SyntaxError("integer out of range", start);
    }
  }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  std::string_view src_;
  const std::set<std::string>& wrapping_one_;
  std::size_t pos_ = 0;
};

}  // namespace

Pattern parse_pattern(std::string_view src, const std::set<std::string>& wrapping_one) {
  return PatternParser(src, wrapping_one).run();
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

using P = Pattern;

// Valid on rewritten subterms.
bool is_wrap1(const P& t) {
  switch (t.op()) {
    case Op::Atom: return t.wrapping_one();
    case Op::Pound: return true;
    case Op::Compose: return is_wrap1(t.lhs()) && is_wrap1(t.rhs());
    case Op::Power: return is_wrap1(t.arg());
    default: return is_wrap1(t.arg());
  }
}

P with_rewritten_children(const P& t) {
  switch (t.op()) {
    case Op::Atom: return t;
    case Op::Star: return P::star(rewrite(t.arg()));
    case Op::Bar: return P::bar(rewrite(t.arg()));
    case Op::Twist: return P::twist(rewrite(t.arg()), t.count());
    case Op::Compose: return P::compose(rewrite(t.lhs()), rewrite(t.rhs()));
    case Op::Power: return P::power(rewrite(t.arg()), t.count());
    case Op::Pound: return P::pound(rewrite(t.arg()));
    case Op::Inverse: return P::inverse(rewrite(t.arg()));
  }
  return t;
}

// One rule at the root; children are already in normal form.
std::optional<P> root_step(const P& t) {
  switch (t.op()) {
    case Op::Atom: return std::nullopt;

    case Op::Inverse:  // P^-1 = bar(P*)
      return P::bar(P::star(t.arg()));

    case Op::Power:  // P^m = P o P^(m-1)
      if (t.count() == 1) return t.arg();
      return P::compose(t.arg(), P::power(t.arg(), t.count() - 1));

    case Op::Star: {
      const P x = t.arg();
      if (is_wrap1(x)) return x;  // wrapping number one: P* = P
      switch (x.op()) {
        case Op::Star: return x.arg();                                    // (P*)* = P
        case Op::Bar: return P::bar(P::star(x.arg()));                    // bar(P)* = bar(P*)
        case Op::Twist: return P::twist(P::star(x.arg()), -x.count());    // (P_n)* = P*_-n
        case Op::Compose: return P::compose(P::star(x.rhs()), P::star(x.lhs()));  // (PoQ)* = Q* o P*
        default: return std::nullopt;
      }
    }

    case Op::Bar: {
      const P x = t.arg();
      switch (x.op()) {
        case Op::Bar: return x.arg();                                     // bar(bar(P)) = P
        case Op::Twist: return P::twist(P::bar(x.arg()), -x.count());     // bar(P_n) = bar(P)_-n
        case Op::Compose: return P::compose(P::bar(x.lhs()), P::bar(x.rhs()));  // mirror image
        case Op::Pound: return P::pound(P::bar(x.arg()));                 // bar(K#) = bar(K)#
        default: return std::nullopt;
      }
    }

    case Op::Twist: {
      const P x = t.arg();
      if (t.count() == 0) return x;  // P_0 = P
      if (is_wrap1(x)) return x;     // wrapping number one: P_n = P
      switch (x.op()) {
        case Op::Twist: return P::twist(x.arg(), x.count() + t.count());  // (P_n)_m = P_(n+m)
        case Op::Compose:  // (P o Q)_n = P_n o Q_n
          return P::compose(P::twist(x.lhs(), t.count()), P::twist(x.rhs(), t.count()));
        default: return std::nullopt;
      }
    }

    case Op::Pound:
      if (is_wrap1(t.arg())) return t.arg();  // P = P(U)#
      return std::nullopt;

    case Op::Compose: {
      const P a = t.lhs();
      const P rest = t.rhs();
      if (a.op() == Op::Compose) return P::compose(a.lhs(), P::compose(a.rhs(), rest));
      // Adjacent wrapping-one leaves commute (K# o J# = J# o K#); sort them.
      if (is_wrap1(a)) {
        const P b = rest.op() == Op::Compose ? rest.lhs() : rest;
        if (is_wrap1(b) && b.to_string() < a.to_string()) {
          if (rest.op() == Op::Compose) return P::compose(b, P::compose(a, rest.rhs()));
          return P::compose(b, a);
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Leaf to_leaf(const P& t) {
  Leaf leaf;
  P base = t;
  if (base.op() == Op::Pound) {
    leaf.pound = true;
    leaf.wrapping_one = true;
    leaf.inner = normalize(base.arg()).leaves;
    return leaf;
  }
  if (base.op() == Op::Twist) {
    leaf.twist = base.count();
    base = base.arg();
  }
  if (base.op() == Op::Bar) {
    leaf.bar = true;
    base = base.arg();
  }
  if (base.op() == Op::Star) {
    leaf.star = true;
    base = base.arg();
  }
  if (base.op() != Op::Atom) {
    throw Error("internal: rewriting left a non-normal leaf " + t.to_string());
  }
  leaf.atom = base.name();
  leaf.wrapping_one = base.wrapping_one();
  return leaf;
}

std::string leaf_string(const Leaf& leaf) {
  if (leaf.pound) {
    NormalForm inner{leaf.inner};
    if (leaf.inner.size() == 1) return inner.to_string() + "#";
    return "(" + inner.to_string() + ")#";
  }
  std::string s = leaf.bar ? "bar(" + leaf.atom + ")" : leaf.atom;
  if (leaf.star) s += "*";
  if (leaf.twist != 0) s += "_" + std::to_string(leaf.twist);
  return s;
}

P leaf_pattern(const Leaf& leaf) {
  if (leaf.pound) return P::pound(NormalForm{leaf.inner}.to_pattern());
  P p = P::atom(leaf.atom, leaf.wrapping_one);
  if (leaf.star) p = P::star(p);
  if (leaf.bar) p = P::bar(p);
  if (leaf.twist != 0) p = P::twist(p, leaf.twist);
  return p;
}

}  // namespace

Pattern rewrite(const Pattern& p) {
  const P t = with_rewritten_children(p);
  if (auto next = root_step(t)) return rewrite(*next);
  return t;
}

NormalForm normalize(const Pattern& p) {
  NormalForm nf;
  P t = rewrite(p);
  while (t.op() == Op::Compose) {
    nf.leaves.push_back(to_leaf(t.lhs()));
    t = t.rhs();
  }
  nf.leaves.push_back(to_leaf(t));
  return nf;
}

std::string NormalForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (i > 0) out += " o ";
    out += leaf_string(leaves[i]);
  }
  return out;
}

Pattern NormalForm::to_pattern() const {
  if (leaves.empty()) throw Error("internal: empty normal form");
  P t = leaf_pattern(leaves.back());
  for (std::size_t i = leaves.size() - 1; i-- > 0;) t = P::compose(leaf_pattern(leaves[i]), t);
  return t;
}

// ---------------------------------------------------------------------------
// Evaluation

InvariantProfile::InvariantProfile(Fn fn, std::optional<long long> min_arg,
                                   std::optional<long long> max_arg, std::string label)
    : fn_(std::move(fn)), min_arg_(min_arg), max_arg_(max_arg), label_(std::move(label)) {}

InvariantProfile InvariantProfile::table(std::map<long long, long long> values) {
  std::set<long long> keys;
  for (const auto& [k, v] : values) keys.insert(k);
  InvariantProfile prof([values = std::move(values)](long long n) { return values.at(n); },
                        std::nullopt, std::nullopt, "table");
  prof.keys_ = std::move(keys);
  return prof;
}

bool InvariantProfile::in_domain(long long n) const {
  if (min_arg_ && n < *min_arg_) return false;
  if (max_arg_ && n > *max_arg_) return false;
  if (keys_ && !keys_->contains(n)) return false;
  return true;
}

long long InvariantProfile::operator()(long long n) const {
  if (!in_domain(n)) {
    throw DomainError("invariant profile" + (label_.empty() ? "" : " '" + label_ + "'") +
                      " is not defined at twist " + std::to_string(n));
  }
  return fn_(n);
}

namespace {

long long eval_leaves(const std::vector<Leaf>& leaves, const Assignment& assignment) {
  long long total = 0;
  for (const Leaf& leaf : leaves) {
    if (leaf.pound) {
      total += eval_leaves(leaf.inner, assignment);
      continue;
    }
    const auto it = assignment.find(leaf.atom);
    if (it == assignment.end()) throw UnassignedAtom("no invariant assigned to atom " + leaf.atom);
    const long long twist = leaf.wrapping_one ? 0 : leaf.twist;
    const long long arg = (leaf.star != leaf.bar) ? -twist : twist;
    try {
      const long long v = it->second(arg);
      total += leaf.bar ? -v : v;
    } catch (const DomainError& e) {
      throw DomainError("atom " + leaf.atom + ": " + e.what());
    }
  }
  return total;
}

}  // namespace

long long eval_invariant(const Pattern& p, const Assignment& assignment) {
  return eval_leaves(normalize(p).leaves, assignment);
}

Pattern retrace_term(const Pattern& q, long long n, long long c) {
  if (c < 1) throw DomainError("retrace needs c >= 1, got " + std::to_string(c));
  auto pow = [c](const P& x) { return c == 1 ? x : P::power(x, c); };
  return P::compose(pow(P::twist(P::bar(P::star(q)), n)), pow(q));
}

}  // namespace shakekit::patterns
