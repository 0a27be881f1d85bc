#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace shakekit::patterns {

enum class Op { Atom, Star, Bar, Twist, Compose, Power, Pound, Inverse };

/// Immutable expression in the calculus of dualizable patterns. Copies share
/// structure. Composition is written left to right from innermost to
/// outermost, so in `P o Q` the pattern P is the innermost shape.
class Pattern {
 public:
  static Pattern atom(std::string name, bool wrapping_one = false);
  static Pattern star(Pattern p);
  static Pattern bar(Pattern p);
  static Pattern twist(Pattern p, long long n);
  static Pattern compose(Pattern inner, Pattern outer);
  /// m >= 1; throws DomainError otherwise.
  static Pattern power(Pattern p, long long m);
  static Pattern pound(Pattern p);
  static Pattern inverse(Pattern p);

  Op op() const { return node_->op; }
  const std::string& name() const { return node_->name; }
  bool wrapping_one() const { return node_->wrapping_one; }
  /// Twist amount or power exponent.
  long long count() const { return node_->count; }
  Pattern arg() const { return Pattern(node_->lhs); }
  Pattern lhs() const { return Pattern(node_->lhs); }
  Pattern rhs() const { return Pattern(node_->rhs); }

  std::size_t depth() const;
  /// Textual form accepted by parse_pattern; parsing it gives back an equal
  /// tree.
  std::string to_string() const;

  bool operator==(const Pattern& o) const;

 private:
  struct Node {
    Op op;
    std::string name;
    bool wrapping_one = false;
    long long count = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Pattern(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Pattern make(Node n);
  std::shared_ptr<const Node> node_;
};

/// ASCII grammar:
///   term    := factor { "o" factor }
///   factor  := primary { suffix }
///   suffix  := "*" | "^" INT | "^-1" | "_" SIGNED_INT | "#"
///   primary := IDENT | "bar(" term ")" | "(" term ")"
/// IDENT is an uppercase letter followed by uppercase letters, digits or
/// primes. Suffixes apply in the order written. Atoms named in
/// `wrapping_one` are flagged as wrapping-number-one patterns.
Pattern parse_pattern(std::string_view src, const std::set<std::string>& wrapping_one = {});

/// A leaf of a normal form: either a twisted atom, with star and bar flags,
/// or a pound pattern wrapping a normal form.
struct Leaf {
  std::string atom;
  bool wrapping_one = false;
  bool star = false;
  bool bar = false;
  long long twist = 0;
  bool pound = false;
  std::vector<Leaf> inner;  // only for pound leaves

  bool operator==(const Leaf&) const = default;
};

/// Compose chain of leaves, innermost first.
struct NormalForm {
  std::vector<Leaf> leaves;

  std::string to_string() const;
  Pattern to_pattern() const;
  bool operator==(const NormalForm&) const = default;
};

/// Rewrites to normal form by innermost-first application of the calculus
/// identities, each oriented left to right, until no rule applies.
Pattern rewrite(const Pattern& p);
NormalForm normalize(const Pattern& p);

/// Integer-valued compatible invariant evaluated on twists of one atom,
/// n -> I(P_n). Queries outside [min_arg, max_arg] throw DomainError.
class InvariantProfile {
 public:
  using Fn = std::function<long long(long long)>;
  InvariantProfile(Fn fn, std::optional<long long> min_arg = std::nullopt,
                   std::optional<long long> max_arg = std::nullopt, std::string label = {});
  static InvariantProfile table(std::map<long long, long long> values);

  long long operator()(long long n) const;
  bool in_domain(long long n) const;
  const std::string& label() const { return label_; }

 private:
  Fn fn_;
  std::optional<long long> min_arg_;
  std::optional<long long> max_arg_;
  std::optional<std::set<long long>> keys_;
  std::string label_;
};

using Assignment = std::map<std::string, InvariantProfile>;

/// Sum of leaf values of the normal form, with
///   P_n -> I(n), P*_n -> I(-n), bar(P)_n -> -I(-n), bar(P)*_n -> -I(n),
/// wrapping-one leaves evaluated at 0 and pound leaves by their contents.
long long eval_invariant(const Pattern& p, const Assignment& assignment);

/// (bar(Q*)_n)^c o Q^c. Throws DomainError for c < 1.
Pattern retrace_term(const Pattern& q, long long n, long long c);

}  // namespace shakekit::patterns
