#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flipcox {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidSymbolError : public Error {
public:
  using Error::Error;
};

class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

class DegreeTooSmallError : public Error {
public:
  using Error::Error;
};

class InvalidContextError : public Error {
public:
  using Error::Error;
};

class SignedEntryError : public Error {
public:
  using Error::Error;
};

class NotConfluentError : public Error {
public:
  using Error::Error;
};

/// Raised when a closure/enumeration would exceed its element cap.
class OverflowError : public Error {
public:
  OverflowError(const std::string& what, std::uint64_t cap)
      : Error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

/// Word/window syntax error, annotated with the byte offset of the offending
/// character in the input text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// Contexts and generator symbols
// ---------------------------------------------------------------------------

enum class GroupType { A, B, D };

char group_type_letter(GroupType t);
GroupType group_type_from_letter(char c);

/// Which group a value lives in: the type (A = symmetric, B = signed
/// symmetric, D = even-signed subgroup) and the degree n. Degree 1 is allowed
/// so that sorting certificates cover the trivial case; the presentation
/// theorems themselves require n > 3 and their entry points enforce that.
struct GroupContext {
  GroupType type{GroupType::A};
  int degree{0};

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

inline GroupContext ctx_a(int n) { return {GroupType::A, n}; }
inline GroupContext ctx_b(int n) { return {GroupType::B, n}; }
inline GroupContext ctx_d(int n) { return {GroupType::D, n}; }

std::string to_string(const GroupContext& ctx);

enum class GenFamily : std::uint8_t { R, RBar2, S, S0, S0Prime };

/// A named generator. R carries the reversal width k, S the transposition
/// index i; the other families need no index.
struct Gen {
  GenFamily family{GenFamily::R};
  int index{0};

  static Gen r(int k) { return {GenFamily::R, k}; }
  static Gen rbar2() { return {GenFamily::RBar2, 0}; }
  static Gen s(int i) { return {GenFamily::S, i}; }
  static Gen s0() { return {GenFamily::S0, 0}; }
  static Gen s0p() { return {GenFamily::S0Prime, 0}; }

  friend bool operator==(const Gen&, const Gen&) = default;
};

/// Token spelling: "r3", "rb2", "s2", "s0", "s0p".
std::string to_token(Gen g);

bool valid_in(Gen g, const GroupContext& ctx);
void require_valid(Gen g, const GroupContext& ctx);

// ---------------------------------------------------------------------------
// Signed permutations in window notation
// ---------------------------------------------------------------------------

/// An element of B_n written as the window [p(1), ..., p(n)] of signed values.
/// Unsigned permutations are the all-positive windows; D_n elements are the
/// windows with an even number of negative entries.
class SignedPerm {
public:
  SignedPerm() = default;

  /// Validates that |entries| form exactly {1, ..., n}.
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int degree);

  /// Parses "[3,-1,2]".
  static SignedPerm parse(const std::string& text);

  int degree() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// Renders "[3,-1,2]".
  std::string str() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    return a.window_ < b.window_;
  }

private:
  struct unchecked_t {};
  SignedPerm(unchecked_t, std::vector<int> window)
      : window_(std::move(window)) {}

  std::vector<int> window_;

  friend SignedPerm compose(const SignedPerm&, const SignedPerm&);
  friend SignedPerm inverse(const SignedPerm&);
  friend SignedPerm apply_flip(Gen, const SignedPerm&, const GroupContext&);
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& p) const;
};

/// "Do p's rearrangement, then q's": result(j) = sign(q(j)) * p(|q(j)|).
/// Matches eval_word on concatenated words.
SignedPerm compose(const SignedPerm& p, const SignedPerm& q);

SignedPerm inverse(const SignedPerm& p);

int negative_count(const SignedPerm& p);

// ---------------------------------------------------------------------------
// Words and evaluation
// ---------------------------------------------------------------------------

/// A finite product of generator symbols, tagged with the context its symbols
/// are read in. The empty word is the identity.
struct Word {
  std::vector<Gen> syms;
  GroupContext ctx;

  friend bool operator==(const Word&, const Word&) = default;
};

SignedPerm eval_symbol(Gen g, const GroupContext& ctx);

/// Performs g's flip on the positions of p. Prefix reversals reverse the
/// first k entries (negating them in the signed type B family); s_i swaps
/// positions i, i+1; s_0 negates position 1; s_0' and the signed reversal
/// rb2 swap-and-negate positions 1, 2.
SignedPerm apply_flip(Gen g, const SignedPerm& p, const GroupContext& ctx);

/// Left-to-right: starts at the identity arrangement and applies each
/// symbol's flip in turn. This is the composition convention fixed for the
/// whole project; it makes eval("r3 r2") equal eval("s1 s2").
SignedPerm eval_word(const Word& w);

} // namespace flipcox
