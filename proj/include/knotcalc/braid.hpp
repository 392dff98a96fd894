#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/rng.hpp"

namespace knotcalc {

enum class LetterKind { Positive, Negative, Singular };

// One generator occurrence: sigma_i, sigma_i^{-1} or tau_i (1 <= i <= n-1).
struct BraidLetter {
  int index = 1;
  LetterKind kind = LetterKind::Positive;

  bool operator==(const BraidLetter&) const = default;

  BraidLetter inverted() const {
    if (kind == LetterKind::Singular) throw PreconditionError("tau letters have no inverse");
    return {index, kind == LetterKind::Positive ? LetterKind::Negative : LetterKind::Positive};
  }
  bool is_sigma() const { return kind != LetterKind::Singular; }
  int sign() const {
    return kind == LetterKind::Positive ? 1 : (kind == LetterKind::Negative ? -1 : 0);
  }
};

// A word in sigma_i^{+-1}, tau_i on n strands. Immutable in spirit: all
// editing operations return new words.
class BraidWord {
 public:
  explicit BraidWord(int strands) : n_(strands) {
    if (strands < 1) throw PreconditionError("strand count must be >= 1");
  }
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  const BraidLetter& letter(std::size_t pos) const { return letters_.at(pos); }

  void append(BraidLetter l);
  BraidWord concat(const BraidWord& o) const;  // requires equal strand counts

  // Token format (bit-exact round trip): `n=3 -1 -1 2 -1`, tau_i as `ti`.
  static BraidWord parse(const std::string& text);
  std::string to_text() const;

  bool operator==(const BraidWord& o) const { return n_ == o.n_ && letters_ == o.letters_; }

  // sigma signs flipped on every letter (tau fixed): the mirror closure.
  BraidWord mirror() const;
  // Word inverse; rejects tau letters.
  BraidWord inverse() const;
  // Cancel adjacent sigma_i sigma_i^{-1} pairs to a fixpoint.
  BraidWord freely_reduced() const;

  // Underlying permutation of {1..n}: both sigma_i and tau_i induce the
  // transposition (i, i+1), composed in letter order.
  std::vector<int> permutation() const;

  int exponent_sum() const;  // (#positive) - (#negative); tau contributes 0
  int singular_count() const;

  // Closure components, numbered by smallest strand index: comp_of[p] is the
  // 1-based component id of the strand starting at top position p.
  struct Components {
    int count = 0;
    std::vector<int> comp_of;  // index 1..n (entry 0 unused)
  };
  Components closure_components_info() const;
  int closure_components() const { return closure_components_info().count; }

  BraidWord with_switch(std::size_t pos) const;              // flip a sigma sign
  BraidWord with_smooth(std::size_t pos) const;              // delete a sigma letter
  BraidWord with_resolve(std::size_t pos, int sign) const;   // tau -> sigma^{+-1}

 private:
  void check_letter(const BraidLetter& l) const;
  int n_;
  std::vector<BraidLetter> letters_;
};

inline std::vector<int> permutation(const BraidWord& w) { return w.permutation(); }
inline int closure_components(const BraidWord& w) { return w.closure_components(); }
inline int exponent_sum(const BraidWord& w) { return w.exponent_sum(); }

// A full walk around the closure. Components are traversed in increasing
// component id, each starting at its smallest top position; the walk crosses
// every letter exactly twice (once per strand-arc). Visit order depends only
// on letter positions, never on crossing signs, so switching a letter
// changes the goodness of that letter alone.
struct ClosureWalk {
  struct Passes {
    int component[2] = {0, 0};    // component id of each pass (visit order)
    int arrive_pos[2] = {0, 0};   // strand position the pass arrives at
    long visit_time[2] = {-1, -1};
  };
  std::vector<Passes> per_letter;
  BraidWord::Components components;
};
ClosureWalk walk_closure(const BraidWord& w);

// Linking number of two closure components (half the signed count of sigma
// letters joining them). Rejects a == b and tau letters joining a and b.
int linking_number(const BraidWord& w, int comp_a, int comp_b);

// Markov moves. Conjugation by a sigma letter g maps w to g^{-1} w g;
// stabilization maps B_n to B_{n+1} appending sigma_n^{+-1}; destabilization
// is its inverse and requires the word to end in sigma_{n-1}^{+-1} with no
// other occurrence of index n-1.
struct MarkovMove {
  enum class Type { Conjugate, Stabilize, Destabilize };
  Type type = Type::Conjugate;
  BraidLetter conjugator{};  // Conjugate only
  int stabilize_sign = 1;    // Stabilize only
};
BraidWord apply_markov(const BraidWord& w, const MarkovMove& move);

struct WalkLimits {
  int max_strands = 8;
  std::size_t max_length = 64;
};
// A deterministic random walk over Markov moves: the result is Markov
// equivalent to w, so every link invariant of the closure is unchanged.
BraidWord random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed,
                             const WalkLimits& limits = {});

// Pure-braid band generator A_{ij} = (s_{j-1}...s_{i+1}) s_i^2 (s_{j-1}...s_{i+1})^{-1}.
BraidWord band_generator(int n, int i, int j);

// An element of the k-th lower central series subgroup P_n^k, built as a
// left-normed iterated commutator of k randomly chosen band generators.
// Its permutation is the identity.
BraidWord pure_lcs_element(int n, int k, std::uint64_t seed);

}  // namespace knotcalc
