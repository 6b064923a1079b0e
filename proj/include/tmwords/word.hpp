#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmwords {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabet = 4;

/// A finite word over {0, ..., alphabet_size-1}, alphabet_size in [1, 4].
///
/// Equality and ordering look only at the letter sequence, so the binary
/// word "0110" and its ternary carrier compare equal.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(int alphabet_size);
  FiniteWord(std::vector<Letter> letters, int alphabet_size);

  /// Parses an ASCII digit string. With alphabet_size 0 the alphabet is
  /// inferred as max(2, largest digit + 1).
  static FiniteWord parse(std::string_view digits, int alphabet_size = 0);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int alphabet_size() const noexcept { return alphabet_size_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter* data() const noexcept { return letters_.data(); }

  FiniteWord factor(std::size_t pos, std::size_t len) const;
  FiniteWord prefix(std::size_t len) const { return factor(0, len); }

  void push_back(Letter a);
  void append(const FiniteWord& other);

  FiniteWord reversed() const;
  /// Binary complement (0 <-> 1). Throws DomainError on non-binary words.
  FiniteWord complemented() const;
  /// Same letters over a larger alphabet.
  FiniteWord widened(int alphabet_size) const;

  std::string str() const;

  friend FiniteWord operator+(FiniteWord lhs, const FiniteWord& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 2;
};

struct FiniteWordHash {
  std::size_t operator()(const FiniteWord& w) const noexcept;
};

/// Non-erasing letter-to-word substitution.
class Morphism {
 public:
  Morphism(std::vector<FiniteWord> images, int target_alphabet);

  /// 0 -> 01, 1 -> 10.
  static Morphism thue_morse();
  /// The coalescing projection 0 -> 0, 1 -> 1, 2 -> 1 from ternary to binary.
  static Morphism psi();

  int source_alphabet() const noexcept { return static_cast<int>(images_.size()); }
  int target_alphabet() const noexcept { return target_alphabet_; }
  const FiniteWord& image(Letter a) const;

  FiniteWord apply(const FiniteWord& w) const;
  /// m^times(w).
  FiniteWord power(const FiniteWord& w, unsigned times) const;
  /// Length-len prefix of the fixed point m^omega(seed). Requires m(seed) to
  /// start with seed and to have length at least 2.
  FiniteWord iterate_prefix(Letter seed, std::size_t len) const;

 private:
  std::vector<FiniteWord> images_;
  int target_alphabet_;
};

FiniteWord apply_morphism(const Morphism& m, const FiniteWord& w);
FiniteWord iterate_prefix(const Morphism& m, Letter seed, std::size_t len);

/// Binary digit sum.
constexpr std::uint64_t s2(std::uint64_t n) noexcept { return static_cast<std::uint64_t>(std::popcount(n)); }

/// Generalized Thue-Morse letter s2(n) mod k, k >= 2.
Letter tk_letter(std::uint64_t n, int k);
/// First len letters of t_k, built from the digit-sum definition.
FiniteWord tk_prefix(int k, std::size_t len);
/// Thue-Morse prefix via the morphism.
FiniteWord thue_morse_prefix(std::size_t len);

/// Paperfolding unfolding instructions, K >= 1 bits.
class InstructionSequence {
 public:
  explicit InstructionSequence(std::vector<Letter> bits);
  static InstructionSequence parse(std::string_view bits);
  /// Instruction sequence whose bit j is bit (K-1-j) of `code`.
  static InstructionSequence from_code(std::uint64_t code, std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  std::span<const Letter> bits() const noexcept { return bits_; }
  InstructionSequence extended(Letter bit) const;

 private:
  std::vector<Letter> bits_;
};

/// S_0 = empty, S_{j+1} = S_j e_{j+1} reverse(complement(S_j)); length 2^K - 1.
FiniteWord paperfolding_prefix(const InstructionSequence& instr);

/// All |w| rotations in rotation order; [""] for the empty word.
std::vector<FiniteWord> conjugates(const FiniteWord& w);

/// Joins words one per line (trailing newline after each).
std::string format_lines(std::span<const FiniteWord> words);

}  // namespace tmwords
