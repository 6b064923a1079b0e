#include "tmwords/word.hpp"

#include <algorithm>

#include "tmwords/errors.hpp"

namespace tmwords {

namespace {

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw ParameterError("alphabet size must be in [1, 4], got " + std::to_string(alphabet_size));
  }
}

}  // namespace

FiniteWord::FiniteWord(int alphabet_size) : alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
}

FiniteWord::FiniteWord(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (Letter a : letters_) {
    if (a >= alphabet_size_) {
      throw DomainError("letter " + std::to_string(a) + " outside alphabet of size " +
                        std::to_string(alphabet_size_));
    }
  }
}

FiniteWord FiniteWord::parse(std::string_view digits, int alphabet_size) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  int largest = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw DomainError(std::string("not a digit: '") + ch + "'");
    }
    letters.push_back(static_cast<Letter>(ch - '0'));
    largest = std::max(largest, ch - '0');
  }
  if (alphabet_size == 0) alphabet_size = std::max(2, largest + 1);
  return FiniteWord(std::move(letters), alphabet_size);
}

FiniteWord FiniteWord::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw ParameterError("factor [" + std::to_string(pos) + ", +" + std::to_string(len) +
                         ") outside word of length " + std::to_string(size()));
  }
  FiniteWord out(alphabet_size_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

void FiniteWord::push_back(Letter a) {
  if (a >= alphabet_size_) {
    throw DomainError("letter " + std::to_string(a) + " outside alphabet of size " +
                      std::to_string(alphabet_size_));
  }
  letters_.push_back(a);
}

void FiniteWord::append(const FiniteWord& other) {
  alphabet_size_ = std::max(alphabet_size_, other.alphabet_size_);
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

FiniteWord FiniteWord::reversed() const {
  FiniteWord out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

FiniteWord FiniteWord::complemented() const {
  FiniteWord out = *this;
  for (Letter& a : out.letters_) {
    if (a > 1) throw DomainError("complement is defined for binary words only");
    a ^= 1;
  }
  return out;
}

FiniteWord FiniteWord::widened(int alphabet_size) const {
  check_alphabet(alphabet_size);
  if (alphabet_size < alphabet_size_) {
    return FiniteWord(letters_, alphabet_size);  // validates
  }
  FiniteWord out = *this;
  out.alphabet_size_ = alphabet_size;
  return out;
}

std::string FiniteWord::str() const {
  std::string s(letters_.size(), '0');
  std::transform(letters_.begin(), letters_.end(), s.begin(),
                 [](Letter a) { return static_cast<char>('0' + a); });
  return s;
}

std::size_t FiniteWordHash::operator()(const FiniteWord& w) const noexcept {
  // FNV-1a over the letters.
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter a : w.letters()) {
    h ^= a;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ w.size());
}

Morphism::Morphism(std::vector<FiniteWord> images, int target_alphabet)
    : images_(std::move(images)), target_alphabet_(target_alphabet) {
  check_alphabet(target_alphabet);
  if (images_.empty() || images_.size() > kMaxAlphabet) {
    throw ParameterError("morphism needs between 1 and 4 source letters");
  }
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty()) {
      throw ParameterError("morphism image of letter " + std::to_string(a) + " is empty");
    }
    for (Letter b : images_[a].letters()) {
      if (b >= target_alphabet_) {
        throw DomainError("morphism image of letter " + std::to_string(a) +
                          " leaves the target alphabet");
      }
    }
    images_[a] = images_[a].widened(std::max(images_[a].alphabet_size(), target_alphabet_));
  }
}

Morphism Morphism::thue_morse() {
  return Morphism({FiniteWord({0, 1}, 2), FiniteWord({1, 0}, 2)}, 2);
}

Morphism Morphism::psi() {
  return Morphism({FiniteWord({0}, 2), FiniteWord({1}, 2), FiniteWord({1}, 2)}, 2);
}

const FiniteWord& Morphism::image(Letter a) const {
  if (a >= images_.size()) {
    throw DomainError("letter " + std::to_string(a) + " outside morphism domain of size " +
                      std::to_string(images_.size()));
  }
  return images_[a];
}

FiniteWord Morphism::apply(const FiniteWord& w) const {
  std::vector<Letter> out;
  out.reserve(w.size() * images_.front().size());
  for (Letter a : w.letters()) {
    const auto img = image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return FiniteWord(std::move(out), target_alphabet_);
}

FiniteWord Morphism::power(const FiniteWord& w, unsigned times) const {
  FiniteWord cur = w;
  for (unsigned i = 0; i < times; ++i) cur = apply(cur);
  return cur;
}

FiniteWord Morphism::iterate_prefix(Letter seed, std::size_t len) const {
  const FiniteWord& img = image(seed);
  if (img.size() < 2 || img[0] != seed) {
    throw ConstructionError("morphism is not prolongable on letter " + std::to_string(seed));
  }
  if (source_alphabet() > target_alphabet_) {
    throw ConstructionError("fixed point needs an endomorphism");
  }
  // Expand letters of the growing prefix in place: letter i of the fixed
  // point contributes image(letter i) to the output.
  std::vector<Letter> out(img.letters().begin(), img.letters().end());
  out.reserve(len + 2 * img.size());
  std::size_t cursor = 1;  // out already holds the image of out[0] == seed
  while (out.size() < len) {
    const auto piece = image(out[cursor++]).letters();
    out.insert(out.end(), piece.begin(), piece.end());
  }
  out.resize(len);
  return FiniteWord(std::move(out), target_alphabet_);
}

FiniteWord apply_morphism(const Morphism& m, const FiniteWord& w) { return m.apply(w); }

FiniteWord iterate_prefix(const Morphism& m, Letter seed, std::size_t len) {
  return m.iterate_prefix(seed, len);
}

Letter tk_letter(std::uint64_t n, int k) {
  if (k < 2) throw ParameterError("t_k needs k >= 2, got " + std::to_string(k));
  return static_cast<Letter>(s2(n) % static_cast<std::uint64_t>(k));
}

FiniteWord tk_prefix(int k, std::size_t len) {
  if (k < 2 || k > kMaxAlphabet) {
    throw ParameterError("t_k prefix needs k in [2, 4], got " + std::to_string(k));
  }
  std::vector<Letter> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n] = tk_letter(n, k);
  return FiniteWord(std::move(out), k);
}

FiniteWord thue_morse_prefix(std::size_t len) {
  static const Morphism mu = Morphism::thue_morse();
  return mu.iterate_prefix(0, len);
}

InstructionSequence::InstructionSequence(std::vector<Letter> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw ParameterError("instruction sequence needs at least one bit");
  for (Letter b : bits_) {
    if (b > 1) throw DomainError("instructions are bits");
  }
}

InstructionSequence InstructionSequence::parse(std::string_view bits) {
  std::vector<Letter> out;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw DomainError(std::string("instruction is not a bit: '") + ch + "'");
    out.push_back(static_cast<Letter>(ch - '0'));
  }
  return InstructionSequence(std::move(out));
}

InstructionSequence InstructionSequence::from_code(std::uint64_t code, std::size_t length) {
  std::vector<Letter> out(length);
  for (std::size_t j = 0; j < length; ++j) {
    out[j] = static_cast<Letter>((code >> (length - 1 - j)) & 1U);
  }
  return InstructionSequence(std::move(out));
}

InstructionSequence InstructionSequence::extended(Letter bit) const {
  std::vector<Letter> out = bits_;
  out.push_back(bit);
  return InstructionSequence(std::move(out));
}

FiniteWord paperfolding_prefix(const InstructionSequence& instr) {
  std::vector<Letter> s;
  s.reserve((std::size_t{1} << instr.size()) - 1);
  for (Letter e : instr.bits()) {
    const std::size_t half = s.size();
    s.push_back(e);
    for (std::size_t i = half; i-- > 0;) s.push_back(s[i] ^ 1);
  }
  return FiniteWord(std::move(s), 2);
}

std::vector<FiniteWord> conjugates(const FiniteWord& w) {
  if (w.empty()) return {w};
  std::vector<FiniteWord> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w.factor(i, w.size() - i) + w.factor(0, i));
    out.back() = out.back().widened(w.alphabet_size());
  }
  return out;
}

std::string format_lines(std::span<const FiniteWord> words) {
  std::string out;
  for (const auto& w : words) {
    out += w.str();
    out += '\n';
  }
  return out;
}

}  // namespace tmwords
