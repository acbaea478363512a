#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adcdse {

/// One pipeline stage: either the 2-comparator 1.5-bit flavor or a full
/// n-bit stage (2^n - 1 comparators).
class StageSpec {
 public:
  static constexpr int kMaxFullBits = 16;

  static StageSpec half() noexcept { return StageSpec(kHalfTag); }
  static StageSpec full(int bits);  // throws std::invalid_argument outside [2,16]

  bool is_half() const noexcept { return bits_ == kHalfTag; }
  /// Resolution of a full stage; must not be called on a 1.5-bit stage.
  int bits() const;
  int comparators() const noexcept { return is_half() ? 2 : (1 << bits_) - 1; }

  bool operator==(const StageSpec&) const = default;
  auto operator<=>(const StageSpec&) const = default;  // 1.5-bit sorts first

  std::string to_string() const { return is_half() ? "1.5" : std::to_string(bits_); }

 private:
  static constexpr int kHalfTag = 1;  // full stages use >= 2
  explicit StageSpec(int b) noexcept : bits_(b) {}
  int bits_;
};

/// A validated stage decomposition. First and last stages are full stages,
/// at least two stages, effective resolution >= 3 bits.
class Architecture {
 public:
  /// Validates and takes ownership; throws std::invalid_argument naming the
  /// violated rule.
  static Architecture of(std::vector<StageSpec> stages);
  /// Parses the "/"-separated stage string, e.g. "3/1.5/2".
  static Architecture parse(std::string_view text);

  const std::vector<StageSpec>& stages() const noexcept { return stages_; }
  std::size_t stage_count() const noexcept { return stages_.size(); }

  /// Total resolution: the first full stage contributes all its bits, every
  /// later 1.5-bit stage one bit, every later full n-bit stage n-1 bits
  /// (one bit of redundancy consumed by digital correction).
  int effective_bits() const noexcept;
  int comparator_count() const noexcept;
  std::string to_string() const;

  bool operator==(const Architecture&) const = default;

 private:
  explicit Architecture(std::vector<StageSpec> s) : stages_(std::move(s)) {}
  std::vector<StageSpec> stages_;
};

/// Interstage gains and cumulative input-referral gains.
/// gains[j] is the residue gain of stage j (the last stage has none);
/// cumulative[j] is the product of all gains ahead of stage j's input,
/// so cumulative[0] == 1 and cumulative[j+1] == cumulative[j] * gains[j].
struct StageGainLedger {
  std::vector<double> gains;
  std::vector<double> cumulative;
};

StageGainLedger gain_ledger(const Architecture& a);

/// All valid decompositions with effective_bits == bits, in canonical order
/// (lexicographic by stage, 1.5-bit before 2-bit before 3-bit ...).
/// bits must be in [3, 16].
std::vector<Architecture> enumerate_architectures(int bits);

/// Number of decompositions enumerate_architectures(bits) yields.
std::uint64_t count_architectures(int bits);

}  // namespace adcdse
