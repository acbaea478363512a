#include "adcdse/arch.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace adcdse {

StageSpec StageSpec::full(int bits) {
  if (bits < 2 || bits > kMaxFullBits) {
    throw std::invalid_argument("full stage resolution must be between 2 and " +
                                std::to_string(kMaxFullBits) + " bits, got " +
                                std::to_string(bits));
  }
  return StageSpec(bits);
}

int StageSpec::bits() const {
  if (is_half()) {
    throw std::logic_error("bits() called on a 1.5-bit stage");
  }
  return bits_;
}

Architecture Architecture::of(std::vector<StageSpec> stages) {
  if (stages.size() < 2) {
    throw std::invalid_argument("architecture needs at least 2 stages");
  }
  if (stages.front().is_half()) {
    throw std::invalid_argument("first stage must be a full stage (1.5-bit not allowed there)");
  }
  if (stages.back().is_half()) {
    throw std::invalid_argument("last stage must be a full flash stage (1.5-bit not allowed there)");
  }
  Architecture a(std::move(stages));
  if (a.effective_bits() < 3) {
    throw std::invalid_argument("architecture resolves fewer than 3 bits");
  }
  return a;
}

Architecture Architecture::parse(std::string_view text) {
  std::vector<StageSpec> stages;
  std::size_t pos = 0;
  int index = 1;
  while (true) {
    std::size_t slash = text.find('/', pos);
    std::string_view tok = text.substr(pos, slash == std::string_view::npos
                                                ? std::string_view::npos
                                                : slash - pos);
    if (tok == "1.5") {
      stages.push_back(StageSpec::half());
    } else {
      int bits = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), bits);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("stage " + std::to_string(index) + " ('" +
                                    std::string(tok) +
                                    "'): expected '1.5' or an integer resolution >= 2");
      }
      stages.push_back(StageSpec::full(bits));
    }
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
    ++index;
  }
  return of(std::move(stages));
}

int Architecture::effective_bits() const noexcept {
  int n = stages_.front().bits();
  for (std::size_t j = 1; j < stages_.size(); ++j) {
    n += stages_[j].is_half() ? 1 : stages_[j].bits() - 1;
  }
  return n;
}

int Architecture::comparator_count() const noexcept {
  int n = 0;
  for (const auto& s : stages_) n += s.comparators();
  return n;
}

std::string Architecture::to_string() const {
  std::string out = stages_.front().to_string();
  for (std::size_t j = 1; j < stages_.size(); ++j) {
    out += '/';
    out += stages_[j].to_string();
  }
  return out;
}

StageGainLedger gain_ledger(const Architecture& a) {
  StageGainLedger ledger;
  const auto& st = a.stages();
  ledger.cumulative.push_back(1.0);
  for (std::size_t j = 0; j + 1 < st.size(); ++j) {
    double g;
    if (st[j].is_half()) {
      g = 2.0;
    } else if (j == 0) {
      g = static_cast<double>(1 << st[j].bits());
    } else {
      g = static_cast<double>(1 << (st[j].bits() - 1));
    }
    ledger.gains.push_back(g);
    ledger.cumulative.push_back(ledger.cumulative.back() * g);
  }
  return ledger;
}

namespace {

void check_enumeration_range(int bits) {
  if (bits < 3 || bits > 16) {
    throw std::invalid_argument("target resolution must be between 3 and 16 bits, got " +
                                std::to_string(bits));
  }
}

// Appends every valid continuation resolving `remaining` more bits.
// Candidate stages at each position, in canonical order: 1.5-bit, then full
// stages by ascending resolution; a full stage closing the budget exactly
// becomes the final flash.
void extend(std::vector<StageSpec>& prefix, int remaining,
            std::vector<Architecture>& out) {
  if (remaining >= 2) {
    prefix.push_back(StageSpec::half());
    extend(prefix, remaining - 1, out);
    prefix.pop_back();
  }
  for (int m = 2; m <= remaining + 1 && m <= StageSpec::kMaxFullBits; ++m) {
    prefix.push_back(StageSpec::full(m));
    if (m - 1 == remaining) {
      out.push_back(Architecture::of(prefix));
    } else {
      extend(prefix, remaining - (m - 1), out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Architecture> enumerate_architectures(int bits) {
  check_enumeration_range(bits);
  std::vector<Architecture> out;
  std::vector<StageSpec> prefix;
  for (int first = 2; first <= bits - 1; ++first) {
    prefix.push_back(StageSpec::full(first));
    extend(prefix, bits - first, out);
    prefix.pop_back();
  }
  return out;
}

std::uint64_t count_architectures(int bits) {
  check_enumeration_range(bits);
  return enumerate_architectures(bits).size();
}

}  // namespace adcdse
