#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conjlib {

// Malformed input: dangling identifiers, mismatched endpoints, wrong shapes.
// Distinct from a law violation, which is reported through ValidationReport.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string law;
  std::string witness;
};

class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string subject) : subject_(std::move(subject)) {}

  bool ok() const { return violations_.empty(); }
  explicit operator bool() const { return ok(); }

  const std::string& subject() const { return subject_; }
  const std::vector<Violation>& violations() const { return violations_; }

  void fail(std::string law, std::string witness) {
    if (violations_.size() < kMaxViolations)
      violations_.push_back({std::move(law), std::move(witness)});
    ++total_;
  }
  // Count of violations seen, including those not retained.
  std::size_t total() const { return total_; }

  void absorb(const ValidationReport& other) {
    for (const auto& v : other.violations_)
      fail(v.law, other.subject_.empty() ? v.witness : other.subject_ + ": " + v.witness);
    total_ += other.total_ - other.violations_.size();
  }

  std::string summary() const {
    if (ok()) return subject_ + ": ok";
    std::string s = subject_ + ": " + std::to_string(total_) + " violation(s)";
    for (const auto& v : violations_) s += "\n  [" + v.law + "] " + v.witness;
    return s;
  }

 private:
  static constexpr std::size_t kMaxViolations = 64;
  std::string subject_;
  std::vector<Violation> violations_;
  std::size_t total_ = 0;
};

}  // namespace conjlib
