#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heckenil {

// Integer degree or the degree of the zero form.  The zero case is a
// distinct sentinel rather than -1, since -1 is a legal arithmetic
// intermediate in the conjecture formulas.
class DegreeValue {
 public:
  DegreeValue() : finite_(false), v_(0) {}
  static DegreeValue neg_inf() { return DegreeValue(); }
  static DegreeValue of(int64_t v) {
    DegreeValue d;
    d.finite_ = true;
    d.v_ = v;
    return d;
  }
  bool is_neg_inf() const { return !finite_; }
  int64_t value() const {
    if (!finite_) throw std::logic_error("DegreeValue: value() of -inf");
    return v_;
  }
  friend bool operator==(const DegreeValue& a, const DegreeValue& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const DegreeValue& a, const DegreeValue& b) { return !(a == b); }
  friend bool operator<(const DegreeValue& a, const DegreeValue& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_;
  int64_t v_;
};

}  // namespace heckenil
