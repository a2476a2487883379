// Copyright (c) 2026 The lifshitz-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace lifshitz {

/// Neumaier's variant of compensated summation. Order-dependent but
/// deterministic: the same sequence of additions gives the same bits.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Scalar initial) : sum_(initial) {}

  CompensatedSum& operator+=(Scalar value) {
    const Scalar t = sum_ + value;
    if (abs_(sum_) >= abs_(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(Scalar value) { return *this += -value; }

  Scalar value() const { return sum_ + compensation_; }

 private:
  static Scalar abs_(Scalar x) { return x < Scalar(0) ? -x : x; }

  Scalar sum_{0};
  Scalar compensation_{0};
};

}  // namespace lifshitz
