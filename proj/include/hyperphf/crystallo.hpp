#pragma once

#include <array>
#include <string>
#include <vector>

namespace hyperphf {

using Mat3 = std::array<std::array<int, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b);
int mat_det(const Mat3& m);

// A crystallographic point operator: a signed permutation matrix, validated
// at construction. All arithmetic in this module is exact integer.
class PointOperator {
public:
    PointOperator(std::string label, const Mat3& entries);

    const std::string& label() const noexcept { return label_; }
    const Mat3& entries() const noexcept { return entries_; }
    int det() const { return mat_det(entries_); }

    friend bool operator==(const PointOperator& a, const PointOperator& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::string label_;
    Mat3 entries_;
};

// The twelve operators R1..R12, stored exactly as tabulated. R1 is the
// identity; every determinant is +1 (checked when the table is built).
const std::array<PointOperator, 12>& table();

Mat3 compose(const PointOperator& a, const PointOperator& b);

// Smallest n >= 1 with a^n = identity (at most 6 for signed 3x3 permutations).
int order_of(const PointOperator& a);

// Labels of all table operators of order exactly 3.
std::vector<std::string> cubic_roots();

struct ClosureReport {
    bool closed;        // every pairwise product lands back in the table
    int product_count;  // distinct matrices among the 144 products
};

ClosureReport closure_report();

}  // namespace hyperphf
