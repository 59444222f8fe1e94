#include "hyperphf/crystallo.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace hyperphf {

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 p{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int s = 0;
            for (int k = 0; k < 3; ++k) {
                s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                     b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        }
    }
    return p;
}

int mat_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

const Mat3 kIdentity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

bool is_signed_permutation(const Mat3& m) {
    for (int i = 0; i < 3; ++i) {
        int row_nonzero = 0;
        int col_nonzero = 0;
        for (int j = 0; j < 3; ++j) {
            const int r = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const int c = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (r != 0) {
                if (std::abs(r) != 1) return false;
                ++row_nonzero;
            }
            if (c != 0) ++col_nonzero;
        }
        if (row_nonzero != 1 || col_nonzero != 1) return false;
    }
    return true;
}

}  // namespace

PointOperator::PointOperator(std::string label, const Mat3& entries)
    : label_(std::move(label)), entries_(entries) {
    if (!is_signed_permutation(entries_)) {
        throw std::domain_error("PointOperator: not a signed permutation matrix");
    }
    const int d = mat_det(entries_);
    if (d != 1 && d != -1) {
        throw std::domain_error("PointOperator: determinant must be +1 or -1");
    }
}

const std::array<PointOperator, 12>& table() {
    static const std::array<PointOperator, 12> tab = [] {
        std::array<PointOperator, 12> t{{
            {"R1", {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}},
            {"R2", {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}},
            {"R3", {{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}},
            {"R4", {{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}},
            {"R5", {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}},
            {"R6", {{{0, 0, -1}, {-1, 0, 0}, {0, 1, 0}}}},
            {"R7", {{{0, 0, 1}, {-1, 0, 0}, {0, -1, 0}}}},
            {"R8", {{{0, 0, -1}, {1, 0, 0}, {0, -1, 0}}}},
            {"R9", {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}},
            {"R10", {{{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}}},
            {"R11", {{{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}}}},
            {"R12", {{{0, -1, 0}, {0, 0, -1}, {1, 0, 0}}}},
        }};
        for (const PointOperator& op : t) {
            if (mat_det(op.entries()) != 1) {
                throw std::domain_error("table: tabulated operator has determinant != +1");
            }
        }
        return t;
    }();
    return tab;
}

Mat3 compose(const PointOperator& a, const PointOperator& b) {
    return mat_mul(a.entries(), b.entries());
}

int order_of(const PointOperator& a) {
    Mat3 p = a.entries();
    for (int n = 1; n <= 6; ++n) {
        if (p == kIdentity) return n;
        p = mat_mul(p, a.entries());
    }
    throw std::domain_error("order_of: order exceeds 6, not a signed 3x3 permutation");
}

std::vector<std::string> cubic_roots() {
    std::vector<std::string> labels;
    for (const PointOperator& op : table()) {
        if (order_of(op) == 3) labels.push_back(op.label());
    }
    return labels;
}

ClosureReport closure_report() {
    const auto& tab = table();
    std::set<Mat3> distinct;
    bool closed = true;
    for (const PointOperator& a : tab) {
        for (const PointOperator& b : tab) {
            const Mat3 p = mat_mul(a.entries(), b.entries());
            distinct.insert(p);
            bool in_table = false;
            for (const PointOperator& c : tab) {
                if (c.entries() == p) {
                    in_table = true;
                    break;
                }
            }
            if (!in_table) closed = false;
        }
    }
    return {closed, static_cast<int>(distinct.size())};
}

}  // namespace hyperphf
