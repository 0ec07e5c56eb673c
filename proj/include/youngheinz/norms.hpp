#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "youngheinz/matrix.hpp"

namespace yh {

/// A Schatten or Ky Fan norm. Spectral, trace and Frobenius are the
/// Schatten-infinity, -1 and -2 cases but keep their own tags for reporting.
class NormKind {
public:
    enum class Tag { schatten, ky_fan, spectral, trace, frobenius };

    static NormKind schatten(double p);
    static NormKind ky_fan(int k);
    static NormKind spectral() { return NormKind(Tag::spectral, 0.0, 0); }
    static NormKind trace() { return NormKind(Tag::trace, 1.0, 0); }
    static NormKind frobenius() { return NormKind(Tag::frobenius, 2.0, 0); }
    /// "schatten:3", "ky_fan:2", "spectral", "trace", "frobenius".
    static NormKind parse(std::string_view text);

    Tag tag() const noexcept { return tag_; }
    double p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    std::string name() const;

private:
    NormKind(Tag tag, double p, int k) : tag_(tag), p_(p), k_(k) {}

    Tag tag_;
    double p_;
    int k_;
};

/// Descending, from the eigenvalues of X* X.
std::vector<double> singular_values(const Matrix& x);
double norm(const Matrix& x, const NormKind& kind);

}  // namespace yh
