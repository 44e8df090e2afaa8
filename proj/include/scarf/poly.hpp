#pragma once
// Dense complex polynomials in one variable, ascending coefficient order.
// Only low degrees appear in practice (the hypergeometric reduction never
// needs more than degree 4 intermediates), so a small vector is plenty.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "core.hpp"

namespace scarf {

class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<complex> c) : c_(c) { trim(); }
    explicit Poly(std::vector<complex> c) : c_(std::move(c)) { trim(); }

    static Poly constant(complex v) { return Poly{{v}}; }

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    bool is_zero(double tol = 0.0) const {
        for (const auto& v : c_)
            if (std::abs(v) > tol) return false;
        return true;
    }

    complex coeff(std::size_t k) const { return k < c_.size() ? c_[k] : complex(0.0); }
    const std::vector<complex>& coeffs() const { return c_; }

    complex operator()(complex z) const {
        complex acc(0.0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<complex> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * double(i);
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<complex> s(std::max(a.c_.size(), b.c_.size()), complex(0.0));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(s));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<complex> s(std::max(a.c_.size(), b.c_.size()), complex(0.0));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(s));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly{};
        std::vector<complex> s(a.c_.size() + b.c_.size() - 1, complex(0.0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) s[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(s));
    }
    friend Poly operator*(complex k, const Poly& a) {
        std::vector<complex> s(a.c_);
        for (auto& v : s) v *= k;
        return Poly(std::move(s));
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    double scale() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(v));
        return m;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == complex(0.0)) c_.pop_back();
    }
    std::vector<complex> c_;
};

}  // namespace scarf
