#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/lognorm.hpp"
#include "padic/number.hpp"
#include "padic/prime.hpp"

namespace padic {

/// An element of Q_p^n under the sup norm (the natural non-archimedean norm:
/// the max of the entry magnitudes).
class Vector {
public:
    Vector(const Prime& p, std::vector<PadicNumber> entries);

    static Vector zero(const Prime& p, std::size_t n);
    static Vector from_rationals(const std::vector<BigRational>& qs, const Prime& p,
                                 std::int64_t precision);

    const Prime& prime() const { return prime_; }
    std::size_t size() const { return entries_.size(); }
    const PadicNumber& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<PadicNumber>& entries() const { return entries_; }

    /// Exact sup norm. When some entry is only known to vanish modulo p^m and
    /// p^{-m} exceeds every exactly known entry norm, the max is undetermined
    /// and PrecisionExhausted is raised.
    LogNorm norm() const;
    /// Certified upper bound on the sup norm; never throws.
    LogNorm norm_upper_bound() const;

    bool is_exact_zero() const;

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    Vector operator-() const;
    Vector scaled(const PadicNumber& s) const;
    Vector times_integer(const BigInt& t) const;
    Vector divided_by_integer(const BigInt& t) const;

    std::string str() const;

private:
    Prime prime_;
    std::vector<PadicNumber> entries_;
};

/// Spec-facing name for the sup norm.
inline LogNorm vector_norm(const Vector& x) { return x.norm(); }

/// A disk around 0 in Q_p, open or closed at the boundary radius. The radius
/// LogNorm::zero() denotes the empty disk and LogNorm::unbounded() all of Q_p.
class Disk {
public:
    enum class Boundary { open, closed };

    Disk(LogNorm radius, Boundary b) : radius_(std::move(radius)), boundary_(b) {}

    static Disk open(LogNorm radius) { return Disk(std::move(radius), Boundary::open); }
    static Disk closed(LogNorm radius) { return Disk(std::move(radius), Boundary::closed); }

    const LogNorm& radius() const { return radius_; }
    Boundary boundary() const { return boundary_; }
    bool is_open() const { return boundary_ == Boundary::open; }

    /// Membership of |z|_p. For a value indistinguishable from zero the test
    /// uses the certified bound p^{-m}; if even that bound does not decide
    /// membership, PrecisionExhausted is raised.
    bool contains(const PadicNumber& z) const;
    bool contains(const LogNorm& magnitude) const {
        return is_open() ? magnitude < radius_ : !(radius_ < magnitude);
    }

    std::string str(const Prime& p) const;

private:
    LogNorm radius_;
    Boundary boundary_;
};

/// Spec-facing name for disk membership.
inline bool disk_contains(const Disk& d, const PadicNumber& z) { return d.contains(z); }

/// Parses "1, 1/2, val=0 digits=[1] prec=4"-style comma-separated entries.
Vector parse_vector(const std::string& text, const Prime& p, std::int64_t default_precision);

}  // namespace padic
