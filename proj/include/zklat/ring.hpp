#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zklat {

using Residue = std::int64_t;

/// The ring Z_m. Type II theory only makes sense for m = 2k, but the
/// odd modulus 5 is needed for the F_5 code behind the length-48 Z_10
/// construction, so the modulus is stored as m directly.
class Modulus {
public:
    explicit Modulus(std::int64_t m);
    static Modulus from_k(std::int64_t k);

    std::int64_t value() const noexcept { return m_; }
    bool is_even() const noexcept { return m_ % 2 == 0; }
    /// k for the ring Z_2k; throws DomainError on an odd modulus.
    std::int64_t k() const;
    /// Largest symmetric class index: floor(m/2). Equals k when m = 2k.
    std::int64_t half() const noexcept { return m_ / 2; }

    Residue reduce(std::int64_t x) const noexcept {
        auto r = x % m_;
        return r < 0 ? r + m_ : r;
    }

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::int64_t m_;
};

class ResidueVector {
public:
    ResidueVector(Modulus mod, std::size_t length);
    /// Entries must already lie in [0, m); use `reduced` for arbitrary integers.
    ResidueVector(Modulus mod, std::vector<Residue> entries);
    ResidueVector(Modulus mod, std::initializer_list<Residue> entries);
    static ResidueVector reduced(Modulus mod, std::span<const std::int64_t> values);

    const Modulus& modulus() const noexcept { return mod_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    std::span<const Residue> entries() const noexcept { return entries_; }

    Residue operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, std::int64_t value) { entries_[i] = mod_.reduce(value); }

    bool is_zero() const noexcept;

    ResidueVector& operator+=(const ResidueVector& other);
    ResidueVector& operator-=(const ResidueVector& other);
    ResidueVector operator-() const;
    ResidueVector scaled(std::int64_t a) const;
    friend ResidueVector operator+(ResidueVector a, const ResidueVector& b) { return a += b; }
    friend ResidueVector operator-(ResidueVector a, const ResidueVector& b) { return a -= b; }

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    friend bool operator<(const ResidueVector& a, const ResidueVector& b) {
        return a.entries_ < b.entries_;
    }

    std::string to_string() const;

private:
    void check_compatible(const ResidueVector& other) const;

    Modulus mod_;
    std::vector<Residue> entries_;
};

/// Symmetric representative: 0..k stay put, k+1..2k-1 map to 1-k..-1.
/// For odd m the image is [-(m-1)/2, (m-1)/2].
std::int64_t rho(Residue x, const Modulus& mod);

/// Σ min{x_i², (m - x_i)²}.
std::int64_t euclidean_weight(const ResidueVector& v);

/// Σ u_i v_i mod m.
Residue inner_product(const ResidueVector& u, const ResidueVector& v);

std::vector<std::int64_t> rho_lift(const ResidueVector& v);

}  // namespace zklat
