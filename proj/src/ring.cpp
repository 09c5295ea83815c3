#include "zklat/ring.hpp"

#include <algorithm>
#include <sstream>

#include "zklat/errors.hpp"

namespace zklat {

Modulus::Modulus(std::int64_t m) : m_(m) {
    if (m < 2) throw InputError("modulus must be at least 2, got " + std::to_string(m));
}

Modulus Modulus::from_k(std::int64_t k) {
    if (k < 1) throw InputError("k must be positive, got " + std::to_string(k));
    return Modulus(2 * k);
}

std::int64_t Modulus::k() const {
    if (!is_even()) throw DomainError("Z_" + std::to_string(m_) + " is not of the form Z_2k");
    return m_ / 2;
}

ResidueVector::ResidueVector(Modulus mod, std::size_t length) : mod_(mod), entries_(length, 0) {}

ResidueVector::ResidueVector(Modulus mod, std::vector<Residue> entries)
    : mod_(mod), entries_(std::move(entries)) {
    for (auto x : entries_) {
        if (x < 0 || x >= mod_.value())
            throw InputError("residue " + std::to_string(x) + " outside [0, " +
                             std::to_string(mod_.value()) + ")");
    }
}

ResidueVector::ResidueVector(Modulus mod, std::initializer_list<Residue> entries)
    : ResidueVector(mod, std::vector<Residue>(entries)) {}

ResidueVector ResidueVector::reduced(Modulus mod, std::span<const std::int64_t> values) {
    ResidueVector v(mod, values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v.entries_[i] = mod.reduce(values[i]);
    return v;
}

bool ResidueVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue x) { return x == 0; });
}

void ResidueVector::check_compatible(const ResidueVector& other) const {
    if (!(mod_ == other.mod_)) throw InputError("modulus mismatch");
    if (size() != other.size()) throw InputError("length mismatch");
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& other) {
    check_compatible(other);
    const auto m = mod_.value();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto s = entries_[i] + other.entries_[i];
        entries_[i] = s >= m ? s - m : s;
    }
    return *this;
}

ResidueVector& ResidueVector::operator-=(const ResidueVector& other) {
    check_compatible(other);
    const auto m = mod_.value();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto s = entries_[i] - other.entries_[i];
        entries_[i] = s < 0 ? s + m : s;
    }
    return *this;
}

ResidueVector ResidueVector::operator-() const {
    return scaled(-1);
}

ResidueVector ResidueVector::scaled(std::int64_t a) const {
    ResidueVector r(mod_, size());
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = mod_.reduce(a * entries_[i]);
    return r;
}

std::string ResidueVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
}

std::int64_t rho(Residue x, const Modulus& mod) {
    const auto m = mod.value();
    if (x < 0 || x >= m)
        throw InputError("residue " + std::to_string(x) + " outside [0, " + std::to_string(m) + ")");
    return x <= mod.half() ? x : x - m;
}

std::int64_t euclidean_weight(const ResidueVector& v) {
    std::int64_t w = 0;
    for (auto x : v.entries()) {
        const auto r = rho(x, v.modulus());
        w += r * r;
    }
    return w;
}

Residue inner_product(const ResidueVector& u, const ResidueVector& v) {
    if (!(u.modulus() == v.modulus())) throw InputError("inner product across different moduli");
    if (u.size() != v.size()) throw InputError("inner product of vectors of different length");
    const auto& mod = u.modulus();
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = mod.reduce(acc + u[i] * v[i]);
    return acc;
}

std::vector<std::int64_t> rho_lift(const ResidueVector& v) {
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = rho(v[i], v.modulus());
    return out;
}

}  // namespace zklat
