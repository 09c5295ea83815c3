#include "zklat/code.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "zklat/errors.hpp"

namespace zklat {

namespace {

IntMatrix lift_rows(const std::vector<ResidueVector>& rows, std::size_t n) {
    IntMatrix m(0, n);
    std::vector<std::int64_t> r(n);
    for (const auto& v : rows) {
        for (std::size_t j = 0; j < n; ++j) r[j] = v[j];
        m.append_row(r);
    }
    return m;
}

mpz_class power(std::int64_t base, std::size_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

}  // namespace

LinearCode::LinearCode(Modulus mod, std::size_t length, std::vector<ResidueVector> generators)
    : mod_(mod), length_(length), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (!(g.modulus() == mod_)) throw InputError("generator modulus differs from code modulus");
        if (g.size() != length_) throw InputError("generator length differs from code length");
    }
    hnf_ = modular_hnf(lift_rows(generators_, length_), mod_.value());
    for (std::size_t c = 0; c < length_; ++c) {
        if (hnf_(c, c) == mod_.value()) continue;
        howell_.push_back(ResidueVector::reduced(mod_, hnf_.row(c)));
    }
}

LinearCode LinearCode::zero(Modulus mod, std::size_t length) { return LinearCode(mod, length, {}); }

LinearCode LinearCode::full(Modulus mod, std::size_t length) {
    std::vector<ResidueVector> gens;
    for (std::size_t i = 0; i < length; ++i) {
        ResidueVector e(mod, length);
        e.set(i, 1);
        gens.push_back(std::move(e));
    }
    return LinearCode(mod, length, std::move(gens));
}

LinearCode LinearCode::from_rows(Modulus mod, const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty()) throw InputError("from_rows needs at least one row to fix the length");
    std::vector<ResidueVector> gens;
    for (const auto& r : rows) gens.push_back(ResidueVector::reduced(mod, r));
    return LinearCode(mod, rows.front().size(), std::move(gens));
}

mpz_class LinearCode::cardinality() const {
    mpz_class c = 1;
    for (std::size_t i = 0; i < length_; ++i) c *= mod_.value() / hnf_(i, i);
    return c;
}

bool LinearCode::contains(const ResidueVector& v) const {
    if (!(v.modulus() == mod_) || v.size() != length_) return false;
    return hnf_contains(hnf_, v.entries());
}

LinearCode dual(const LinearCode& code) {
    const auto m = code.modulus().value();
    const auto rows = scaled_dual_rows(code.lattice_hnf(), m);
    std::vector<ResidueVector> gens;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        auto v = ResidueVector::reduced(code.modulus(), rows.row(i));
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return LinearCode(code.modulus(), code.length(), std::move(gens));
}

bool is_self_orthogonal(const LinearCode& code) {
    const auto& rows = code.howell_form();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (inner_product(rows[i], rows[j]) != 0) return false;
    return true;
}

bool is_self_dual(const LinearCode& code) {
    // |C|·|C⊥| = m^n, so a self-orthogonal C is self-dual iff |C|² = m^n.
    if (!is_self_orthogonal(code)) return false;
    const auto size = code.cardinality();
    return size * size == power(code.modulus().value(), code.length());
}

bool type_ii_by_generators(const LinearCode& code) {
    if (!code.modulus().is_even()) return false;
    if (!is_self_dual(code)) return false;
    const auto four_k = 2 * code.modulus().value();
    for (const auto& g : code.howell_form())
        if (euclidean_weight(g) % four_k != 0) return false;
    return true;
}

bool type_ii_by_enumeration(const LinearCode& code, std::uint64_t cap) {
    if (!code.modulus().is_even()) return false;
    if (!is_self_dual(code)) return false;
    const auto four_k = 2 * code.modulus().value();
    bool ok = true;
    for_each_codeword(code, cap, [&](const ResidueVector& c) {
        if (euclidean_weight(c) % four_k != 0) ok = false;
    });
    return ok;
}

bool is_type_ii(const LinearCode& code, std::uint64_t cap) {
    const bool by_generators = type_ii_by_generators(code);
    if (!is_self_dual(code) || code.cardinality() > cap) return by_generators;
    const bool direct = type_ii_by_enumeration(code, cap);
    if (direct != by_generators)
        throw std::logic_error("Type II generator criterion disagrees with full enumeration");
    return direct;
}

void for_each_codeword(const LinearCode& code, std::uint64_t cap,
                       const std::function<void(const ResidueVector&)>& visit) {
    const auto size = code.cardinality();
    if (size > cap) {
        throw ResourceError("code has " + size.get_str() + " codewords, above the enumeration cap of " +
                            std::to_string(cap));
    }
    const auto& rows = code.howell_form();
    const auto m = code.modulus().value();
    std::vector<std::int64_t> order(rows.size()), digit(rows.size(), 0);
    std::vector<ResidueVector> wrap;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::int64_t lead = 0;
        for (auto x : rows[i].entries())
            if (x != 0) {
                lead = x;
                break;
            }
        order[i] = m / lead;
        wrap.push_back(rows[i].scaled(order[i]));
    }

    ResidueVector word(code.modulus(), code.length());
    visit(word);
    for (;;) {
        std::size_t i = 0;
        for (; i < rows.size(); ++i) {
            word += rows[i];
            if (++digit[i] < order[i]) break;
            digit[i] = 0;
            word -= wrap[i];
        }
        if (i == rows.size()) return;
        visit(word);
    }
}

std::vector<ResidueVector> enumerate_codewords(const LinearCode& code, std::uint64_t cap) {
    std::vector<ResidueVector> out;
    for_each_codeword(code, cap, [&](const ResidueVector& c) { out.push_back(c); });
    return out;
}

SWEPolynomial::SWEPolynomial(Modulus mod, std::size_t length) : mod_(mod), length_(length) {}

void SWEPolynomial::add(const Exponents& e, const mpz_class& c) {
    if (e.size() != variables()) throw InputError("swe exponent tuple has the wrong arity");
    std::size_t sum = 0;
    for (auto x : e) {
        if (x < 0) throw InputError("negative swe exponent");
        sum += static_cast<std::size_t>(x);
    }
    if (sum != length_) throw InputError("swe exponent tuple does not sum to the code length");
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
}

mpz_class SWEPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class SWEPolynomial::total() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string SWEPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        os << (first ? "" : " + ");
        first = false;
        if (it->second != 1) os << it->second.get_str();
        for (std::size_t j = 0; j < it->first.size(); ++j) {
            if (it->first[j] == 0) continue;
            os << "x" << j;
            if (it->first[j] != 1) os << "^" << it->first[j];
        }
    }
    return first ? "0" : os.str();
}

SWEPolynomial::Exponents composition(const ResidueVector& v) {
    SWEPolynomial::Exponents e(static_cast<std::size_t>(v.modulus().half()) + 1, 0);
    for (auto x : v.entries()) {
        const auto r = rho(x, v.modulus());
        ++e[static_cast<std::size_t>(r < 0 ? -r : r)];
    }
    return e;
}

SWEPolynomial swe(const LinearCode& code, std::uint64_t cap) {
    std::map<SWEPolynomial::Exponents, std::uint64_t> counts;
    for_each_codeword(code, cap, [&](const ResidueVector& c) { ++counts[composition(c)]; });
    SWEPolynomial poly(code.modulus(), code.length());
    for (const auto& [e, c] : counts) poly.add(e, mpz_class(static_cast<unsigned long>(c)));
    return poly;
}

std::int64_t min_euclidean_weight_bruteforce(const LinearCode& code, std::uint64_t cap) {
    if (code.howell_form().empty()) throw DomainError("the zero code has no nonzero codeword");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for_each_codeword(code, cap, [&](const ResidueVector& c) {
        const auto w = euclidean_weight(c);
        if (w > 0 && w < best) best = w;
    });
    return best;
}

std::int64_t extremal_bound(std::size_t length, const Modulus& mod) {
    const auto four_k = 4 * mod.k();
    return four_k * static_cast<std::int64_t>(length / 24) + four_k;
}

std::string to_string(Extremality e) {
    switch (e) {
        case Extremality::extremal: return "extremal";
        case Extremality::not_extremal: return "not_extremal";
        case Extremality::unresolved: return "unresolved";
    }
    return "unresolved";
}

namespace {

void require_bound_applies(const LinearCode& code) {
    const auto k = code.modulus().k();
    if (k > 6) {
        throw DomainError("the Euclidean weight bound is only established under the hypothesis k <= 6 (got k = " +
                          std::to_string(k) + ")");
    }
}

}  // namespace

bool is_extremal(const LinearCode& code, std::int64_t min_weight) {
    require_bound_applies(code);
    return min_weight == extremal_bound(code.length(), code.modulus());
}

Extremality classify_extremality(const LinearCode& code, const WeightCertificate& cert) {
    require_bound_applies(code);
    if (!type_ii_by_generators(code)) return Extremality::not_extremal;
    const auto bound = extremal_bound(code.length(), code.modulus());
    if (cert.exact) return cert.value == bound ? Extremality::extremal : Extremality::not_extremal;
    return cert.value >= bound ? Extremality::extremal : Extremality::unresolved;
}

}  // namespace zklat
