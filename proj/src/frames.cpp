#include "zklat/frame.hpp"

#include <optional>

#include "zklat/errors.hpp"

namespace zklat {

Frame Frame::rescaled(std::int64_t factor) const {
    if (factor <= 0) throw InputError("rescale factor must be positive");
    Frame f{scale * factor * factor, vectors, norm};
    for (std::size_t i = 0; i < f.vectors.rows(); ++i)
        for (auto& x : f.vectors.row(i)) x *= factor;
    return f;
}

bool is_frame(const Frame& frame) {
    const auto n = frame.vectors.rows();
    if (frame.vectors.cols() != n || frame.norm <= 0) return false;
    const auto target = frame.scale * frame.norm;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const auto p = dot(frame.vectors.row(i), frame.vectors.row(j));
            if (p != (i == j ? target : 0)) return false;
        }
    return true;
}

namespace {

// The frame stored at the lattice's scale, when that scale is a square multiple of the frame's.
std::optional<Frame> aligned(const Frame& frame, std::int64_t scale) {
    if (scale % frame.scale != 0) return std::nullopt;
    const auto ratio = scale / frame.scale;
    std::int64_t f = 1;
    while (f * f < ratio) ++f;
    if (f * f != ratio) return std::nullopt;
    return f == 1 ? frame : frame.rescaled(f);
}

}  // namespace

bool frame_in_lattice(const LatticeBasis& lattice, const Frame& frame) {
    if (frame.vectors.cols() != lattice.dimension()) return false;
    const auto f = aligned(frame, lattice.scale());
    if (!f) return false;
    for (std::size_t i = 0; i < f->vectors.rows(); ++i)
        if (!lattice.contains(f->vectors.row(i))) return false;
    return true;
}

Frame standard_frame(const LinearCode& code) {
    if (!is_self_dual(code)) throw DomainError("the standard frame is taken inside A_m(C) for self-dual C");
    const auto m = code.modulus().value();
    return Frame{m, IntMatrix::identity(code.length(), m), m};
}

Frame double_frame(const Frame& frame) {
    const auto n = frame.vectors.rows();
    if (n % 2 != 0) throw DomainError("frame doubling needs an even number of vectors");
    Frame out{frame.scale, IntMatrix(n, frame.vectors.cols()), 2 * frame.norm};
    for (std::size_t i = 0; i < n; i += 2) {
        for (std::size_t j = 0; j < frame.vectors.cols(); ++j) {
            const auto a = frame.vectors(i, j), b = frame.vectors(i + 1, j);
            out.vectors(i, j) = a + b;
            out.vectors(i + 1, j) = a - b;
        }
    }
    if (!is_frame(out)) throw DomainError("doubled vectors fail the frame equation (input was not a frame)");
    return out;
}

LatticeBasis frame_coordinates(const LatticeBasis& lattice, const Frame& frame) {
    if (!is_frame(frame)) throw DomainError("not a frame");
    if (!frame_in_lattice(lattice, frame)) throw DomainError("frame is not contained in the lattice");
    const auto n = lattice.dimension();
    if (frame.size() != n) throw DomainError("frame size differs from the lattice dimension");
    const auto s = lattice.scale();
    const auto f = *aligned(frame, s);
    IntMatrix coords(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = dot(lattice.rows().row(r), f.vectors.row(i));
            if (p % s != 0) throw DomainError("lattice is not integral against the frame");
            coords(r, i) = p / s;
        }
    // ⟨x, f_i⟩ / √ℓ are orthonormal coordinates of x, stored scaled by √ℓ.
    // The frame vectors map to ℓ·e_i, so ℓ·Z^n lies in the image.
    return LatticeBasis(frame.norm, std::move(coords), frame.norm);
}

LinearCode code_from_frame(const LatticeBasis& lattice, const Frame& frame, std::optional<Modulus> expected) {
    if (expected && expected->value() != frame.norm) {
        throw DomainError("frame norm " + std::to_string(frame.norm) + " does not match the modulus " +
                          std::to_string(expected->value()));
    }
    if (frame.norm < 2) throw DomainError("frame norm must be at least 2 to define a code");
    if (!lattice_invariants(lattice).unimodular) throw DomainError("code extraction needs a unimodular lattice");
    const auto image = frame_coordinates(lattice, frame);
    const Modulus mod(frame.norm);
    std::vector<ResidueVector> gens;
    for (std::size_t r = 0; r < image.dimension(); ++r) {
        auto v = ResidueVector::reduced(mod, image.rows().row(r));
        if (!v.is_zero()) gens.push_back(std::move(v));
    }
    return LinearCode(mod, lattice.dimension(), std::move(gens));
}

}  // namespace zklat
