#pragma once

#include <cstdint>
#include <optional>

#include "zklat/code.hpp"
#include "zklat/int_matrix.hpp"
#include "zklat/lattice.hpp"

namespace zklat {

/// n vectors with ⟨f_i, f_j⟩ = norm·δ_ij, stored like LatticeBasis rows
/// (integer coordinates of √scale·f_i).
struct Frame {
    std::int64_t scale = 1;
    IntMatrix vectors;
    std::int64_t norm = 0;  // true common norm ℓ

    std::size_t size() const noexcept { return vectors.rows(); }
    Frame rescaled(std::int64_t factor) const;
};

/// Exact check of the frame equation f_i·f_j = scale·norm·δ_ij.
bool is_frame(const Frame& frame);
/// Same scale and every vector lies in the lattice.
bool frame_in_lattice(const LatticeBasis& lattice, const Frame& frame);

/// {√m e_i} inside A_m(C).
Frame standard_frame(const LinearCode& code);

/// {f_{2i-1} + f_{2i}, f_{2i-1} - f_{2i}}: a 2ℓ-frame. DomainError on odd size;
/// the output is re-checked against the frame equation.
Frame double_frame(const Frame& frame);

/// L written in frame coordinates x ↦ (⟨x, f_i⟩)_i, stored at scale ℓ. This is
/// an isometric copy of L; when L is unimodular it equals A_ℓ(C) for the code
/// returned by code_from_frame.
LatticeBasis frame_coordinates(const LatticeBasis& lattice, const Frame& frame);

/// The code C over Z_ℓ with A_ℓ(C) isometric to L via the frame. Requires a
/// valid frame inside the unimodular lattice L; when `expected` is given the
/// frame norm must equal it.
LinearCode code_from_frame(const LatticeBasis& lattice, const Frame& frame,
                           std::optional<Modulus> expected = std::nullopt);

}  // namespace zklat
