/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_CORE_MATIO_HPP
#define QOMEGA_CORE_MATIO_HPP

#include <string>

#include "core/hermop.hpp"

namespace qomega {

/**
 * Matrix files are JSON objects {"dim_a": int, "dim_b": int, "re": [[..]],
 * "im": [[..]]} with row-major entry arrays; "im" may be omitted for real
 * matrices. Readers reject entries whose Hermitian deviation exceeds 1e-9
 * and report parse failures with line/column positions.
 */
HermOp matrix_from_json(const std::string& text);
std::string matrix_to_json(const HermOp& h);

HermOp matrix_read(const std::string& path);
void matrix_write(const std::string& path, const HermOp& h);

}  // namespace qomega

#endif
