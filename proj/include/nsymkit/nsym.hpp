#pragma once

#include <memory>
#include <vector>

#include "nsymkit/composition.hpp"
#include "nsymkit/element.hpp"
#include "nsymkit/tableau.hpp"

namespace nsymkit {

// Basis changes. Each throws BasisError when handed the wrong basis.

/// R_beta -> sum over coarsenings alpha of (-1)^(l(beta)-l(alpha)) h_alpha.
Element ribbon_to_h(const Element& e);
/// h_beta -> sum over coarsenings alpha of R_alpha.
Element h_to_ribbon(const Element& e);
/// R_beta -> sum_alpha d_{alpha,beta} s_alpha.
Element ribbon_to_schur(const Element& e);
/// Inverse of ribbon_to_schur, through the exact inverse of d_matrix per degree.
Element schur_to_ribbon(const Element& e);
/// Psi_alpha in the ribbon basis; Psi_() is the unit.
Element psi_expand(const Composition& alpha);
/// Linear extension of psi_expand to a PSI-basis element.
Element psi_to_ribbon(const Element& e);
/// Any basis to any basis other than PSI, routed through R.
Element to_basis(const Element& e, Basis target);

/// Cached per-degree change-of-basis data. Entries are computed once and
/// shared; lookups are safe from any thread.
struct SchurTables {
    DMatrix d;
    /// inverse_columns[a] holds (b, c) with s_{index[a]} = sum c R_{index[b]}.
    std::vector<std::vector<std::pair<std::size_t, Integer>>> inverse_columns;
};

std::shared_ptr<const DMatrix> cached_d_matrix(int degree);
/// Also asserts integrality of the inverse (ConsistencyError if violated).
std::shared_ptr<const SchurTables> cached_schur_tables(int degree);

// Products.

/// R_alpha R_beta = R_{alpha.beta} + R_{alpha joined beta}, extended bilinearly.
Element mul_ribbon(const Element& a, const Element& b);
/// s_(n) * e via strictly increasing application of box-adding operators.
Element mul_row_schur(int n, const Element& e);
/// s_(1^n) * e via weakly decreasing application of box-adding operators.
Element mul_col_schur(int n, const Element& e);
/// R_(1^k, n-k) * e as the sum over reverse k-hookwords.
Element mul_hook_ribbon_schur(int n, int k, const Element& e);
/// General product through the ribbon basis, returned in `out`.
Element mul(const Element& a, const Element& b, Basis out);

// Psi_n * s_alpha, four ways.

/// Signed sum over all reverse hookwords of length n.
Element mn_primordial(int n, const Composition& alpha);
/// Signed sum over connected reverse hookwords of length n.
Element mn_connected(int n, const Composition& alpha);
/// Cancellation-free sum over nc border strips with no north-east step,
/// signed by height.
Element mn_rule(int n, const Composition& alpha);
/// Psi_n in the ribbon basis times s_alpha converted to ribbons, back to S.
Element mn_ribbon_route(int n, const Composition& alpha);

}  // namespace nsymkit
