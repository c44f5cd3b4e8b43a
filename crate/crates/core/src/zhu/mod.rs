//! Zhu's algebra `A(M(1)+)`: the products `∗` and `∘`, certified membership
//! in a truncated generating family of `O(M(1)+)`, the presentation by `[ω]`
//! and `[J]`, and the classification variety.

mod appendix;
mod classify;
mod invariants;
mod ospan;
mod products;
mod relations;

pub use appendix::{
    appendix_rows, lemma_ranks, published_quartic_expansion, published_tables, quartic_mode_vector,
    verify_appendix, verify_lemma43, AppendixRanks,
};
pub use classify::{classify, classify_report, Classification, IsolatedPoint};
pub use invariants::{skew_residue, virasoro_relation, zhu_invariants_report, OSpanCache};
pub use ospan::{in_o, o_span, o_span_with, Generator, OMembership, OSpanBasis, Witness};
pub use products::{circ, circ_n, poly_rep, star, PolyRepCache, ZhuElement};
pub use relations::{
    normal_form, p_poly, q_poly, relation_p, relation_q, reduce, reduce_with, verify_prop41, verify_prop42,
    zhu_basis, zhu_basis_report, ZhuBasisSummary,
};
