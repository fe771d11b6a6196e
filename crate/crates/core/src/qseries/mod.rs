//! Exact `q`- and `(q,t)`-polynomials, truncated series, and evaluators for
//! the closed forms.

mod formulas;
mod limits;
mod poly;
mod series;

pub use formulas::{
    catalan_qt, combined_t1, combined_t1_catalan, drect_box_formula, dsq_box_formula, ex83_box,
    fh_formula, keith_km, lgv_product, lopsided_catalan_branch, lopsided_sum_branch, q_integer,
    q_pochhammer, qbinom, rr_box, thm_box_t1, thm_central_drect, thm_central_dsq, thm_lopsided,
};
pub use limits::{limit_series, rank_parity_closed_form, Limit, LimitParams, LIMIT_NAMES};
pub use poly::{QPoly, QTPoly};
pub use series::{
    inv_product, inv_q_pochhammer, product_exponents, ExponentSequence, TruncatedSeries,
};
