//! Closed-form dimension and Poincare-series machinery, plus the
//! cross-check report against rank-based computation and the printed
//! simplified polynomials.

mod dims;
mod euler;
mod report;

pub use dims::{
    closed_form_series_coefficient, common_term_bracket, dim_jet_functions, dim_jet_one_forms,
    dim_moduli, dim_orbit_formula, dim_structure_jets, dim_symplectic_germ_jets, dimension_table,
    poincare_coefficients, DimRow, DimensionTable, SeriesCoefficients,
};
pub use euler::{euler_operator_apply, EulerOperator, EulerTerm};
pub use report::{
    closed_form_report, paper_closed_forms, printed_rational_constant, printed_rational_linear,
    printed_series_constant, printed_series_linear, rational_form_coefficient,
    series_form_coefficient, CellCheck, ClosedFormReport, FormCheck, RankCell, ReportRow,
    RowStatus,
};
