//! Thermodynamic length under the Weinhold metric for gases with constant
//! heat capacity.
//!
//! The crate is organized bottom-up:
//!
//! - [`eos`]: constitutive models `u(s, v)` and their derived fields.
//! - [`metric`]: the Weinhold metric, as a Hessian and from response coefficients.
//! - [`quadrature`]: adaptive Gauss–Kronrod integration.
//! - [`path`]: parametric paths, their length, and closed-form isentropic lengths.
//! - [`work`]: isentropic work and the work–length identities.
//! - [`numdiff`]: finite-difference helpers used by the verification checks.

pub mod eos;
pub mod error;
pub mod metric;
pub mod numdiff;
pub mod path;
pub mod quadrature;
pub mod work;

pub use eos::{CustomProfile, GasModel, ModelRecord, State, ThermoPoint, Variant};
pub use error::{Error, Result};
pub use metric::{line_element, metric_from_coefficients, metric_from_hessian, MetricTensor};
pub use path::{
    isentropic_length_closed, isentropic_length_coefficients, isentropic_length_numeric,
    isentropic_length_signed, path_length, rarefaction_length, LengthResult, Path, Segment,
};
pub use quadrature::{integrate, Integral, QuadratureConfig};
pub use work::{
    isentropic_work, isotherm_remark_check, lemma_check, length_from_work, pressure_integral_check,
    work_from_length, LemmaCheck, WorkResult,
};
