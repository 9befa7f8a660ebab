//! The spherical principal series of `PSL₂(ℝ)` on `K`-finite functions of
//! `M\K`, with frequency `n` standing for `e^{2inθ}` and
//! `k(θ) = [[cos θ, sin θ], [−sin θ, cos θ]]`.

mod action;
mod analysis;
mod trig;

pub use action::{
    act, act_element, act_transpose_word, act_word, delta_and_truncate, dual_act, evaluate_extension, mat_mul,
    rotation, DualVector, Functional, ModelLetter, ModelState, TruncatedFunctional,
};
pub use analysis::{
    act_oracle, apply_annihilator, apply_to_spherical_delta, fejer_row, fejer_sqrt, finite_difference,
    is_real, iwasawa_coefficient, modulus_squared, p_function, px_span_rank, representation_failures,
    residual_report, FejerRow, ModeResidual, OracleProbe, ResidualReport, FD_STEP,
};
pub use trig::{eval_c64, TrigPolynomial};
