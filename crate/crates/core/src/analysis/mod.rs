//! Bounded, exact analysis of kernels and faithfulness of `Φ_{a,b,c}`.

mod checks;
mod kernel;
mod witness;

pub use checks::{lemma8_check, shape_round_trip, sm3_word_equality, strip_preserves_image, Sm3Oracle};
pub use kernel::{
    kernel_search_sm2, nonscalar_power_check, prop8_compare, scalar_kernel_criterion, scalar_kernel_report,
    verify_cyclic_structure, KernelReport, Prop8Comparison,
};
pub use witness::{
    distinctness_certificate, find_scalar_witness, witness_root, witness_scalar, Certificate, Family,
    UnfaithfulnessWitness,
};

pub use crate::scalars::root_of_unity_order;
