//! Prime-gap lower bounds driven by Euler-product approximations: the per-N
//! gate, the sequence simulators, staircase certificates and the exp-tower
//! numbers they are written in.

mod certify;
mod fixed;
mod gates;
mod sequences;
mod tower;

pub use certify::{
    default_exponent, reverify_step, staircase_certify, staircase_certify_budget, Hypothesis, PiAssumption,
    PiSource, QBoundMode, QSource, StairValue, StaircaseCertificate, StaircaseStep, StepWitness,
};
pub use gates::{
    euclid_baseline, euclid_baseline_int, theorem1_first_pass, theorem1_gate, theorem1_gate_capped, Theorem1Gate,
    THEOREM1_F_EXPONENT, THEOREM1_Q_POWER,
};
pub use sequences::{
    theorem2_sequence, theorem3_sequence, theorem3_tower, Theorem2Term, Theorem3Checkpoint, Theorem3Report,
    THEOREM2_MAX_N, THEOREM3_CHECKPOINTS,
};
pub use tower::{tower_compare, tower_normalize, LogTower};
