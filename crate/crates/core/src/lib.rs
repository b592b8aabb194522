//! Exact computation of the optimal exponent `p_V` for which
//! `rho_h <= p_V rho_V`, and of the temperedness criterion `rho_h <= rho_q`
//! for homogeneous spaces `G/H`.

pub mod error;
pub mod pairdb;
pub mod pvcore;
pub mod rat;
pub mod ratlp;
pub mod realforms;
pub mod repkit;
pub mod rho;
pub mod rootsys;

pub use error::{Error, Result};
pub use pvcore::{compute_pv, temperedness_check, tensor_bound, PvResult, PvValue, Verdict};
pub use rat::Rat;
pub use repkit::{HighestWeight, RepName, WeightSystem};
pub use rho::{ModuleSpec, RhoFunction, SemisimpleAlg, Summand};
pub use rootsys::{root_system, RootSystem, Series, WeightVec};
