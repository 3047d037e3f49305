//! Critical parameters, revival detection and parameter sweeps.

mod critical;
mod revival;
mod scan;
mod sweep;

pub use critical::{
    critical_b_nonuniform, critical_b_uniform, critical_dm_strength, critical_temperatures,
    critical_temperatures_with,
};
pub use revival::{detect_revival, detect_revival_with, RevivalReport};
pub use scan::{Interval, ScanOptions};
pub use sweep::{
    evaluate_point, format_g9, sweep, verify_sweep, SweepAxis, SweepParam, SweepResult, SweepRow,
    SweepSpec, VerifyReport,
};
