//! Command-line front end: scenario sweeps, figure data and the
//! verification suite.

pub mod config;
pub mod figures;
pub mod output;
pub mod sweep;
pub mod verify;

/// Process exit codes. No other codes are used.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const CONFIG: u8 = 2;
    pub const VERIFICATION: u8 = 3;
}
