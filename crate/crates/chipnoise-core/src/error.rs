//! Error type shared by the numeric modules.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A physical precondition was violated (negative temperature, trap
    /// inside the metal, ...). The message names the offending quantity.
    Domain(&'static str),
    /// A resistivity target below the solvent's phonon floor was requested;
    /// carries the minimum achievable resistivity at that temperature.
    InfeasibleTarget { min_rho_uohm_cm: f64 },
    /// Adaptive quadrature hit its work limit before reaching the requested
    /// relative error.
    NoConvergence { achieved_rel: f64, requested_rel: f64 },
    /// Attempt to register two database entries under the same name.
    DuplicateName(String),
    /// Lookup of a name that is not in the database.
    UnknownName(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InfeasibleTarget { min_rho_uohm_cm } => write!(
                f,
                "infeasible resistivity target: minimum achievable is {min_rho_uohm_cm} uOhm.cm"
            ),
            Error::NoConvergence {
                achieved_rel,
                requested_rel,
            } => write!(
                f,
                "quadrature did not converge: achieved relative error {achieved_rel:.3e}, requested {requested_rel:.3e}"
            ),
            Error::DuplicateName(name) => write!(f, "duplicate database entry: {name}"),
            Error::UnknownName(name) => write!(f, "unknown material: {name}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
