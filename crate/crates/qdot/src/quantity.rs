//! Radial quantities available to the `profile` command.

use crate::error::CliError;
use qdot_core::{NumericsError, QuadSpec, TripletState};
use std::str::FromStr;

/// Below this density the ratio fields are reported as NaN.
pub const DENSITY_FLOOR: f64 = 1e-280;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Rho,
    RRho,
    J,
    Jp,
    Jd,
    Jm,
    EEe,
    EH,
    EXc,
    Z,
    D,
    L,
    Im,
    M,
    ZForce,
    DForce,
    EllForce,
    ImForce,
    DPlusZ,
    LawRhs,
}

const TABLE: [(&str, Quantity); 20] = [
    ("rho", Quantity::Rho),
    ("r_rho", Quantity::RRho),
    ("j", Quantity::J),
    ("jp", Quantity::Jp),
    ("jd", Quantity::Jd),
    ("jm", Quantity::Jm),
    ("e_ee", Quantity::EEe),
    ("e_H", Quantity::EH),
    ("e_xc", Quantity::EXc),
    ("Z", Quantity::Z),
    ("D", Quantity::D),
    ("L", Quantity::L),
    ("Im", Quantity::Im),
    ("M", Quantity::M),
    ("z_force", Quantity::ZForce),
    ("d_force", Quantity::DForce),
    ("ell_force", Quantity::EllForce),
    ("im_force", Quantity::ImForce),
    ("DplusZ", Quantity::DPlusZ),
    ("law_rhs", Quantity::LawRhs),
];

impl Quantity {
    pub fn names() -> Vec<&'static str> {
        TABLE.iter().map(|(n, _)| *n).collect()
    }

    pub fn name(self) -> &'static str {
        TABLE.iter().find(|(_, q)| *q == self).map(|(n, _)| *n).expect("every quantity is tabulated")
    }

    /// Quantities defined as a force density divided by ρ.
    pub fn is_ratio(self) -> bool {
        matches!(
            self,
            Self::EEe | Self::EH | Self::EXc | Self::Z | Self::D | Self::L | Self::Im | Self::DPlusZ | Self::LawRhs
        )
    }

    /// (value, estimated absolute error) at radius r.
    pub fn evaluate(self, state: &TripletState, r: f64, spec: &QuadSpec) -> Result<(f64, f64), NumericsError> {
        if self.is_ratio() && state.density(r) < DENSITY_FLOOR {
            return Ok((f64::NAN, f64::NAN));
        }
        let exact = |v: f64| Ok((v, 0.0));
        match self {
            Self::Rho => exact(state.density(r)),
            Self::RRho => exact(r * state.density(r)),
            Self::J => exact(state.current_components(r).j_total),
            Self::Jp => exact(state.current_components(r).j_p),
            Self::Jd => exact(state.current_components(r).j_d),
            Self::Jm => exact(state.current_components(r).j_m),
            Self::EEe => exact(state.field_ee(r)),
            Self::EH => {
                let h = state.field_hartree(r, spec)?;
                Ok((h.value, h.error))
            }
            Self::EXc => {
                let h = state.field_hartree(r, spec)?;
                Ok((state.field_ee(r) - h.value, h.error))
            }
            Self::Z => exact(state.kinetic_field(r)),
            Self::D => exact(state.differential_density_field(r)),
            Self::L => exact(state.lorentz_field(r)),
            Self::Im => exact(state.internal_magnetic_field(r)),
            Self::M => exact(state.m_field(r)),
            Self::ZForce => exact(state.kinetic_force(r)),
            Self::DForce => exact(state.differential_density_force(r)),
            Self::EllForce => exact(state.density(r) * state.lorentz_field(r)),
            Self::ImForce => exact(state.density(r) * state.internal_magnetic_field(r)),
            Self::DPlusZ => exact(state.differential_density_field(r) + state.kinetic_field(r)),
            Self::LawRhs => exact(state.internal_field_sum(r)),
        }
    }
}

impl FromStr for Quantity {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TABLE.iter().find(|(n, _)| *n == s).map(|(_, q)| *q).ok_or_else(|| {
            CliError::Usage(format!("unknown quantity '{s}'; valid names: {}", Quantity::names().join(", ")))
        })
    }
}
