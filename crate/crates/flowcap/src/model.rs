//! Core problem data: domain, initial profile, free-energy potential, the
//! discrete flow map, and energy bookkeeping.
//!
//! The initial profile is the only carrier of solution values in Lagrangian
//! coordinates: the trajectory solvers move coordinates, never values, so a
//! profile must supply both its value and an exact closed-form derivative.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An open interval on the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain1D {
    pub left: f64,
    pub right: f64,
}

impl Domain1D {
    pub fn new(left: f64, right: f64) -> Result<Self> {
        if !(left < right) {
            return Err(Error::InvalidParameter(format!(
                "domain requires left < right, got [{left}, {right}]"
            )));
        }
        Ok(Self { left, right })
    }

    /// The unit symmetric interval (-1, 1) used by most experiments.
    pub fn symmetric_unit() -> Self {
        Self {
            left: -1.0,
            right: 1.0,
        }
    }

    pub fn length(&self) -> f64 {
        self.right - self.left
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.left && x <= self.right
    }

    pub(crate) fn check_contains(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutsideDomain {
                coordinate: x,
                left: self.left,
                right: self.right,
            })
        }
    }
}

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Named analytic shapes for the initial datum.
#[derive(Clone)]
pub enum ProfileKind {
    /// f(X) = X.
    Linear,
    /// f(X) = 1 - X^2.
    Parabola,
    /// f(X) = c.
    Constant(f64),
    /// A user-supplied closed form; the derivative must be exact.
    Custom {
        value: ScalarFn,
        derivative: ScalarFn,
    },
}

impl fmt::Debug for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileKind::Linear => write!(f, "Linear"),
            ProfileKind::Parabola => write!(f, "Parabola"),
            ProfileKind::Constant(c) => write!(f, "Constant({c})"),
            ProfileKind::Custom { .. } => write!(f, "Custom"),
        }
    }
}

/// The initial datum in Lagrangian coordinates, with exact derivative.
#[derive(Debug, Clone)]
pub struct InitialProfile {
    pub kind: ProfileKind,
    pub domain: Domain1D,
}

impl InitialProfile {
    pub fn linear(domain: Domain1D) -> Self {
        Self {
            kind: ProfileKind::Linear,
            domain,
        }
    }

    pub fn parabola(domain: Domain1D) -> Self {
        Self {
            kind: ProfileKind::Parabola,
            domain,
        }
    }

    pub fn constant(domain: Domain1D, c: f64) -> Self {
        Self {
            kind: ProfileKind::Constant(c),
            domain,
        }
    }

    pub fn custom<V, D>(domain: Domain1D, value: V, derivative: D) -> Self
    where
        V: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            kind: ProfileKind::Custom {
                value: Arc::new(value),
                derivative: Arc::new(derivative),
            },
            domain,
        }
    }

    /// Value and slope of the profile at a Lagrangian coordinate.
    pub fn eval(&self, x: f64) -> Result<(f64, f64)> {
        self.domain.check_contains(x)?;
        Ok(self.eval_unchecked(x))
    }

    /// Same as [`eval`](Self::eval) without the domain check; used by the
    /// assemblers whose quadrature points are inside the domain by
    /// construction.
    pub(crate) fn eval_unchecked(&self, x: f64) -> (f64, f64) {
        match &self.kind {
            ProfileKind::Linear => (x, 1.0),
            ProfileKind::Parabola => (1.0 - x * x, -2.0 * x),
            ProfileKind::Constant(c) => (*c, 0.0),
            ProfileKind::Custom { value, derivative } => (value(x), derivative(x)),
        }
    }

    /// Largest |f| over the domain, the bound preserved by reconstruction.
    ///
    /// Analytic for the named shapes; custom profiles are sampled densely.
    pub fn max_abs(&self) -> f64 {
        match &self.kind {
            ProfileKind::Linear => self.domain.left.abs().max(self.domain.right.abs()),
            ProfileKind::Parabola => {
                let mut m = (1.0 - self.domain.left * self.domain.left).abs();
                m = m.max((1.0 - self.domain.right * self.domain.right).abs());
                if self.domain.contains(0.0) {
                    m = m.max(1.0);
                }
                m
            }
            ProfileKind::Constant(c) => c.abs(),
            ProfileKind::Custom { value, .. } => {
                let n = 4096;
                let mut m: f64 = 0.0;
                for i in 0..=n {
                    let x = self.domain.left
                        + self.domain.length() * (i as f64) / (n as f64);
                    m = m.max(value(x).abs());
                }
                m
            }
        }
    }
}

/// The free-energy density F and its derivative.
#[derive(Debug, Clone, PartialEq)]
pub enum Potential {
    /// F(s) = (s^2 - 1)^2 / (4 eps2), minima at s = +-1.
    DoubleWell { eps2: f64 },
    /// F(s) = theta/2 [(1+s)log(1+s) + (1-s)log(1-s)] - theta_c/2 s^2,
    /// defined for |s| < 1.
    Logarithmic { theta: f64, theta_c: f64 },
    /// F = 0; the trajectory equation then has no forcing.
    None,
}

impl Potential {
    pub fn double_well(eps2: f64) -> Result<Self> {
        if eps2 <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "double-well potential requires eps2 > 0, got {eps2}"
            )));
        }
        Ok(Potential::DoubleWell { eps2 })
    }

    /// Logarithmic potential with the conventional defaults theta = 1, theta_c = 2.
    pub fn logarithmic_default() -> Self {
        Potential::Logarithmic {
            theta: 1.0,
            theta_c: 2.0,
        }
    }

    /// (F(s), F'(s)). The logarithmic variant is a domain error for |s| >= 1.
    pub fn eval(&self, s: f64) -> Result<(f64, f64)> {
        match self {
            Potential::DoubleWell { eps2 } => {
                let w = s * s - 1.0;
                Ok((w * w / (4.0 * eps2), s * w / eps2))
            }
            Potential::Logarithmic { theta, theta_c } => {
                if s.abs() >= 1.0 {
                    return Err(Error::OutsideDomain {
                        coordinate: s,
                        left: -1.0,
                        right: 1.0,
                    });
                }
                let f = 0.5 * theta * ((1.0 + s) * (1.0 + s).ln() + (1.0 - s) * (1.0 - s).ln())
                    - 0.5 * theta_c * s * s;
                let fp = 0.5 * theta * ((1.0 + s).ln() - (1.0 - s).ln()) - theta_c * s;
                Ok((f, fp))
            }
            Potential::None => Ok((0.0, 0.0)),
        }
    }
}

/// Discrete representation of the flow map.
#[derive(Debug, Clone, PartialEq)]
pub enum MapRepresentation {
    /// Positions at the mesh nodes, endpoints included (piecewise-linear map).
    Nodal(Vec<f64>),
    /// Coefficients of the boundary-pinned spectral expansion
    /// x(X) = X + sum_j c_j (L_j - L_{j+2}).
    SpectralCoeffs(Vec<f64>),
}

impl MapRepresentation {
    pub fn len(&self) -> usize {
        match self {
            MapRepresentation::Nodal(v) => v.len(),
            MapRepresentation::SpectralCoeffs(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The flow map at one time level, with the prior level kept for
/// second-order stepping.
#[derive(Debug, Clone, PartialEq)]
pub struct FlowMapState {
    pub repr: MapRepresentation,
    pub time: f64,
    pub previous: Option<MapRepresentation>,
}

impl FlowMapState {
    pub fn new(repr: MapRepresentation, time: f64) -> Self {
        Self {
            repr,
            time,
            previous: None,
        }
    }
}

/// Total trajectory energy and its components.
///
/// `total` is the sum of the three parts by construction; the second-order
/// augmentation is zero for first-order steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyReport {
    pub total: f64,
    pub gradient_part: f64,
    pub potential_part: f64,
    pub bdf2_augmentation: f64,
}

impl EnergyReport {
    pub fn new(gradient_part: f64, potential_part: f64, bdf2_augmentation: f64) -> Self {
        Self {
            total: gradient_part + potential_part + bdf2_augmentation,
            gradient_part,
            potential_part,
            bdf2_augmentation,
        }
    }
}
