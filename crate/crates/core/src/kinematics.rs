//! Center-of-mass kinematics for the six tree-level QED processes.
//!
//! All energies and momenta are expressed in units of the electron mass,
//! so the incoming three-momentum magnitude is the dimensionless
//! parameter `mu` itself. Incoming particles travel along the +z/-z axis;
//! outgoing particles lie in the x-z plane at polar angle `theta`.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Muon/electron mass ratio (CODATA).
pub const MUON_MASS: f64 = 206.768_283_0;

/// Electron mass in its own units.
pub const ELECTRON_MASS: f64 = 1.0;

/// A contravariant four-vector `(E, px, py, pz)` with metric (+,-,-,-).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourVector {
    pub e: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(e: f64, x: f64, y: f64, z: f64) -> Self {
        Self { e, x, y, z }
    }

    /// Minkowski inner product `a.b = a0 b0 - a.b`.
    pub fn dot(&self, other: &Self) -> f64 {
        self.e * other.e - self.x * other.x - self.y * other.y - self.z * other.z
    }

    /// Invariant square `p.p`.
    pub fn mass_squared(&self) -> f64 {
        self.dot(self)
    }

    /// Magnitude of the spatial part.
    pub fn spatial_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector::new(self.e + rhs.e, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector::new(self.e - rhs.e, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.e, -self.x, -self.y, -self.z)
    }
}

/// One of the six tree-level QED scattering processes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProcessKind {
    /// e- e+ -> e- e+
    Bhabha,
    /// e- e- -> e- e-
    Moller,
    /// e- mu- -> e- mu-
    ElectronMuon,
    /// e- e+ -> mu- mu+
    MuonPairProduction,
    /// e- gamma -> e- gamma
    Compton,
    /// e- e+ -> gamma gamma
    PairAnnihilation,
}

impl ProcessKind {
    pub const ALL: [ProcessKind; 6] = [
        ProcessKind::Bhabha,
        ProcessKind::Moller,
        ProcessKind::ElectronMuon,
        ProcessKind::MuonPairProduction,
        ProcessKind::Compton,
        ProcessKind::PairAnnihilation,
    ];

    /// Masses of the two incoming legs, in electron masses.
    pub fn incoming_masses(&self) -> [f64; 2] {
        match self {
            ProcessKind::Bhabha | ProcessKind::Moller | ProcessKind::MuonPairProduction => {
                [ELECTRON_MASS, ELECTRON_MASS]
            }
            ProcessKind::ElectronMuon => [ELECTRON_MASS, MUON_MASS],
            ProcessKind::Compton => [ELECTRON_MASS, 0.0],
            ProcessKind::PairAnnihilation => [ELECTRON_MASS, ELECTRON_MASS],
        }
    }

    /// Masses of the two outgoing legs, in electron masses.
    pub fn outgoing_masses(&self) -> [f64; 2] {
        match self {
            ProcessKind::Bhabha | ProcessKind::Moller => [ELECTRON_MASS, ELECTRON_MASS],
            ProcessKind::ElectronMuon => [ELECTRON_MASS, MUON_MASS],
            ProcessKind::MuonPairProduction => [MUON_MASS, MUON_MASS],
            ProcessKind::Compton => [ELECTRON_MASS, 0.0],
            ProcessKind::PairAnnihilation => [0.0, 0.0],
        }
    }

    /// Whether the outgoing particle content matches the incoming one, so
    /// that the output state can feed the next scattering step.
    pub fn supports_iteration(&self) -> bool {
        matches!(
            self,
            ProcessKind::Bhabha
                | ProcessKind::Moller
                | ProcessKind::ElectronMuon
                | ProcessKind::Compton
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProcessKind::Bhabha => "bhabha",
            ProcessKind::Moller => "moller",
            ProcessKind::ElectronMuon => "electron_muon",
            ProcessKind::MuonPairProduction => "muon_pair_production",
            ProcessKind::Compton => "compton",
            ProcessKind::PairAnnihilation => "pair_annihilation",
        }
    }
}

impl std::str::FromStr for ProcessKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "bhabha" => Ok(ProcessKind::Bhabha),
            "moller" | "m\u{f8}ller" => Ok(ProcessKind::Moller),
            "electron_muon" | "emu" => Ok(ProcessKind::ElectronMuon),
            "muon_pair_production" | "muon_pair" => Ok(ProcessKind::MuonPairProduction),
            "compton" => Ok(ProcessKind::Compton),
            "pair_annihilation" | "annihilation" => Ok(ProcessKind::PairAnnihilation),
            other => Err(format!("unknown process '{other}'")),
        }
    }
}

impl std::fmt::Display for ProcessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A kinematic point `(mu, theta)`: dimensionless momentum `mu = |p|/m`
/// and center-of-mass scattering angle `theta` in the open interval (0, pi).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KinematicPoint {
    pub mu: f64,
    pub theta: f64,
}

impl KinematicPoint {
    pub fn new(mu: f64, theta: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::InvalidMu { mu });
        }
        if !(theta.is_finite() && theta > 0.0 && theta < std::f64::consts::PI) {
            return Err(Error::InvalidAngle { theta });
        }
        Ok(Self { mu, theta })
    }
}

/// Full center-of-mass configuration: four on-shell momenta and the
/// Mandelstam invariants.
#[derive(Debug, Clone, Copy)]
pub struct ComConfiguration {
    pub process: ProcessKind,
    pub point: KinematicPoint,
    /// Incoming momenta: leg 0 along +z, leg 1 along -z.
    pub incoming: [FourVector; 2],
    /// Outgoing momenta: leg 0 at polar angle theta in the x-z plane,
    /// leg 1 opposite.
    pub outgoing: [FourVector; 2],
    pub incoming_masses: [f64; 2],
    pub outgoing_masses: [f64; 2],
    pub s: f64,
    pub t: f64,
    pub u: f64,
}

/// Builds the COM configuration for `process` at `point`.
///
/// The incoming three-momentum magnitude is `mu` for both legs; outgoing
/// momenta follow from energy conservation, which for unequal outgoing
/// masses (muon pair production) requires the COM energy to exceed the
/// production threshold.
pub fn build_configuration(process: ProcessKind, point: KinematicPoint) -> Result<ComConfiguration> {
    let point = KinematicPoint::new(point.mu, point.theta)?;
    let p = point.mu;
    let [m1, m2] = process.incoming_masses();
    let [m3, m4] = process.outgoing_masses();

    let e1 = (p * p + m1 * m1).sqrt();
    let e2 = (p * p + m2 * m2).sqrt();
    let sqrt_s = e1 + e2;
    let s = sqrt_s * sqrt_s;

    let threshold = m3 + m4;
    if sqrt_s <= threshold {
        return Err(Error::BelowThreshold { sqrt_s, threshold });
    }

    // Two-body final state: E3 = (s + m3^2 - m4^2) / (2 sqrt(s)).
    let e3 = (s + m3 * m3 - m4 * m4) / (2.0 * sqrt_s);
    let e4 = sqrt_s - e3;
    let q = (e3 * e3 - m3 * m3).sqrt();

    let (sin_t, cos_t) = point.theta.sin_cos();
    let incoming = [
        FourVector::new(e1, 0.0, 0.0, p),
        FourVector::new(e2, 0.0, 0.0, -p),
    ];
    let outgoing = [
        FourVector::new(e3, q * sin_t, 0.0, q * cos_t),
        FourVector::new(e4, -q * sin_t, 0.0, -q * cos_t),
    ];

    let s_inv = (incoming[0] + incoming[1]).mass_squared();
    let t_inv = (incoming[0] - outgoing[0]).mass_squared();
    let u_inv = (incoming[0] - outgoing[1]).mass_squared();

    Ok(ComConfiguration {
        process,
        point,
        incoming,
        outgoing,
        incoming_masses: [m1, m2],
        outgoing_masses: [m3, m4],
        s: s_inv,
        t: t_inv,
        u: u_inv,
    })
}

/// Mandelstam invariants `(s, t, u)` with `s = (p1+p2)^2`, `t = (p1-q1)^2`,
/// `u = (p1-q2)^2`.
pub fn mandelstam(process: ProcessKind, point: KinematicPoint) -> Result<(f64, f64, f64)> {
    let config = build_configuration(process, point)?;
    Ok((config.s, config.t, config.u))
}

impl ComConfiguration {
    /// Residual of total four-momentum conservation, relative to the COM energy.
    pub fn conservation_residual(&self) -> f64 {
        let total = self.incoming[0] + self.incoming[1] - self.outgoing[0] - self.outgoing[1];
        let scale = self.incoming[0].e + self.incoming[1].e;
        (total.e.abs() + total.x.abs() + total.y.abs() + total.z.abs()) / scale
    }

    /// Residual of the sum rule `s + t + u = sum of squared masses`, relative to s.
    pub fn mandelstam_sum_residual(&self) -> f64 {
        let mass_sum: f64 = self
            .incoming_masses
            .iter()
            .chain(self.outgoing_masses.iter())
            .map(|m| m * m)
            .sum();
        ((self.s + self.t + self.u - mass_sum) / self.s).abs()
    }
}
