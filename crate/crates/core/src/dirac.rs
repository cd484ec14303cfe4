//! Brute-force evaluation of tree-level helicity amplitudes from explicit
//! Dirac matrices, helicity spinors, and photon polarization vectors.
//!
//! Everything lives in the Dirac representation. Spinor phases follow the
//! spherical convention `chi_R = (cos(t/2), e^{i phi} sin(t/2))`,
//! `chi_L = (-e^{-i phi} sin(t/2), cos(t/2))`; for the planar kinematics
//! used here (`phi` is 0 or pi) this is a rotation about the y-axis and all
//! spinor components stay real, which is what makes the assembled amplitude
//! matrices real without any per-entry phase surgery.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kinematics::{build_configuration, ComConfiguration, FourVector, KinematicPoint, ProcessKind};
use crate::{C64, CMat4, CVec4};

/// Helicity label for fermions and photons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Helicity {
    #[serde(rename = "R")]
    Right,
    #[serde(rename = "L")]
    Left,
}

impl Helicity {
    pub const BOTH: [Helicity; 2] = [Helicity::Right, Helicity::Left];

    /// +1 for right-handed, -1 for left-handed.
    pub fn sign(&self) -> f64 {
        match self {
            Helicity::Right => 1.0,
            Helicity::Left => -1.0,
        }
    }

    pub fn flip(&self) -> Helicity {
        match self {
            Helicity::Right => Helicity::Left,
            Helicity::Left => Helicity::Right,
        }
    }
}

/// The four two-particle helicity pairs in basis order (RR, RL, LR, LL).
pub const HELICITY_PAIRS: [(Helicity, Helicity); 4] = [
    (Helicity::Right, Helicity::Right),
    (Helicity::Right, Helicity::Left),
    (Helicity::Left, Helicity::Right),
    (Helicity::Left, Helicity::Left),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    Particle,
    Antiparticle,
}

/// A four-component Dirac spinor attached to an on-shell momentum.
#[derive(Debug, Clone)]
pub struct DiracSpinor {
    pub components: CVec4,
    pub momentum: FourVector,
    pub mass: f64,
    pub helicity: Helicity,
    pub species: Species,
}

/// A photon polarization four-vector attached to a lightlike momentum.
#[derive(Debug, Clone)]
pub struct PhotonPolarization {
    pub components: CVec4,
    pub momentum: FourVector,
    pub helicity: Helicity,
}

/// One tree diagram's contribution to an amplitude, tagged by its
/// Mandelstam channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Channel {
    S,
    T,
    U,
}

/// A helicity amplitude together with its per-diagram decomposition.
/// The value is the signed sum of the contributions.
#[derive(Debug, Clone)]
pub struct ComplexAmplitude {
    pub value: C64,
    pub contributions: Vec<(Channel, C64)>,
}

const I: C64 = Complex64::new(0.0, 1.0);
const ZERO: C64 = Complex64::new(0.0, 0.0);

fn c(re: f64) -> C64 {
    Complex64::new(re, 0.0)
}

/// Gamma matrices in the Dirac representation, index order (g0, g1, g2, g3).
pub fn gamma_matrices() -> [CMat4; 4] {
    let o = ZERO;
    let one = c(1.0);
    let g0 = CMat4::from_row_slice(&[
        one, o, o, o, //
        o, one, o, o, //
        o, o, -one, o, //
        o, o, o, -one,
    ]);
    let g1 = CMat4::from_row_slice(&[
        o, o, o, one, //
        o, o, one, o, //
        o, -one, o, o, //
        -one, o, o, o,
    ]);
    let g2 = CMat4::from_row_slice(&[
        o, o, o, -I, //
        o, o, I, o, //
        o, I, o, o, //
        -I, o, o, o,
    ]);
    let g3 = CMat4::from_row_slice(&[
        o, o, one, o, //
        o, o, o, -one, //
        -one, o, o, o, //
        o, one, o, o,
    ]);
    [g0, g1, g2, g3]
}

/// gamma^5 = i g0 g1 g2 g3 (off-diagonal identity blocks in this representation).
pub fn gamma5() -> CMat4 {
    let o = ZERO;
    let one = c(1.0);
    CMat4::from_row_slice(&[
        o, o, one, o, //
        o, o, o, one, //
        one, o, o, o, //
        o, one, o, o,
    ])
}

/// Feynman slash of a real four-vector: `p_mu gamma^mu`.
pub fn slash(p: &FourVector) -> CMat4 {
    let [g0, g1, g2, g3] = gamma_matrices();
    g0 * c(p.e) - g1 * c(p.x) - g2 * c(p.y) - g3 * c(p.z)
}

/// Feynman slash of a complex four-vector (polarization vectors).
pub fn slash_complex(v: &CVec4) -> CMat4 {
    let [g0, g1, g2, g3] = gamma_matrices();
    g0 * v[0] - g1 * v[1] - g2 * v[2] - g3 * v[3]
}

/// Polar and azimuthal angles of the spatial part of `p`.
fn direction_angles(p: &FourVector) -> (f64, f64) {
    let rho = (p.x * p.x + p.y * p.y).sqrt();
    let theta = rho.atan2(p.z);
    let phi = if rho == 0.0 { 0.0 } else { p.y.atan2(p.x) };
    (theta, phi)
}

/// Two-component helicity eigenspinor for the direction (theta, phi).
fn pauli_spinor(theta: f64, phi: f64, helicity: Helicity) -> [C64; 2] {
    let half = theta / 2.0;
    let phase = Complex64::from_polar(1.0, phi);
    match helicity {
        Helicity::Right => [c(half.cos()), phase * half.sin()],
        Helicity::Left => [-phase.conj() * half.sin(), c(half.cos())],
    }
}

/// Helicity spinor u (particle) or v (antiparticle) for an on-shell
/// momentum, normalized to `u^dag u = 2E`.
pub fn helicity_spinor(
    momentum: FourVector,
    mass: f64,
    helicity: Helicity,
    species: Species,
) -> Result<DiracSpinor> {
    let p2 = momentum.spatial_norm().powi(2);
    let residual = (momentum.e * momentum.e - p2 - mass * mass).abs();
    if momentum.e <= 0.0 || residual > 1e-10 * momentum.e * momentum.e {
        return Err(Error::OffShell { residual });
    }
    let (theta, phi) = direction_angles(&momentum);
    let wp = (momentum.e + mass).max(0.0).sqrt();
    let wm = (momentum.e - mass).max(0.0).sqrt();
    let components = match species {
        Species::Particle => {
            let chi = pauli_spinor(theta, phi, helicity);
            let h = c(helicity.sign());
            CVec4::new(chi[0] * wp, chi[1] * wp, chi[0] * wm * h, chi[1] * wm * h)
        }
        Species::Antiparticle => {
            // Antiparticle of physical helicity h is built on chi_{-h}.
            let chi = pauli_spinor(theta, phi, helicity.flip());
            let h = c(helicity.sign());
            CVec4::new(
                -chi[0] * wm * h,
                -chi[1] * wm * h,
                chi[0] * wp,
                chi[1] * wp,
            )
        }
    };
    Ok(DiracSpinor {
        components,
        momentum,
        mass,
        helicity,
        species,
    })
}

/// Circular polarization vector for a lightlike momentum,
/// `eps_R = (e_theta + i e_phi)/sqrt(2)` and `eps_L = conj(eps_R)`.
pub fn photon_polarization(momentum: FourVector, helicity: Helicity) -> Result<PhotonPolarization> {
    let k2 = momentum.mass_squared();
    if momentum.e <= 0.0 || k2.abs() > 1e-10 * momentum.e * momentum.e {
        return Err(Error::NotLightlike { k_squared: k2 });
    }
    let (theta, phi) = direction_angles(&momentum);
    let (st, ct) = (theta.sin(), theta.cos());
    let (sp, cp) = (phi.sin(), phi.cos());
    let e_theta = [ct * cp, ct * sp, -st];
    let e_phi = [-sp, cp, 0.0];
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let sign = helicity.sign();
    let components = CVec4::new(
        ZERO,
        c(e_theta[0] * r) + I * c(sign * e_phi[0] * r),
        c(e_theta[1] * r) + I * c(sign * e_phi[1] * r),
        c(e_theta[2] * r) + I * c(sign * e_phi[2] * r),
    );
    Ok(PhotonPolarization {
        components,
        momentum,
        helicity,
    })
}

impl DiracSpinor {
    /// Dirac adjoint `u^dag gamma^0` as a row vector.
    pub fn bar(&self) -> nalgebra::RowVector4<C64> {
        let [g0, ..] = gamma_matrices();
        (self.components.adjoint() * g0).into()
    }

    /// Residual of the momentum-space Dirac equation, relative to `2E`.
    pub fn dirac_residual(&self) -> f64 {
        let m = c(self.mass);
        let op = match self.species {
            Species::Particle => slash(&self.momentum) - CMat4::identity() * m,
            Species::Antiparticle => slash(&self.momentum) + CMat4::identity() * m,
        };
        (op * self.components).norm() / (2.0 * self.momentum.e)
    }

    /// Residual of the helicity eigenvalue equation `(Sigma . phat) psi = lambda psi`,
    /// where lambda is +/-h for particles and antiparticles respectively.
    pub fn helicity_residual(&self) -> f64 {
        let n = self.momentum.spatial_norm();
        let (nx, ny, nz) = (self.momentum.x / n, self.momentum.y / n, self.momentum.z / n);
        // Sigma . nhat = diag(sigma . nhat, sigma . nhat)
        let sx = [c(nz), c(nx) - I * c(ny), c(nx) + I * c(ny), -c(nz)];
        let mut out = CVec4::zeros();
        out[0] = sx[0] * self.components[0] + sx[1] * self.components[1];
        out[1] = sx[2] * self.components[0] + sx[3] * self.components[1];
        out[2] = sx[0] * self.components[2] + sx[1] * self.components[3];
        out[3] = sx[2] * self.components[2] + sx[3] * self.components[3];
        let lambda = match self.species {
            Species::Particle => self.helicity.sign(),
            Species::Antiparticle => -self.helicity.sign(),
        };
        (out - self.components * c(lambda)).norm() / self.components.norm()
    }
}

/// Vector current `ubar gamma^mu psi` for the four values of mu.
fn current(bar: &nalgebra::RowVector4<C64>, psi: &CVec4) -> [C64; 4] {
    let gammas = gamma_matrices();
    let mut j = [ZERO; 4];
    for (mu, g) in gammas.iter().enumerate() {
        j[mu] = (bar * g * psi)[(0, 0)];
    }
    j
}

/// Minkowski contraction of two currents through the photon propagator
/// numerator `-g_{mu nu}` (without the 1/q^2).
fn contract(a: &[C64; 4], b: &[C64; 4]) -> C64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

struct FermionLegs {
    in1: DiracSpinor,
    in2: DiracSpinor,
    out1: DiracSpinor,
    out2: DiracSpinor,
}

fn fermion_legs(
    config: &ComConfiguration,
    species: [Species; 4],
    h: [Helicity; 4],
) -> Result<FermionLegs> {
    Ok(FermionLegs {
        in1: helicity_spinor(config.incoming[0], config.incoming_masses[0], h[0], species[0])?,
        in2: helicity_spinor(config.incoming[1], config.incoming_masses[1], h[1], species[1])?,
        out1: helicity_spinor(config.outgoing[0], config.outgoing_masses[0], h[2], species[2])?,
        out2: helicity_spinor(config.outgoing[1], config.outgoing_masses[1], h[3], species[3])?,
    })
}

/// Tree-level helicity amplitude for `process` at `point`, with the
/// electromagnetic coupling set to 1 and the overall `i (2 pi)^4 delta^4`
/// factor stripped.
///
/// `incoming` and `outgoing` are the helicity pairs (particle 1, particle 2)
/// in the leg order documented on [`ComConfiguration`].
pub fn amplitude(
    process: ProcessKind,
    point: KinematicPoint,
    outgoing: (Helicity, Helicity),
    incoming: (Helicity, Helicity),
) -> Result<ComplexAmplitude> {
    let config = build_configuration(process, point)?;
    amplitude_in_config(&config, outgoing, incoming)
}

/// Same as [`amplitude`], reusing an already-built configuration.
pub fn amplitude_in_config(
    config: &ComConfiguration,
    outgoing: (Helicity, Helicity),
    incoming: (Helicity, Helicity),
) -> Result<ComplexAmplitude> {
    let h = [incoming.0, incoming.1, outgoing.0, outgoing.1];
    match config.process {
        ProcessKind::Bhabha => bhabha(config, h),
        ProcessKind::Moller => moller(config, h),
        ProcessKind::ElectronMuon => electron_muon(config, h),
        ProcessKind::MuonPairProduction => muon_pair(config, h),
        ProcessKind::Compton => compton(config, h, None, None),
        ProcessKind::PairAnnihilation => pair_annihilation(config, h, None, None),
    }
}

fn bhabha(config: &ComConfiguration, h: [Helicity; 4]) -> Result<ComplexAmplitude> {
    use Species::{Antiparticle, Particle};
    let legs = fermion_legs(config, [Particle, Antiparticle, Particle, Antiparticle], h)?;
    // t-channel: photon exchange between the electron and positron lines.
    let jt_e = current(&legs.out1.bar(), &legs.in1.components);
    let jt_p = current(&legs.in2.bar(), &legs.out2.components);
    let m_t = contract(&jt_e, &jt_p) / c(config.t);
    // s-channel: annihilation into a timelike photon.
    let js_in = current(&legs.in2.bar(), &legs.in1.components);
    let js_out = current(&legs.out1.bar(), &legs.out2.components);
    let m_s = contract(&js_out, &js_in) / c(config.s);
    // Fermi statistics: relative minus sign between the two diagrams.
    Ok(ComplexAmplitude {
        value: m_t - m_s,
        contributions: vec![(Channel::T, m_t), (Channel::S, -m_s)],
    })
}

fn moller(config: &ComConfiguration, h: [Helicity; 4]) -> Result<ComplexAmplitude> {
    use Species::Particle;
    let legs = fermion_legs(config, [Particle; 4], h)?;
    let jt_1 = current(&legs.out1.bar(), &legs.in1.components);
    let jt_2 = current(&legs.out2.bar(), &legs.in2.components);
    let m_t = contract(&jt_1, &jt_2) / c(config.t);
    // u-channel: exchanged outgoing legs.
    let ju_1 = current(&legs.out2.bar(), &legs.in1.components);
    let ju_2 = current(&legs.out1.bar(), &legs.in2.components);
    let m_u = contract(&ju_1, &ju_2) / c(config.u);
    Ok(ComplexAmplitude {
        value: m_t - m_u,
        contributions: vec![(Channel::T, m_t), (Channel::U, -m_u)],
    })
}

fn electron_muon(config: &ComConfiguration, h: [Helicity; 4]) -> Result<ComplexAmplitude> {
    use Species::Particle;
    let legs = fermion_legs(config, [Particle; 4], h)?;
    let j_e = current(&legs.out1.bar(), &legs.in1.components);
    let j_mu = current(&legs.out2.bar(), &legs.in2.components);
    let m_t = contract(&j_e, &j_mu) / c(config.t);
    Ok(ComplexAmplitude {
        value: m_t,
        contributions: vec![(Channel::T, m_t)],
    })
}

fn muon_pair(config: &ComConfiguration, h: [Helicity; 4]) -> Result<ComplexAmplitude> {
    use Species::{Antiparticle, Particle};
    let legs = fermion_legs(config, [Particle, Antiparticle, Particle, Antiparticle], h)?;
    let j_in = current(&legs.in2.bar(), &legs.in1.components);
    let j_out = current(&legs.out1.bar(), &legs.out2.components);
    let m_s = contract(&j_out, &j_in) / c(config.s);
    Ok(ComplexAmplitude {
        value: m_s,
        contributions: vec![(Channel::S, m_s)],
    })
}

fn compton(
    config: &ComConfiguration,
    h: [Helicity; 4],
    eps_in_override: Option<CVec4>,
    eps_out_override: Option<CVec4>,
) -> Result<ComplexAmplitude> {
    let e_in = helicity_spinor(config.incoming[0], config.incoming_masses[0], h[0], Species::Particle)?;
    let e_out = helicity_spinor(config.outgoing[0], config.outgoing_masses[0], h[2], Species::Particle)?;
    let k_in = config.incoming[1];
    let k_out = config.outgoing[1];
    let eps_in = match eps_in_override {
        Some(v) => v,
        None => photon_polarization(k_in, h[1])?.components,
    };
    // Outgoing photon polarization enters conjugated.
    let eps_out = match eps_out_override {
        Some(v) => v,
        None => photon_polarization(k_out, h[3])?.components.conjugate(),
    };
    let m = config.incoming_masses[0];
    let bar = e_out.bar();
    let se_in = slash_complex(&eps_in);
    let se_out = slash_complex(&eps_out);

    // s-channel: absorb then emit.
    let qs = config.incoming[0] + k_in;
    let num_s = slash(&qs) + CMat4::identity() * c(m);
    let m_s = (bar * se_out * num_s * se_in * e_in.components)[(0, 0)] / c(config.s - m * m);

    // u-channel: emit then absorb.
    let qu = config.incoming[0] - k_out;
    let num_u = slash(&qu) + CMat4::identity() * c(m);
    let m_u = (bar * se_in * num_u * se_out * e_in.components)[(0, 0)] / c(config.u - m * m);

    // Same fermion line in both diagrams: relative plus sign.
    Ok(ComplexAmplitude {
        value: m_s + m_u,
        contributions: vec![(Channel::S, m_s), (Channel::U, m_u)],
    })
}

fn pair_annihilation(
    config: &ComConfiguration,
    h: [Helicity; 4],
    eps1_override: Option<CVec4>,
    eps2_override: Option<CVec4>,
) -> Result<ComplexAmplitude> {
    let e_in = helicity_spinor(config.incoming[0], config.incoming_masses[0], h[0], Species::Particle)?;
    let p_in = helicity_spinor(config.incoming[1], config.incoming_masses[1], h[1], Species::Antiparticle)?;
    let k1 = config.outgoing[0];
    let k2 = config.outgoing[1];
    let eps1 = match eps1_override {
        Some(v) => v,
        None => photon_polarization(k1, h[2])?.components.conjugate(),
    };
    let eps2 = match eps2_override {
        Some(v) => v,
        None => photon_polarization(k2, h[3])?.components.conjugate(),
    };
    let m = config.incoming_masses[0];
    let bar = p_in.bar();
    let s1 = slash_complex(&eps1);
    let s2 = slash_complex(&eps2);

    // t-channel: electron emits photon 1 first.
    let qt = config.incoming[0] - k1;
    let num_t = slash(&qt) + CMat4::identity() * c(m);
    let m_t = (bar * s2 * num_t * s1 * e_in.components)[(0, 0)] / c(config.t - m * m);

    // u-channel: electron emits photon 2 first.
    let qu = config.incoming[0] - k2;
    let num_u = slash(&qu) + CMat4::identity() * c(m);
    let m_u = (bar * s1 * num_u * s2 * e_in.components)[(0, 0)] / c(config.u - m * m);

    Ok(ComplexAmplitude {
        value: m_t + m_u,
        contributions: vec![(Channel::T, m_t), (Channel::U, m_u)],
    })
}

/// Worst-case Ward-identity residual for the photon legs of `process`
/// (Compton or pair annihilation): each photon polarization is replaced in
/// turn by its own momentum, and the largest resulting |amplitude| is
/// returned, normalized by the largest physical helicity amplitude.
pub fn ward_residual(process: ProcessKind, point: KinematicPoint) -> Result<f64> {
    let config = build_configuration(process, point)?;
    let as_cvec = |p: &FourVector| CVec4::new(c(p.e), c(p.x), c(p.y), c(p.z));

    let mut max_physical: f64 = 0.0;
    let mut max_violation: f64 = 0.0;
    for (h1, h2) in HELICITY_PAIRS {
        for (h3, h4) in HELICITY_PAIRS {
            let h = [h1, h2, h3, h4];
            match process {
                ProcessKind::Compton => {
                    let phys = compton(&config, h, None, None)?;
                    max_physical = max_physical.max(phys.value.norm());
                    let in_rep = compton(&config, h, Some(as_cvec(&config.incoming[1])), None)?;
                    let out_rep = compton(&config, h, None, Some(as_cvec(&config.outgoing[1])))?;
                    max_violation = max_violation.max(in_rep.value.norm()).max(out_rep.value.norm());
                }
                ProcessKind::PairAnnihilation => {
                    let phys = pair_annihilation(&config, h, None, None)?;
                    max_physical = max_physical.max(phys.value.norm());
                    let rep1 = pair_annihilation(&config, h, Some(as_cvec(&config.outgoing[0])), None)?;
                    let rep2 = pair_annihilation(&config, h, None, Some(as_cvec(&config.outgoing[1])))?;
                    max_violation = max_violation.max(rep1.value.norm()).max(rep2.value.norm());
                }
                _ => {
                    return Err(Error::NumericalFailure(format!(
                        "ward_residual is defined for photon processes, not {process}"
                    )))
                }
            }
        }
    }
    Ok(max_violation / max_physical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

    fn check_spinor_invariants(s: &DiracSpinor) {
        assert!(s.dirac_residual() < 1e-10, "dirac residual {}", s.dirac_residual());
        assert!(s.helicity_residual() < 1e-10, "helicity residual {}", s.helicity_residual());
        let bar = s.bar();
        let ubaru = (bar * s.components)[(0, 0)];
        let expected = match s.species {
            Species::Particle => 2.0 * s.mass,
            Species::Antiparticle => -2.0 * s.mass,
        };
        assert_relative_eq!(ubaru.re, expected, epsilon = 1e-10 * s.momentum.e);
        assert!(ubaru.im.abs() < 1e-12 * s.momentum.e);
        let udagu = s.components.norm_squared();
        assert_relative_eq!(udagu, 2.0 * s.momentum.e, max_relative = 1e-12);
    }

    #[test]
    fn axis_aligned_spinor_closed_form() {
        let e = 2f64.sqrt();
        let p = FourVector::new(e, 0.0, 0.0, 1.0);
        let u = helicity_spinor(p, 1.0, Helicity::Right, Species::Particle).unwrap();
        // chi_+ = (1, 0): upper components (sqrt(E+m), 0), lower (sqrt(E-m), 0).
        assert_relative_eq!(u.components[0].re, (e + 1.0).sqrt(), max_relative = 1e-14);
        assert_relative_eq!(u.components[2].re, (e - 1.0).sqrt(), max_relative = 1e-14);
        assert_eq!(u.components[1], Complex64::new(0.0, 0.0));
        assert_eq!(u.components[3], Complex64::new(0.0, 0.0));
        check_spinor_invariants(&u);
    }

    #[test]
    fn chirality_helicity_degeneracy_at_high_energy() {
        let mu = 1e6;
        let p = FourVector::new((1.0 + mu * mu).sqrt(), 0.0, 0.0, mu);
        let u = helicity_spinor(p, 1.0, Helicity::Left, Species::Particle).unwrap();
        let p_l = (CMat4::identity() - gamma5()) * c(0.5);
        let projected = p_l * u.components;
        let deficit = (projected - u.components).norm() / u.components.norm();
        assert!(deficit < 2.0 / mu, "chirality projection deficit {deficit}");
    }

    #[test]
    fn generic_antiparticle_spinor_golden() {
        // Momentum at theta = pi/3 in the x-z plane, mu = 2.
        let (st, ct) = (FRAC_PI_3.sin(), FRAC_PI_3.cos());
        let p = FourVector::new(5f64.sqrt(), 2.0 * st, 0.0, 2.0 * ct);
        let v = helicity_spinor(p, 1.0, Helicity::Right, Species::Antiparticle).unwrap();
        check_spinor_invariants(&v);
        // Frozen from this implementation after the invariant suite passed.
        let golden = [
            (0.555893709462144, 0.0),
            (-0.962837406359260, 0.0),
            (-0.899453719973933, 0.0),
            (1.557858936758125, 0.0),
        ];
        for (i, (re, im)) in golden.iter().enumerate() {
            assert_relative_eq!(v.components[i].re, *re, epsilon = 1e-12);
            assert_relative_eq!(v.components[i].im, *im, epsilon = 1e-12);
        }
    }

    #[test]
    fn all_species_helicity_combinations_pass_invariants() {
        for mu in [0.05, 1.0, 40.0] {
            for theta in [0.2, FRAC_PI_3, 2.9] {
                let e = (1.0 + mu * mu).sqrt();
                let p = FourVector::new(e, mu * theta.sin(), 0.0, mu * theta.cos());
                for h in Helicity::BOTH {
                    for sp in [Species::Particle, Species::Antiparticle] {
                        let s = helicity_spinor(p, 1.0, h, sp).unwrap();
                        check_spinor_invariants(&s);
                    }
                }
            }
        }
    }

    #[test]
    fn off_shell_momentum_rejected() {
        let p = FourVector::new(1.0, 0.0, 0.0, 1.0); // massless but m = 1 requested
        assert!(matches!(
            helicity_spinor(p, 1.0, Helicity::Right, Species::Particle),
            Err(Error::OffShell { .. })
        ));
    }

    #[test]
    fn photon_polarization_axis_aligned() {
        let k = FourVector::new(3.0, 0.0, 0.0, 3.0);
        let eps = photon_polarization(k, Helicity::Right).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(eps.components[1].re, r, max_relative = 1e-14);
        assert_relative_eq!(eps.components[2].im, r, max_relative = 1e-14);
        assert_eq!(eps.components[0], ZERO);
        assert_relative_eq!(eps.components[3].norm(), 0.0, epsilon = 1e-15);

        let eps_l = photon_polarization(k, Helicity::Left).unwrap();
        // Helicity flip is exactly complex conjugation in this convention.
        assert_relative_eq!((eps_l.components - eps.components.conjugate()).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn photon_polarization_invariants_rotated() {
        for theta in [0.4, FRAC_PI_4, 2.2] {
            let k = FourVector::new(2.0, 2.0 * theta.sin(), 0.0, 2.0 * theta.cos());
            for h in Helicity::BOTH {
                let eps = photon_polarization(k, h).unwrap();
                let kdot = eps.components[0] * c(k.e)
                    - eps.components[1] * c(k.x)
                    - eps.components[2] * c(k.y)
                    - eps.components[3] * c(k.z);
                assert!(kdot.norm() < 1e-12, "transversality violated: {kdot}");
                let norm: C64 = eps.components[0].conj() * eps.components[0]
                    - eps.components[1].conj() * eps.components[1]
                    - eps.components[2].conj() * eps.components[2]
                    - eps.components[3].conj() * eps.components[3];
                assert_relative_eq!(norm.re, -1.0, max_relative = 1e-12);
                assert!(norm.im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn not_lightlike_rejected() {
        let k = FourVector::new(2.0, 0.0, 0.0, 1.0);
        assert!(matches!(
            photon_polarization(k, Helicity::Right),
            Err(Error::NotLightlike { .. })
        ));
    }

    #[test]
    fn channel_decomposition_sums_to_total() {
        let point = KinematicPoint { mu: 1.3, theta: 1.1 };
        for process in [
            ProcessKind::Bhabha,
            ProcessKind::Moller,
            ProcessKind::Compton,
            ProcessKind::PairAnnihilation,
        ] {
            for (out, inc) in [
                ((Helicity::Right, Helicity::Right), (Helicity::Right, Helicity::Left)),
                ((Helicity::Left, Helicity::Right), (Helicity::Left, Helicity::Left)),
            ] {
                let amp = amplitude(process, point, out, inc).unwrap();
                let sum: C64 = amp.contributions.iter().map(|(_, v)| v).sum();
                assert!((amp.value - sum).norm() <= 1e-14 * amp.value.norm().max(1.0));
            }
        }
    }

    #[test]
    fn bhabha_helicity_suppression_ultrarelativistic() {
        let point = KinematicPoint { mu: 1e3, theta: FRAC_PI_3 };
        // Chirality-violating configuration RL -> RR.
        let suppressed = amplitude(
            point_process(),
            point,
            (Helicity::Right, Helicity::Right),
            (Helicity::Right, Helicity::Left),
        )
        .unwrap();
        let mut max_abs: f64 = 0.0;
        for (o, i) in all_configs() {
            let a = amplitude(point_process(), point, o, i).unwrap();
            max_abs = max_abs.max(a.value.norm());
        }
        assert!(suppressed.value.norm() < 1e-2 * max_abs);
    }

    fn point_process() -> ProcessKind {
        ProcessKind::Bhabha
    }

    fn all_configs() -> Vec<((Helicity, Helicity), (Helicity, Helicity))> {
        let mut v = Vec::new();
        for o in HELICITY_PAIRS {
            for i in HELICITY_PAIRS {
                v.push((o, i));
            }
        }
        v
    }

    #[test]
    fn electron_muon_matrix_is_symmetric() {
        // Single t-channel diagram: the 4x4 helicity array is symmetric
        // under exchanging the incoming and outgoing pairs.
        for i in 0..10 {
            let mu = 10f64.powf(-1.0 + 2.0 * i as f64 / 9.0);
            for j in 0..10 {
                let theta = 0.2 + (PI - 0.4) * j as f64 / 9.0;
                let point = KinematicPoint { mu, theta };
                for o in HELICITY_PAIRS {
                    for inc in HELICITY_PAIRS {
                        let a = amplitude(ProcessKind::ElectronMuon, point, o, inc).unwrap();
                        let b = amplitude(ProcessKind::ElectronMuon, point, inc, o).unwrap();
                        let scale = a.value.norm().max(b.value.norm()).max(1e-300);
                        assert!(
                            (a.value - b.value).norm() / scale < 1e-9,
                            "asymmetry at mu={mu} theta={theta} {o:?} {inc:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gauge_invariance_photon_processes() {
        for process in [ProcessKind::Compton, ProcessKind::PairAnnihilation] {
            for (mu, theta) in [(0.1, FRAC_PI_4), (1.0, 1.9), (100.0, 0.7)] {
                let res = ward_residual(process, KinematicPoint { mu, theta }).unwrap();
                assert!(res < 1e-10, "{process} mu={mu} theta={theta}: ward residual {res}");
            }
        }
    }

    #[test]
    fn bhabha_golden_amplitude() {
        // Frozen cross-check value for mu = 1, theta = pi/4, all helicities
        // right-handed. Verified against an exact-arithmetic evaluation of
        // the two tree diagrams with the same spinor conventions (sympy,
        // exact radicals), which gives
        //   M = -(3 + 12 sqrt(2) + 2 sqrt(2 (2 + sqrt(2)))) / 7
        // for the t-channel minus s-channel combination at e = 1.
        let amp = amplitude(
            ProcessKind::Bhabha,
            KinematicPoint { mu: 1.0, theta: FRAC_PI_4 },
            (Helicity::Right, Helicity::Right),
            (Helicity::Right, Helicity::Right),
        )
        .unwrap();
        let exact = -(3.0 + 12.0 * 2f64.sqrt() + 2.0 * (2.0 * (2.0 + 2f64.sqrt())).sqrt()) / 7.0;
        assert_relative_eq!(amp.value.re, exact, max_relative = 1e-12);
        assert!(amp.value.im.abs() < 1e-12 * amp.value.norm());
    }
}
