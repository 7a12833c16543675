//! Spin Hamiltonians and logical bases for the four mixed architectures.
//!
//! Two qubit pairings are modeled, each in two geometric configurations:
//!
//! * single-spin qubit (L) + three-electron hybrid qubit (R), 4 spins total,
//!   tensor slot order `(1_L, 1_R, 3_R, 2_R)`;
//! * singlet-triplet qubit (L) + hybrid qubit (R), 5 spins total, slot order
//!   `(1_L, 2_L, 1_R, 3_R, 2_R)`.
//!
//! Spin `1_R` and `3_R` share a quantum dot (the doubly occupied dot of the
//! hybrid qubit), which is why their exchange coupling `J_1R3R` is fixed and
//! never pulsed. Configuration A couples qubit L to that dot; configuration B
//! couples it to the singly occupied dot holding `2_R`.
//!
//! Computational-basis indexing: spin-up is bit 0, spin-down is bit 1, and
//! slot 0 is the most significant bit, so `|↑↑…↑⟩` is index 0.

use crate::algebra::{kron, ComplexMatrix, C64};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpinModelError {
    #[error("spin index {index} out of range for {count} spins")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("Heisenberg coupling requires two distinct spins (got {0})")]
    EqualIndices(usize),
    #[error("invalid control for {arch}: {reason}")]
    InvalidControl { arch: Architecture, reason: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// The four simulated layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Architecture {
    SingleHybridA,
    SingleHybridB,
    SingletTripletHybridA,
    SingletTripletHybridB,
}

pub const ALL_ARCHITECTURES: [Architecture; 4] = [
    Architecture::SingleHybridA,
    Architecture::SingleHybridB,
    Architecture::SingletTripletHybridA,
    Architecture::SingletTripletHybridB,
];

impl std::fmt::Display for Architecture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Architecture::SingleHybridA => "single_hybrid_a",
            Architecture::SingleHybridB => "single_hybrid_b",
            Architecture::SingletTripletHybridA => "singlet_triplet_hybrid_a",
            Architecture::SingletTripletHybridB => "singlet_triplet_hybrid_b",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Architecture {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single_hybrid_a" => Ok(Architecture::SingleHybridA),
            "single_hybrid_b" => Ok(Architecture::SingleHybridB),
            "singlet_triplet_hybrid_a" => Ok(Architecture::SingletTripletHybridA),
            "singlet_triplet_hybrid_b" => Ok(Architecture::SingletTripletHybridB),
            other => Err(format!(
                "unknown architecture '{other}' (expected single_hybrid_a, single_hybrid_b, \
                 singlet_triplet_hybrid_a or singlet_triplet_hybrid_b)"
            )),
        }
    }
}

impl Architecture {
    pub fn is_single_spin_l(self) -> bool {
        matches!(
            self,
            Architecture::SingleHybridA | Architecture::SingleHybridB
        )
    }

    pub fn is_singlet_triplet_l(self) -> bool {
        !self.is_single_spin_l()
    }

    pub fn is_configuration_a(self) -> bool {
        matches!(
            self,
            Architecture::SingleHybridA | Architecture::SingletTripletHybridA
        )
    }

    pub fn spin_count(self) -> usize {
        if self.is_single_spin_l() {
            4
        } else {
            5
        }
    }

    pub fn dim(self) -> usize {
        1 << self.spin_count()
    }

    /// Tensor-slot names, in slot order.
    pub fn spin_names(self) -> &'static [&'static str] {
        if self.is_single_spin_l() {
            &["1_L", "1_R", "3_R", "2_R"]
        } else {
            &["1_L", "2_L", "1_R", "3_R", "2_R"]
        }
    }

    /// Spin slots grouped by quantum dot. `1_R` and `3_R` always share a dot.
    pub fn dots(self) -> &'static [&'static [usize]] {
        if self.is_single_spin_l() {
            &[&[0], &[1, 2], &[3]]
        } else {
            &[&[0], &[1], &[2, 3], &[4]]
        }
    }

    pub fn dot_count(self) -> usize {
        self.dots().len()
    }

    /// Spin-slot pair addressed by an exchange label, if the label exists in
    /// this layout.
    pub fn exchange_pair(self, interaction: Interaction) -> Option<(usize, usize)> {
        use Architecture::*;
        use Interaction::*;
        let single = self.is_single_spin_l();
        match interaction {
            J1r2r => Some(if single { (1, 3) } else { (2, 4) }),
            J2r3r => Some(if single { (3, 2) } else { (4, 3) }),
            J1r3r => Some(if single { (1, 2) } else { (2, 3) }),
            J1l1r if self == SingleHybridA => Some((0, 1)),
            J1l3r if self == SingleHybridA => Some((0, 2)),
            J1l2r if self == SingleHybridB => Some((0, 3)),
            J1l2l if !single => Some((0, 1)),
            J2l1r if self == SingletTripletHybridA => Some((1, 2)),
            J2l3r if self == SingletTripletHybridA => Some((1, 3)),
            J2l2r if self == SingletTripletHybridB => Some((1, 4)),
            _ => None,
        }
    }

    /// Every exchange label present in this layout's Hamiltonian, fixed
    /// `J_1R3R` included.
    pub fn exchange_labels(self) -> Vec<Interaction> {
        use Interaction::*;
        let mut labels = vec![J1r2r, J2r3r, J1r3r];
        match self {
            Architecture::SingleHybridA => labels.extend([J1l1r, J1l3r]),
            Architecture::SingleHybridB => labels.push(J1l2r),
            Architecture::SingletTripletHybridA => labels.extend([J1l2l, J2l1r, J2l3r]),
            Architecture::SingletTripletHybridB => labels.extend([J1l2l, J2l2r]),
        }
        labels
    }

    /// Interactions a gate sequence may pulse: every tunable exchange plus
    /// `Ez*` (single-spin layouts only) plus `wait`. The fixed `J_1R3R` is
    /// excluded.
    pub fn controllable_interactions(self) -> Vec<Interaction> {
        let mut set: Vec<Interaction> = self
            .exchange_labels()
            .into_iter()
            .filter(|&j| j != Interaction::J1r3r)
            .collect();
        if self.is_single_spin_l() {
            set.push(Interaction::EzStar);
        }
        set.push(Interaction::Wait);
        set
    }

    pub fn is_valid_step_interaction(self, interaction: Interaction) -> bool {
        self.controllable_interactions().contains(&interaction)
    }

    /// "single" or "singlet_triplet".
    pub fn qubit_l_name(self) -> &'static str {
        if self.is_single_spin_l() {
            "single"
        } else {
            "singlet_triplet"
        }
    }

    /// "hybrid_a" or "hybrid_b".
    pub fn qubit_r_name(self) -> &'static str {
        if self.is_configuration_a() {
            "hybrid_a"
        } else {
            "hybrid_b"
        }
    }
}

/// Pulse and coupling labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Interaction {
    #[serde(rename = "J_1R2R")]
    J1r2r,
    #[serde(rename = "J_2R3R")]
    J2r3r,
    #[serde(rename = "J_1R3R")]
    J1r3r,
    #[serde(rename = "J_1L1R")]
    J1l1r,
    #[serde(rename = "J_1L3R")]
    J1l3r,
    #[serde(rename = "J_1L2R")]
    J1l2r,
    #[serde(rename = "J_1L2L")]
    J1l2l,
    #[serde(rename = "J_2L1R")]
    J2l1r,
    #[serde(rename = "J_2L3R")]
    J2l3r,
    #[serde(rename = "J_2L2R")]
    J2l2r,
    #[serde(rename = "Ez_star")]
    EzStar,
    #[serde(rename = "wait")]
    Wait,
}

impl std::fmt::Display for Interaction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Interaction::J1r2r => "J_1R2R",
            Interaction::J2r3r => "J_2R3R",
            Interaction::J1r3r => "J_1R3R",
            Interaction::J1l1r => "J_1L1R",
            Interaction::J1l3r => "J_1L3R",
            Interaction::J1l2r => "J_1L2R",
            Interaction::J1l2l => "J_1L2L",
            Interaction::J2l1r => "J_2L1R",
            Interaction::J2l3r => "J_2L3R",
            Interaction::J2l2r => "J_2L2R",
            Interaction::EzStar => "Ez_star",
            Interaction::Wait => "wait",
        };
        f.write_str(s)
    }
}

impl Interaction {
    pub fn is_exchange(self) -> bool {
        !matches!(self, Interaction::EzStar | Interaction::Wait)
    }
}

fn pauli(axis: char) -> ComplexMatrix {
    let z = C64::ZERO;
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match axis {
        'x' => ComplexMatrix::from_row_major(2, 2, &[z, one, one, z]),
        'y' => ComplexMatrix::from_row_major(2, 2, &[z, -i, i, z]),
        'z' => ComplexMatrix::from_row_major(2, 2, &[one, z, z, -one]),
        _ => panic!("axis must be one of x, y, z"),
    }
}

/// `I ⊗ … ⊗ σ_axis ⊗ … ⊗ I` with the Pauli at tensor slot `site` of `n`.
pub fn pauli_embedded(axis: char, site: usize, n: usize) -> Result<ComplexMatrix, SpinModelError> {
    if site >= n || n > 5 {
        return Err(SpinModelError::IndexOutOfRange {
            index: site,
            count: n,
        });
    }
    let mut m = ComplexMatrix::identity(1);
    for s in 0..n {
        let factor = if s == site {
            pauli(axis)
        } else {
            ComplexMatrix::identity(2)
        };
        m = kron(&m, &factor);
    }
    Ok(m)
}

/// `(1/4)(σᵢ·σⱼ)` embedded in `2^n` dimensions.
pub fn heisenberg_coupling(i: usize, j: usize, n: usize) -> Result<ComplexMatrix, SpinModelError> {
    if i == j {
        return Err(SpinModelError::EqualIndices(i));
    }
    let mut sum = ComplexMatrix::zeros(1 << n, 1 << n);
    for axis in ['x', 'y', 'z'] {
        let a = pauli_embedded(axis, i, n)?;
        let b = pauli_embedded(axis, j, n)?;
        sum = sum.add(&a.matmul(&b));
    }
    Ok(sum.scale_re(0.25))
}

/// Total `S²` and `Sᶻ` in the full `2^n` space (spin-1/2 units, ħ = 1).
pub fn total_spin_ops(n: usize) -> Result<(ComplexMatrix, ComplexMatrix), SpinModelError> {
    let dim = 1 << n;
    let mut s_sq = ComplexMatrix::zeros(dim, dim);
    let mut s_z = ComplexMatrix::zeros(dim, dim);
    for axis in ['x', 'y', 'z'] {
        let mut component = ComplexMatrix::zeros(dim, dim);
        for site in 0..n {
            component = component.add(&pauli_embedded(axis, site, n)?.scale_re(0.5));
        }
        if axis == 'z' {
            s_z = component.clone();
        }
        s_sq = s_sq.add(&component.matmul(&component));
    }
    Ok((s_sq, s_z))
}

/// All tunable and fixed field/exchange amplitudes for one evolution step,
/// in units of `J^max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlSettings {
    /// Global Zeeman splitting on every spin (zero in the rotating frame).
    pub ez: f64,
    /// Static additional field on `1_L`; single-spin layouts only. The pulsed
    /// `Ez*` control goes through `active_interaction` instead.
    pub ez_star: f64,
    /// Field offset on both qubit-L spins; singlet-triplet layouts only.
    pub ez_tilde: f64,
    /// Always-on intra-dot exchange between `1_R` and `3_R`.
    pub j_fixed_1r3r: f64,
    /// The one pulsed interaction, or `None` during a wait.
    pub active_interaction: Option<Interaction>,
    /// Amplitude of the active interaction (nominally 1.0, i.e. `J^max`).
    pub active_amplitude: f64,
    /// Zeeman perturbation per quantum dot (hyperfine noise); empty means
    /// none, otherwise one value per dot with `1_R`/`3_R` sharing theirs.
    pub per_dot_delta_ez: Vec<f64>,
}

impl ControlSettings {
    /// Published working point: `E_z = 10`, `J_1R3R = 0.5`, `Ẽ_z = 1` for the
    /// singlet-triplet layouts, no active pulse.
    pub fn paper_defaults(arch: Architecture) -> Self {
        ControlSettings {
            ez: 10.0,
            ez_star: 0.0,
            ez_tilde: if arch.is_singlet_triplet_l() { 1.0 } else { 0.0 },
            j_fixed_1r3r: 0.5,
            active_interaction: None,
            active_amplitude: 1.0,
            per_dot_delta_ez: Vec::new(),
        }
    }

    pub fn validate(&self, arch: Architecture) -> Result<(), SpinModelError> {
        let invalid = |reason: String| SpinModelError::InvalidControl { arch, reason };
        if self.ez_star != 0.0 && !arch.is_single_spin_l() {
            return Err(invalid("Ez* applies only to single-spin layouts".into()));
        }
        if self.ez_tilde != 0.0 && !arch.is_singlet_triplet_l() {
            return Err(invalid(
                "Ez~ applies only to singlet-triplet layouts".into(),
            ));
        }
        match self.active_interaction {
            None => {}
            Some(Interaction::Wait) => {
                return Err(invalid(
                    "wait is expressed as active_interaction = None".into(),
                ));
            }
            Some(Interaction::EzStar) => {
                if !arch.is_single_spin_l() {
                    return Err(invalid("Ez* pulse under a singlet-triplet layout".into()));
                }
            }
            Some(j) => {
                if arch.exchange_pair(j).is_none() || j == Interaction::J1r3r {
                    return Err(invalid(format!("{j} is not a pulsable label here")));
                }
            }
        }
        if !self.per_dot_delta_ez.is_empty() && self.per_dot_delta_ez.len() != arch.dot_count() {
            return Err(invalid(format!(
                "expected {} per-dot δEz values, got {}",
                arch.dot_count(),
                self.per_dot_delta_ez.len()
            )));
        }
        Ok(())
    }
}

/// Precomputed Hermitian generators for one architecture, so Hamiltonians can
/// be assembled as cheap linear combinations.
#[derive(Clone)]
pub struct HamiltonianTerms {
    pub arch: Architecture,
    /// `(1/2) Σ σᶻ` over all spins (multiplied by `E_z`).
    pub zeeman_uniform: ComplexMatrix,
    /// `(1/2) σᶻ_1L` (single-spin layouts).
    pub zeeman_star: Option<ComplexMatrix>,
    /// `(1/2)(σᶻ_1L + σᶻ_2L)` (singlet-triplet layouts).
    pub zeeman_tilde: Option<ComplexMatrix>,
    /// `(1/4) σᵢ·σⱼ` per exchange label.
    pub heisenberg: BTreeMap<Interaction, ComplexMatrix>,
    /// `(1/2) Σ_{s∈dot} σᶻ_s` per quantum dot (multiplied by each `δE_z`).
    pub dot_zeeman: Vec<ComplexMatrix>,
}

impl HamiltonianTerms {
    pub fn new(arch: Architecture) -> Self {
        let n = arch.spin_count();
        let half_sz = |sites: &[usize]| {
            let dim = 1 << n;
            let mut m = ComplexMatrix::zeros(dim, dim);
            for &s in sites {
                m = m.add(&pauli_embedded('z', s, n).expect("site in range"));
            }
            m.scale_re(0.5)
        };
        let all_sites: Vec<usize> = (0..n).collect();
        let zeeman_uniform = half_sz(&all_sites);
        let (zeeman_star, zeeman_tilde) = if arch.is_single_spin_l() {
            (Some(half_sz(&[0])), None)
        } else {
            (None, Some(half_sz(&[0, 1])))
        };
        let mut heisenberg = BTreeMap::new();
        for label in arch.exchange_labels() {
            let (i, j) = arch.exchange_pair(label).expect("label valid for arch");
            heisenberg.insert(label, heisenberg_coupling(i, j, n).expect("distinct"));
        }
        let dot_zeeman = arch.dots().iter().map(|sites| half_sz(sites)).collect();
        HamiltonianTerms {
            arch,
            zeeman_uniform,
            zeeman_star,
            zeeman_tilde,
            heisenberg,
            dot_zeeman,
        }
    }

    /// Generator multiplied by `active_amplitude` when an interaction pulses.
    pub fn pulse_generator(&self, interaction: Interaction) -> Option<&ComplexMatrix> {
        match interaction {
            Interaction::EzStar => self.zeeman_star.as_ref(),
            Interaction::Wait => None,
            j => self.heisenberg.get(&j),
        }
    }

    pub fn assemble(&self, controls: &ControlSettings) -> Result<ComplexMatrix, SpinModelError> {
        controls.validate(self.arch)?;
        let dim = self.arch.dim();
        let mut h = ComplexMatrix::zeros(dim, dim);
        if controls.ez != 0.0 {
            h = h.add(&self.zeeman_uniform.scale_re(controls.ez));
        }
        if controls.ez_star != 0.0 {
            h = h.add(&self.zeeman_star.as_ref().unwrap().scale_re(controls.ez_star));
        }
        if controls.ez_tilde != 0.0 {
            h = h.add(
                &self
                    .zeeman_tilde
                    .as_ref()
                    .unwrap()
                    .scale_re(controls.ez_tilde),
            );
        }
        if controls.j_fixed_1r3r != 0.0 {
            h = h.add(
                &self.heisenberg[&Interaction::J1r3r].scale_re(controls.j_fixed_1r3r),
            );
        }
        if let Some(active) = controls.active_interaction {
            let generator = self.pulse_generator(active).ok_or_else(|| {
                SpinModelError::InvalidControl {
                    arch: self.arch,
                    reason: format!("{active} has no generator in this layout"),
                }
            })?;
            if controls.active_amplitude != 0.0 {
                h = h.add(&generator.scale_re(controls.active_amplitude));
            }
        }
        for (dot, &delta) in controls.per_dot_delta_ez.iter().enumerate() {
            if delta != 0.0 {
                h = h.add(&self.dot_zeeman[dot].scale_re(delta));
            }
        }
        Ok(h)
    }
}

/// Full-space Hermitian Hamiltonian for one step's control settings.
pub fn build_hamiltonian(
    arch: Architecture,
    controls: &ControlSettings,
) -> Result<ComplexMatrix, SpinModelError> {
    HamiltonianTerms::new(arch).assemble(controls)
}

/// The coupled-angular-momentum basis: four logical states `b1..b4`, two
/// tracked companions `b5, b6`, and the remaining computational-space states
/// (`b7, b8` and, for five spins, `b9`) kept as leakage monitors.
#[derive(Clone)]
pub struct LogicalBasis {
    arch: Architecture,
    vectors: Vec<Vec<C64>>,
}

pub const LOGICAL_COUNT: usize = 4;
pub const TRACKED_COUNT: usize = 6;

/// One term of a state expansion: product-basis pattern and real amplitude.
type Term<'a> = (&'a str, f64);

/// Hybrid-qubit states written over `(1_R, 2_R, 3_R)` in up/down letters.
mod hybrid {
    use super::Term;
    pub const ZERO_R: &[Term] = &[("uud", std::f64::consts::FRAC_1_SQRT_2), ("duu", -std::f64::consts::FRAC_1_SQRT_2)];
    pub const U_MINUS: &[Term] = &[("udd", std::f64::consts::FRAC_1_SQRT_2), ("ddu", -std::f64::consts::FRAC_1_SQRT_2)];
    // 1/sqrt(6) and sqrt(2/3) written out so the expansions stay literal
    pub const ONE_R: &[Term] = &[
        ("uud", 0.408_248_290_463_863_05),
        ("duu", 0.408_248_290_463_863_05),
        ("udu", -0.816_496_580_927_726_1),
    ];
    pub const V_MINUS: &[Term] = &[
        ("udd", 0.408_248_290_463_863_05),
        ("ddu", 0.408_248_290_463_863_05),
        ("dud", -0.816_496_580_927_726_1),
    ];
    pub const Q_3_2: &[Term] = &[("uuu", 1.0)];
    pub const Q_1_2: &[Term] = &[
        ("uud", 0.577_350_269_189_625_8),
        ("udu", 0.577_350_269_189_625_8),
        ("duu", 0.577_350_269_189_625_8),
    ];
    pub const Q_M1_2: &[Term] = &[
        ("ddu", 0.577_350_269_189_625_8),
        ("dud", 0.577_350_269_189_625_8),
        ("udd", 0.577_350_269_189_625_8),
    ];
}

/// Qubit-L states written over `(1_L)` or `(1_L, 2_L)`.
mod qubit_l {
    use super::Term;
    pub const UP: &[Term] = &[("u", 1.0)];
    pub const DOWN: &[Term] = &[("d", 1.0)];
    pub const SINGLET: &[Term] = &[("ud", std::f64::consts::FRAC_1_SQRT_2), ("du", -std::f64::consts::FRAC_1_SQRT_2)];
    pub const TRIPLET_0: &[Term] = &[("ud", std::f64::consts::FRAC_1_SQRT_2), ("du", std::f64::consts::FRAC_1_SQRT_2)];
    pub const TRIPLET_PLUS: &[Term] = &[("uu", 1.0)];
    pub const TRIPLET_MINUS: &[Term] = &[("dd", 1.0)];
}

fn bit(c: u8) -> usize {
    match c {
        b'u' => 0,
        b'd' => 1,
        _ => panic!("pattern letters must be u or d"),
    }
}

/// Full-space index of `|l_pattern⟩ ⊗ |h_pattern⟩` with the hybrid pattern in
/// `(1_R, 2_R, 3_R)` order mapped onto the architecture's slot order.
fn product_index(arch: Architecture, l_pattern: &str, h_pattern: &str) -> usize {
    let l = l_pattern.as_bytes();
    let h = h_pattern.as_bytes();
    let n = arch.spin_count();
    let mut bits = vec![0usize; n];
    if arch.is_single_spin_l() {
        debug_assert_eq!(l.len(), 1);
        bits[0] = bit(l[0]); // 1_L
        bits[1] = bit(h[0]); // 1_R
        bits[2] = bit(h[2]); // 3_R
        bits[3] = bit(h[1]); // 2_R
    } else {
        debug_assert_eq!(l.len(), 2);
        bits[0] = bit(l[0]); // 1_L
        bits[1] = bit(l[1]); // 2_L
        bits[2] = bit(h[0]); // 1_R
        bits[3] = bit(h[2]); // 3_R
        bits[4] = bit(h[1]); // 2_R
    }
    bits.iter().fold(0, |acc, &b| (acc << 1) | b)
}

/// Adds `coeff · |l⟩⊗|h⟩` into a full-space amplitude vector.
fn accumulate_product(
    target: &mut [C64],
    arch: Architecture,
    l_state: &[Term],
    h_state: &[Term],
    coeff: f64,
) {
    for &(lp, lc) in l_state {
        for &(hp, hc) in h_state {
            target[product_index(arch, lp, hp)] += C64::new(coeff * lc * hc, 0.0);
        }
    }
}

impl LogicalBasis {
    pub fn new(arch: Architecture) -> Self {
        use hybrid::*;
        use qubit_l::*;
        let dim = arch.dim();
        let mut vectors: Vec<Vec<C64>> = Vec::new();
        let mut push = |parts: &[(&[Term], &[Term], f64)]| {
            let mut v = vec![C64::ZERO; dim];
            for &(l, h, c) in parts {
                accumulate_product(&mut v, arch, l, h, c);
            }
            vectors.push(v);
        };
        if arch.is_single_spin_l() {
            let s3 = 3f64.sqrt();
            push(&[(UP, ZERO_R, 1.0)]); // b1
            push(&[(UP, ONE_R, 1.0)]); // b2
            push(&[(DOWN, ZERO_R, 1.0)]); // b3
            push(&[(DOWN, ONE_R, 1.0)]); // b4
            push(&[(UP, U_MINUS, 1.0)]); // b5
            push(&[(UP, V_MINUS, 1.0)]); // b6
            // b7 = (|0_L⟩|Q_-1/2⟩ - |1_L⟩|Q_1/2⟩)/√2
            push(&[
                (UP, Q_M1_2, std::f64::consts::FRAC_1_SQRT_2),
                (DOWN, Q_1_2, -std::f64::consts::FRAC_1_SQRT_2),
            ]);
            // b8 = (√3 |1_L⟩|Q_3/2⟩ - |0_L⟩|Q_1/2⟩)/2
            push(&[(DOWN, Q_3_2, s3 / 2.0), (UP, Q_1_2, -0.5)]);
        } else {
            push(&[(SINGLET, ZERO_R, 1.0)]); // b1
            push(&[(SINGLET, ONE_R, 1.0)]); // b2
            push(&[(TRIPLET_0, ZERO_R, 1.0)]); // b3
            push(&[(TRIPLET_0, ONE_R, 1.0)]); // b4
            push(&[(TRIPLET_PLUS, U_MINUS, 1.0)]); // b5
            push(&[(TRIPLET_PLUS, V_MINUS, 1.0)]); // b6
            // b7 = |T-⟩|Q_3/2⟩/√2 - |T0⟩|Q_1/2⟩/√3 + |T+⟩|Q_-1/2⟩/√6
            push(&[
                (TRIPLET_MINUS, Q_3_2, 1.0 / 2f64.sqrt()),
                (TRIPLET_0, Q_1_2, -1.0 / 3f64.sqrt()),
                (TRIPLET_PLUS, Q_M1_2, 1.0 / 6f64.sqrt()),
            ]);
            // b8 = √(2/5)|T-⟩|Q_3/2⟩ + |T0⟩|Q_1/2⟩/√15 - √(8/15)|T+⟩|Q_-1/2⟩
            push(&[
                (TRIPLET_MINUS, Q_3_2, (2f64 / 5.0).sqrt()),
                (TRIPLET_0, Q_1_2, 1.0 / 15f64.sqrt()),
                (TRIPLET_PLUS, Q_M1_2, -(8f64 / 15.0).sqrt()),
            ]);
            // b9 = |S⟩|Q_3/2⟩
            push(&[(SINGLET, Q_3_2, 1.0)]);
        }
        LogicalBasis { arch, vectors }
    }

    pub fn arch(&self) -> Architecture {
        self.arch
    }

    /// Number of listed states: 8 for four spins, 9 for five.
    pub fn count(&self) -> usize {
        self.vectors.len()
    }

    /// Amplitudes of `b_{k+1}` in the full product basis.
    pub fn vector(&self, k: usize) -> &[C64] {
        &self.vectors[k]
    }

    /// `2^n × count` matrix whose columns are `b1..b_count`.
    pub fn matrix(&self, count: usize) -> ComplexMatrix {
        assert!(count <= self.count());
        let dim = self.arch.dim();
        ComplexMatrix::from_fn(dim, count, |i, j| self.vectors[j][i])
    }

    pub fn tracked_matrix(&self) -> ComplexMatrix {
        self.matrix(TRACKED_COUNT)
    }

    /// Total-`Sᶻ` eigenvalue of each listed state.
    pub fn sz_values(&self) -> Vec<f64> {
        let n = self.arch.spin_count();
        self.vectors
            .iter()
            .map(|v| {
                // every b is an Sᶻ eigenstate; read the value off the first
                // nonzero amplitude's bit pattern
                let idx = v
                    .iter()
                    .position(|a| a.norm() > 1e-12)
                    .expect("basis vector is nonzero");
                let downs = (idx as u32).count_ones() as f64;
                (n as f64 - downs) * 0.5 - downs * 0.5
            })
            .collect()
    }
}

/// `count × count` matrix of `⟨b_i|M|b_j⟩`.
pub fn project_subspace(
    m: &ComplexMatrix,
    basis: &LogicalBasis,
    count: usize,
) -> Result<ComplexMatrix, SpinModelError> {
    let dim = basis.arch.dim();
    if m.rows() != dim || m.cols() != dim {
        return Err(SpinModelError::DimensionMismatch(format!(
            "expected {dim}x{dim} operator, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if count > basis.count() {
        return Err(SpinModelError::DimensionMismatch(format!(
            "requested {count} basis vectors, only {} available",
            basis.count()
        )));
    }
    let b = basis.matrix(count);
    Ok(b.dagger().matmul(m).matmul(&b))
}
