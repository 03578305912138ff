//! Dense statevector simulation of the gate set used by the copula ansatz.
//!
//! The register convention throughout the crate: qubit 0 is the most
//! significant bit of the basis-state index, and variable registers are
//! laid out contiguously with register 0 in the most significant
//! position. This matches the bitstring codec, where the first variable
//! occupies the leading bits of the concatenated measurement outcome.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on register width; all experiments fit well below 2^24 amplitudes.
pub const MAX_QUBITS: usize = 24;

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    #[error("qubit index {qubit} out of range for {num_qubits}-qubit state")]
    IndexOutOfRange { qubit: usize, num_qubits: usize },
    #[error("two-qubit gate addresses qubit {0} twice")]
    DuplicateQubit(usize),
    #[error("{requested} qubits requested, maximum is {MAX_QUBITS}")]
    TooManyQubits { requested: usize },
}

#[derive(Debug, Error, PartialEq)]
pub enum DistributionError {
    #[error("distribution has no outcomes")]
    Empty,
    #[error("negative probability at outcome {0}")]
    NegativeProbability(usize),
    #[error("probabilities sum to {0}, not 1")]
    NotNormalized(f64),
}

/// One gate of the simulated set. Angles are radians.
///
/// `Rz(theta) = exp(-i theta/2 sigma_z)`, `Rx(theta) = exp(-i theta/2 sigma_x)`,
/// `Rzz(theta) = exp(-i theta sigma_z (x) sigma_z)` (note: no half-angle).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GateOp {
    H { qubit: usize },
    Rx { qubit: usize, angle: f64 },
    Rz { qubit: usize, angle: f64 },
    Rzz { q1: usize, q2: usize, angle: f64 },
    Cnot { control: usize, target: usize },
}

impl GateOp {
    /// The gate undoing this one (rotations negate their angle; H and CNOT
    /// are self-inverse).
    pub fn inverse(&self) -> GateOp {
        match *self {
            GateOp::H { qubit } => GateOp::H { qubit },
            GateOp::Rx { qubit, angle } => GateOp::Rx { qubit, angle: -angle },
            GateOp::Rz { qubit, angle } => GateOp::Rz { qubit, angle: -angle },
            GateOp::Rzz { q1, q2, angle } => GateOp::Rzz { q1, q2, angle: -angle },
            GateOp::Cnot { control, target } => GateOp::Cnot { control, target },
        }
    }
}

/// Complex amplitudes over the 2^n computational basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0> on `num_qubits` qubits.
    pub fn zero_state(num_qubits: usize) -> Result<Self, SimError> {
        if num_qubits > MAX_QUBITS {
            return Err(SimError::TooManyQubits { requested: num_qubits });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Builds a state from raw amplitudes; the length must be a power of two
    /// and the norm must be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self, SimError> {
        let len = amps.len();
        assert!(len.is_power_of_two() && len > 0, "amplitude count must be a power of two");
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(SimError::TooManyQubits { requested: num_qubits });
        }
        let state = StateVector { num_qubits, amps };
        let norm = state.norm_sqr();
        assert!((norm - 1.0).abs() < 1e-10, "state not normalized: |psi|^2 = {norm}");
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.num_qubits, other.num_qubits);
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|`, the overlap ignoring global phase.
    pub fn fidelity(&self, other: &StateVector) -> f64 {
        self.inner(other).norm()
    }

    fn check_qubit(&self, qubit: usize) -> Result<(), SimError> {
        if qubit >= self.num_qubits {
            Err(SimError::IndexOutOfRange { qubit, num_qubits: self.num_qubits })
        } else {
            Ok(())
        }
    }

    /// Bit mask selecting `qubit` inside a basis index (qubit 0 = MSB).
    fn mask(&self, qubit: usize) -> usize {
        1 << (self.num_qubits - 1 - qubit)
    }

    fn apply_single(&mut self, qubit: usize, m: [[Complex64; 2]; 2]) {
        let mask = self.mask(qubit);
        let low = mask - 1;
        let half = self.amps.len() / 2;
        for i in 0..half {
            let i0 = ((i & !low) << 1) | (i & low);
            let i1 = i0 | mask;
            let a0 = self.amps[i0];
            let a1 = self.amps[i1];
            self.amps[i0] = m[0][0] * a0 + m[0][1] * a1;
            self.amps[i1] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

/// Applies one gate in place. Norm is preserved to machine precision.
pub fn apply_gate(state: &mut StateVector, gate: &GateOp) -> Result<(), SimError> {
    match *gate {
        GateOp::H { qubit } => {
            state.check_qubit(qubit)?;
            let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            state.apply_single(qubit, [[s, s], [s, -s]]);
        }
        GateOp::Rx { qubit, angle } => {
            state.check_qubit(qubit)?;
            let c = Complex64::new((angle / 2.0).cos(), 0.0);
            let s = Complex64::new(0.0, -(angle / 2.0).sin());
            state.apply_single(qubit, [[c, s], [s, c]]);
        }
        GateOp::Rz { qubit, angle } => {
            state.check_qubit(qubit)?;
            let mask = state.mask(qubit);
            let minus = Complex64::from_polar(1.0, -angle / 2.0);
            let plus = Complex64::from_polar(1.0, angle / 2.0);
            for (i, amp) in state.amps.iter_mut().enumerate() {
                *amp *= if i & mask == 0 { minus } else { plus };
            }
        }
        GateOp::Rzz { q1, q2, angle } => {
            state.check_qubit(q1)?;
            state.check_qubit(q2)?;
            if q1 == q2 {
                return Err(SimError::DuplicateQubit(q1));
            }
            let m1 = state.mask(q1);
            let m2 = state.mask(q2);
            // exp(-i angle sigma_z sigma_z): phase -angle when bits agree, +angle otherwise
            let agree = Complex64::from_polar(1.0, -angle);
            let differ = Complex64::from_polar(1.0, angle);
            for (i, amp) in state.amps.iter_mut().enumerate() {
                let same = ((i & m1 == 0) == (i & m2 == 0)) as usize;
                *amp *= if same == 1 { agree } else { differ };
            }
        }
        GateOp::Cnot { control, target } => {
            state.check_qubit(control)?;
            state.check_qubit(target)?;
            if control == target {
                return Err(SimError::DuplicateQubit(control));
            }
            let cm = state.mask(control);
            let tm = state.mask(target);
            for i in 0..state.amps.len() {
                if i & cm != 0 && i & tm == 0 {
                    state.amps.swap(i, i | tm);
                }
            }
        }
    }
    Ok(())
}

/// Applies a gate sequence in order.
pub fn apply_circuit(state: &mut StateVector, gates: &[GateOp]) -> Result<(), SimError> {
    for g in gates {
        apply_gate(state, g)?;
    }
    Ok(())
}

/// CNOT-based decomposition of `Rzz(angle)`: CNOT, Rz(2*angle) on the
/// target, CNOT. The product equals the direct two-qubit rotation exactly.
pub fn compile_rzz(angle: f64, q1: usize, q2: usize) -> Vec<GateOp> {
    vec![
        GateOp::Cnot { control: q1, target: q2 },
        GateOp::Rz { qubit: q2, angle: 2.0 * angle },
        GateOp::Cnot { control: q1, target: q2 },
    ]
}

/// Gate sequence preparing one GHZ state per bit position across the `n`
/// registers of `m` qubits each: H on register 0's qubit j, then a CNOT fan
/// to qubit j of every other register. The resulting state is a tensor
/// product of m n-partite GHZ states, so every register's reduced state is
/// maximally mixed.
pub fn prepare_ghz_registers(n: usize, m: usize) -> Result<Vec<GateOp>, SimError> {
    assert!(n >= 2, "need at least two registers");
    assert!(m >= 1, "need at least one qubit per register");
    if n * m > MAX_QUBITS {
        return Err(SimError::TooManyQubits { requested: n * m });
    }
    let mut gates = Vec::with_capacity(m * n);
    for j in 0..m {
        gates.push(GateOp::H { qubit: j });
        for r in 1..n {
            gates.push(GateOp::Cnot { control: j, target: r * m + j });
        }
    }
    Ok(gates)
}

/// Normalized probability histogram over 2^k bitstring outcomes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
}

impl DiscreteDistribution {
    /// Validates non-negativity and normalization (1e-12).
    pub fn new(probs: Vec<f64>) -> Result<Self, DistributionError> {
        if probs.is_empty() {
            return Err(DistributionError::Empty);
        }
        if let Some(i) = probs.iter().position(|&p| p < 0.0 || !p.is_finite()) {
            return Err(DistributionError::NegativeProbability(i));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(DistributionError::NotNormalized(total));
        }
        Ok(DiscreteDistribution { probs })
    }

    /// Uniform distribution over `num_outcomes`.
    pub fn uniform(num_outcomes: usize) -> Self {
        assert!(num_outcomes > 0);
        DiscreteDistribution { probs: vec![1.0 / num_outcomes as f64; num_outcomes] }
    }

    /// Normalizes a histogram of counts.
    pub fn from_counts(counts: &[u64]) -> Result<Self, DistributionError> {
        if counts.is_empty() {
            return Err(DistributionError::Empty);
        }
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(DistributionError::NotNormalized(0.0));
        }
        Ok(DiscreteDistribution {
            probs: counts.iter().map(|&c| c as f64 / total as f64).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, outcome: usize) -> f64 {
        self.probs[outcome]
    }

    /// Total variation distance, (1/2) sum |p - q|.
    pub fn total_variation(&self, other: &DiscreteDistribution) -> f64 {
        assert_eq!(self.len(), other.len());
        0.5 * self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(p, q)| (p - q).abs())
            .sum::<f64>()
    }
}

/// Born-rule probabilities |c_i|^2 of a normalized state.
pub fn exact_probabilities(state: &StateVector) -> DiscreteDistribution {
    let mut probs: Vec<f64> = state.amps.iter().map(|c| c.norm_sqr()).collect();
    // |psi|^2 = 1 within 1e-10 by the state invariant; rescale the residual
    // so the distribution invariant (1e-12) holds exactly downstream.
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    DiscreteDistribution { probs }
}

/// Seeded multinomial draw; returns per-outcome counts summing to `shots`.
pub fn sample_shots(dist: &DiscreteDistribution, shots: u64, seed: u64) -> Vec<u64> {
    assert!(shots >= 1, "need at least one shot");
    let mut cdf = Vec::with_capacity(dist.len());
    let mut acc = 0.0;
    for &p in dist.probs() {
        acc += p;
        cdf.push(acc);
    }
    // Guard the last bin against rounding just below 1.
    if let Some(last) = cdf.last_mut() {
        *last = f64::INFINITY;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![0u64; dist.len()];
    for _ in 0..shots {
        let u: f64 = rand::Rng::random(&mut rng);
        let idx = cdf.partition_point(|&c| c <= u);
        counts[idx] += 1;
    }
    counts
}
