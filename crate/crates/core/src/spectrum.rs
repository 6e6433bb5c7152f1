//! Nearest-neighbor tight-binding spectrum on the tube.
//!
//! The dispersion is `E(k) = |e^{i k0 a} + e^{i k1 a} + e^{i k2 a}|` (in
//! units of the hopping constant), defined for `k` on the quantized family
//! of straight lines `<k, c> in 2 pi Z` orthogonal to the chirality. The
//! eigenfunctions are plane waves decorated by a sublattice phase
//! `lambda(k)`; at the zeros of `E` the phase branch is fixed to 0.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

use crate::geometry::{
    inner, pairing, FRAME_A, GEOM_TOL, HEX_BOUND, KVector,
};
use crate::lattice::{LatticePoint, TranslationVector};
use crate::nanotube::ChiralityData;

/// Tolerance for `<k, c> mod 2 pi` when deciding allowed-line membership;
/// looser than the arithmetic tolerance because line parameters are floats.
pub const LINE_TOL: f64 = 1e-9;

/// Threshold on `|e^{ik0 a} + e^{ik1 a} + e^{ik2 a}|` below which the
/// zero-energy branch (`lambda = 0`) is selected.
pub const ZERO_ENERGY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumError {
    /// `<k, c>` is not an integer multiple of `2 pi`.
    OffAllowedLine { pairing_value: f64 },
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::OffAllowedLine { pairing_value } => write!(
                f,
                "k is not on an allowed line: <k,c> = {pairing_value} is not in 2 pi Z"
            ),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SpectrumError {}

/// `e^{i k0 a} + e^{i k1 a} + e^{i k2 a}`.
pub fn phase_sum(k: &KVector) -> Complex64 {
    let kk = k.coords();
    let mut z = Complex64::new(0.0, 0.0);
    for ki in kk {
        z += Complex64::new(libm::cos(ki * FRAME_A), libm::sin(ki * FRAME_A));
    }
    z
}

/// Dispersion `E(k)` in units of the hopping constant; values in `[0, 3]`.
pub fn dispersion(k: &KVector) -> f64 {
    phase_sum(k).norm()
}

/// The square-root cosine form of the dispersion; agrees with
/// [`dispersion`] to machine precision.
pub fn dispersion_cos(k: &KVector) -> f64 {
    let [k0, k1, k2] = k.coords();
    let s = 3.0
        + 2.0 * libm::cos((k0 - k1) * FRAME_A)
        + 2.0 * libm::cos((k1 - k2) * FRAME_A)
        + 2.0 * libm::cos((k2 - k0) * FRAME_A);
    libm::sqrt(if s < 0.0 { 0.0 } else { s })
}

/// Sublattice phase `lambda(k)` in `(-pi/2, pi/2]`; 0 on the zeros of `E`.
pub fn lambda_phase(k: &KVector) -> f64 {
    let z = phase_sum(k);
    if z.norm() < ZERO_ENERGY_TOL {
        return 0.0;
    }
    let mut lam = -0.5 * z.arg();
    if lam <= -PI / 2.0 {
        lam += PI;
    }
    lam
}

/// True iff `<k, c>` is within [`LINE_TOL`] of an integer multiple of
/// `2 pi`.
pub fn on_allowed_line(k: &KVector, cd: &ChiralityData) -> bool {
    let val = pairing(k, cd.c.coords()) / (2.0 * PI);
    libm::fabs(val - libm::round(val)) * 2.0 * PI < LINE_TOL
}

/// Band sign: the `+E(k)` or `-E(k)` eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandSign {
    Plus,
    Minus,
}

impl BandSign {
    fn factor(&self) -> f64 {
        match self {
            BandSign::Plus => 1.0,
            BandSign::Minus => -1.0,
        }
    }
}

/// An eigenfunction `psi_k^{+-}`, well-defined on the factor space when `k`
/// lies on an allowed line of its tube.
#[derive(Debug, Clone, Copy)]
pub struct WaveFunction {
    pub k: KVector,
    pub sign: BandSign,
    /// Normalized chirality of the owning tube.
    pub chirality: TranslationVector,
}

impl WaveFunction {
    /// Requires `<k, c>` in `2 pi Z` (class well-definedness).
    pub fn new(k: KVector, sign: BandSign, cd: &ChiralityData) -> Result<Self, SpectrumError> {
        if !on_allowed_line(&k, cd) {
            return Err(SpectrumError::OffAllowedLine {
                pairing_value: pairing(&k, cd.c.coords()),
            });
        }
        Ok(Self {
            k,
            sign,
            chirality: cd.c,
        })
    }

    /// `psi_k^{+-}[v] = e^{-i<k,v>} phi_k^{+-}[v]`; always of modulus 1.
    pub fn value(&self, v: &LatticePoint) -> Complex64 {
        let phase = -pairing(&self.k, v.coords());
        let lam = lambda_phase(&self.k);
        let phi = if v.epsilon() == 1 {
            Complex64::new(libm::cos(lam), libm::sin(lam))
        } else {
            Complex64::new(libm::cos(lam), -libm::sin(lam)).scale(self.sign.factor())
        };
        Complex64::new(libm::cos(phase), libm::sin(phase)) * phi
    }
}

/// `(H psi)[v] = sum_j psi[v^j]` over the three nearest neighbors
/// (hopping constant fixed to 1).
pub fn apply_hamiltonian<F>(psi: F, v: &LatticePoint) -> Complex64
where
    F: Fn(&LatticePoint) -> Complex64,
{
    v.nearest_neighbors().iter().map(&psi).sum()
}

/// One allowed line `<k, c> = 2 pi mu` clipped to the hexagonal domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineDescriptor {
    /// The integer `mu`.
    pub index: i64,
    /// Foot of the line: `mu (2 pi / <c,c>) c`.
    pub base: KVector,
    /// Unit vector along the axial translation `t`.
    pub direction: KVector,
    pub param_min: f64,
    pub param_max: f64,
}

impl LineDescriptor {
    pub fn k_at(&self, param: f64) -> KVector {
        self.base.add(&self.direction.scale(param))
    }
}

/// Enumerates the allowed lines intersecting the hexagonal domain, in
/// ascending line index.
pub fn allowed_lines(cd: &ChiralityData) -> Vec<LineDescriptor> {
    let c_dir = KVector::from_translation(&cd.c);
    let icc = inner(&cd.c, &cd.c);
    let t_dir = KVector::from_translation(&cd.t);
    let t_norm = libm::sqrt(inner(&cd.t, &cd.t));
    let direction = t_dir.scale(1.0 / t_norm);

    let abs_sum: i64 = cd.c.coords().iter().map(|x| x.abs()).sum();
    let mu_max = abs_sum / 3 + 1;

    let mut out = Vec::new();
    for mu in -mu_max..=mu_max {
        let base = c_dir.scale(mu as f64 * 2.0 * PI / icc);
        if let Some((lo, hi)) = clip_to_hexagon(&base, &direction) {
            out.push(LineDescriptor {
                index: mu,
                base,
                direction,
                param_min: lo,
                param_max: hi,
            });
        }
    }
    out
}

/// Parameter interval of `base + tau * dir` inside the hexagon, if any.
/// All direction components are nonzero for chiral and zig-zag axes.
fn clip_to_hexagon(base: &KVector, dir: &KVector) -> Option<(f64, f64)> {
    let b = base.coords();
    let d = dir.coords();
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for i in 0..3 {
        if libm::fabs(d[i]) < GEOM_TOL {
            if libm::fabs(b[i]) > HEX_BOUND + GEOM_TOL {
                return None;
            }
            continue;
        }
        let a = (-HEX_BOUND - b[i]) / d[i];
        let bb = (HEX_BOUND - b[i]) / d[i];
        let (a, bb) = if a <= bb { (a, bb) } else { (bb, a) };
        lo = if a > lo { a } else { lo };
        hi = if bb < hi { bb } else { hi };
    }
    if lo <= hi + GEOM_TOL {
        Some((lo, hi))
    } else {
        None
    }
}

/// One sampled point of the band structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandSample {
    pub line_index: i64,
    pub param: f64,
    pub k: KVector,
    /// In units of the hopping constant; `0 <= energy_plus <= 3`.
    pub energy_plus: f64,
    pub energy_minus: f64,
    pub lambda_phase: f64,
}

/// Uniform sampling of every allowed line clipped to the hexagon, ordered
/// by `(line_index, param)`. `samples_per_line >= 2`.
pub fn sample_bands(cd: &ChiralityData, samples_per_line: usize) -> Vec<BandSample> {
    assert!(samples_per_line >= 2, "need at least two samples per line");
    let mut out = Vec::new();
    for line in allowed_lines(cd) {
        let span = line.param_max - line.param_min;
        for j in 0..samples_per_line {
            let frac = j as f64 / (samples_per_line - 1) as f64;
            let param = line.param_min + frac * span;
            let k = line.k_at(param);
            let e = dispersion(&k);
            out.push(BandSample {
                line_index: line.index,
                param,
                k,
                energy_plus: e,
                energy_minus: -e,
                lambda_phase: lambda_phase(&k),
            });
        }
    }
    out
}

/// The full seven-point set of one-dimensional eigenspace candidates,
/// indexed by `(alpha, beta)` in the pairs that land inside the hexagon.
pub fn lambda_set() -> [((i64, i64), KVector); 7] {
    let step = HEX_BOUND / 2.0; // pi / (3a)
    let mk = |alpha: i64, beta: i64| {
        let k0 = -(alpha + beta) as f64 * step;
        let k1 = (2 * alpha - beta) as f64 * step;
        let k2 = (-alpha + 2 * beta) as f64 * step;
        KVector::new(k0, k1, k2).expect("lambda point sums to zero")
    };
    [
        ((0, 0), mk(0, 0)),
        ((1, 1), mk(1, 1)),
        ((-1, -1), mk(-1, -1)),
        ((1, 0), mk(1, 0)),
        ((-1, 0), mk(-1, 0)),
        ((0, 1), mk(0, 1)),
        ((0, -1), mk(0, -1)),
    ]
}

/// The members of the seven-point set lying on allowed lines of the tube:
/// exactly those with `alpha c1 + beta c2` even (all seven for even `n`).
pub fn lambda_points(cd: &ChiralityData) -> Vec<KVector> {
    let [_, c1, c2] = cd.c.coords();
    lambda_set()
        .iter()
        .filter(|((alpha, beta), _)| (alpha * c1 + beta * c2).rem_euclid(2) == 0)
        .map(|(_, k)| *k)
        .collect()
}

/// True iff some zero of the dispersion (a corner of the hexagon) lies on
/// an allowed line. Exact integer test: the corner pairings are
/// `(2 pi / 3)(c_i - c_j)`, all congruent mod 3, so membership reduces to
/// `3 | (c0 - c1)`, equivalently `R = 3n`.
pub fn is_metallic(cd: &ChiralityData) -> bool {
    let [c0, c1, _] = cd.c.coords();
    (c0 - c1).rem_euclid(3) == 0
}
