//! Euclidean embedding and reciprocal space.
//!
//! The three unit vectors `e_0, e_1, e_2` at 120 degrees form a tight frame
//! of the plane with frame constant `a = 2/3`. Lattice triples embed as
//! `v0 e0 + v1 e1 + v2 e2`; reciprocal-space points are zero-sum real
//! triples paired with lattice triples through `<k,v> = a sum_i k_i v_i`.
//!
//! Two scalar products appear in the source material: the tight-frame form
//! in canonical coordinates and the raw-coordinate form `a sum_i u_i w_i`.
//! The raw-coordinate form is the one consistent with the pairing above
//! (it makes `k = mu (2 pi / <c,c>) c` land on the line `<k,c> = 2 pi mu`),
//! so it is adopted throughout; it equals the Euclidean dot product of the
//! `a`-weighted embeddings `a sum_i u_i e_i`.

use core::f64::consts::PI;
use core::fmt;

use crate::lattice::TranslationVector;

/// Tight-frame constant: `v = a sum_i <v, e_i> e_i`.
pub const FRAME_A: f64 = 2.0 / 3.0;

/// Half-width of the hexagonal domain: `2 pi / (3a)`.
pub const HEX_BOUND: f64 = 2.0 * PI / (3.0 * FRAME_A);

/// Absolute tolerance for geometric identities.
pub const GEOM_TOL: f64 = 1e-12;

/// A point of the Euclidean plane, in bond-length units (`|e_i| = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneVector {
    pub x: f64,
    pub y: f64,
}

impl PlaneVector {
    pub fn dot(&self, other: &PlaneVector) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.dot(self))
    }
}

/// The frame vectors `e_0, e_1, e_2` (vertices of a regular triangle).
pub fn frame_vectors() -> [PlaneVector; 3] {
    let h = libm::sqrt(3.0) / 2.0;
    [
        PlaneVector { x: 1.0, y: 0.0 },
        PlaneVector { x: -0.5, y: h },
        PlaneVector { x: -0.5, y: -h },
    ]
}

/// A reciprocal-space point: real triple with zero coordinate sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KVector {
    k: [f64; 3],
}

/// Rejected `KVector` input: coordinate sum off zero beyond tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KSumError {
    pub sum: f64,
}

impl fmt::Display for KSumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k-vector coordinates must sum to 0, got {:e}", self.sum)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for KSumError {}

impl KVector {
    pub fn new(k0: f64, k1: f64, k2: f64) -> Result<Self, KSumError> {
        let sum = k0 + k1 + k2;
        if libm::fabs(sum) <= GEOM_TOL {
            Ok(Self { k: [k0, k1, k2] })
        } else {
            Err(KSumError { sum })
        }
    }

    pub const ZERO: KVector = KVector { k: [0.0, 0.0, 0.0] };

    pub fn coords(&self) -> [f64; 3] {
        self.k
    }

    pub fn add(&self, other: &KVector) -> KVector {
        KVector {
            k: [
                self.k[0] + other.k[0],
                self.k[1] + other.k[1],
                self.k[2] + other.k[2],
            ],
        }
    }

    pub fn sub(&self, other: &KVector) -> KVector {
        KVector {
            k: [
                self.k[0] - other.k[0],
                self.k[1] - other.k[1],
                self.k[2] - other.k[2],
            ],
        }
    }

    pub fn neg(&self) -> KVector {
        self.scale(-1.0)
    }

    pub fn scale(&self, s: f64) -> KVector {
        KVector {
            k: [self.k[0] * s, self.k[1] * s, self.k[2] * s],
        }
    }

    /// `c` regarded as a reciprocal-space direction.
    pub fn from_translation(u: &TranslationVector) -> KVector {
        let [u0, u1, u2] = u.coords();
        KVector {
            k: [u0 as f64, u1 as f64, u2 as f64],
        }
    }

    /// Norm induced by the raw-coordinate scalar product.
    pub fn norm(&self) -> f64 {
        libm::sqrt(FRAME_A * (self.k[0] * self.k[0] + self.k[1] * self.k[1] + self.k[2] * self.k[2]))
    }
}

/// Embeds a coordinate triple into the plane: `v0 e0 + v1 e1 + v2 e2`.
pub fn embed(v: [i64; 3]) -> PlaneVector {
    let e = frame_vectors();
    PlaneVector {
        x: v[0] as f64 * e[0].x + v[1] as f64 * e[1].x + v[2] as f64 * e[2].x,
        y: v[0] as f64 * e[0].y + v[1] as f64 * e[1].y + v[2] as f64 * e[2].y,
    }
}

/// Canonical coordinates of a plane point: its dots with the frame vectors.
/// Components sum to zero; `a sum_i <p,e_i> e_i` reconstructs `p`.
pub fn canonical_coords(p: &PlaneVector) -> [f64; 3] {
    let e = frame_vectors();
    [p.dot(&e[0]), p.dot(&e[1]), p.dot(&e[2])]
}

/// The pairing `<k, v> = a sum_i k_i v_i` (radians).
pub fn pairing(k: &KVector, v: [i64; 3]) -> f64 {
    let kk = k.coords();
    FRAME_A * (kk[0] * v[0] as f64 + kk[1] * v[1] as f64 + kk[2] * v[2] as f64)
}

/// Scalar product of two lattice translations: `a sum_i u_i w_i`.
pub fn inner(u: &TranslationVector, w: &TranslationVector) -> f64 {
    FRAME_A * u.dot3(w) as f64
}

/// True iff every coordinate lies in `[-2pi/(3a), 2pi/(3a)]` (closed domain,
/// with a `1e-12` slack so boundary points survive float parametrization).
pub fn hexagon_b_contains(k: &KVector) -> bool {
    k.coords().iter().all(|ki| libm::fabs(*ki) <= HEX_BOUND + GEOM_TOL)
}

/// The three periodicity vectors `b_0, b_1, b_2` of the dispersion.
pub fn periodicity_vectors() -> [KVector; 3] {
    let hi = 2.0 * HEX_BOUND;
    let lo = -HEX_BOUND;
    [
        KVector { k: [hi, lo, lo] },
        KVector { k: [lo, hi, lo] },
        KVector { k: [lo, lo, hi] },
    ]
}
