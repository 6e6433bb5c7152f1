//! Honeycomb lattice in three-axes coordinates.
//!
//! A vertex is an integer triple with coordinate sum 0 or 1; the two values
//! of the sum label the two triangular sublattices. The taxicab metric on the
//! triples is a genuine distance on the lattice and the whole isometry group
//! is generated by two coordinate permutations and one point inversion.

use alloc::vec::Vec;
use core::fmt;

/// A honeycomb vertex: integer triple with `v0 + v1 + v2` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    v: [i64; 3],
}

/// A lattice translation: integer triple with zero coordinate sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslationVector {
    u: [i64; 3],
}

/// Rejected constructor input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeError {
    /// Coordinate sum is neither 0 nor 1.
    BadPointSum { sum: i64 },
    /// Coordinate sum is nonzero.
    BadTranslationSum { sum: i64 },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::BadPointSum { sum } => {
                write!(f, "lattice point coordinate sum must be 0 or 1, got {sum}")
            }
            LatticeError::BadTranslationSum { sum } => {
                write!(f, "translation coordinate sum must be 0, got {sum}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LatticeError {}

impl LatticePoint {
    /// Validates the sum-in-`{0, 1}` invariant; no silent normalization.
    pub fn new(v0: i64, v1: i64, v2: i64) -> Result<Self, LatticeError> {
        let sum = v0 + v1 + v2;
        if sum == 0 || sum == 1 {
            Ok(Self { v: [v0, v1, v2] })
        } else {
            Err(LatticeError::BadPointSum { sum })
        }
    }

    pub const ORIGIN: LatticePoint = LatticePoint { v: [0, 0, 0] };

    pub fn coords(&self) -> [i64; 3] {
        self.v
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.v[0] + self.v[1] + self.v[2]
    }

    /// Sublattice parity: `+1` for coordinate sum 0, `-1` for sum 1.
    pub fn epsilon(&self) -> i64 {
        if self.coordinate_sum() == 0 {
            1
        } else {
            -1
        }
    }

    /// Taxicab distance on the triples; a metric on the lattice.
    pub fn distance(&self, other: &LatticePoint) -> u64 {
        self.v
            .iter()
            .zip(other.v.iter())
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    /// The neighbor obtained by incrementing coordinate `i` by the parity.
    pub fn neighbor(&self, i: usize) -> LatticePoint {
        let mut v = self.v;
        v[i] += self.epsilon();
        LatticePoint { v }
    }

    /// The three nearest neighbors, in coordinate order.
    pub fn nearest_neighbors(&self) -> [LatticePoint; 3] {
        [self.neighbor(0), self.neighbor(1), self.neighbor(2)]
    }

    /// The six next-to-nearest neighbors, as `(v^i)^j` over the pairs
    /// `(0,1), (0,2), (1,0), (1,2), (2,0), (2,1)` in that order.
    pub fn next_nearest_neighbors(&self) -> [LatticePoint; 6] {
        let mut out = [*self; 6];
        let mut idx = 0;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    out[idx] = self.neighbor(i).neighbor(j);
                    idx += 1;
                }
            }
        }
        out
    }

    pub fn translate(&self, u: &TranslationVector) -> LatticePoint {
        LatticePoint {
            v: [self.v[0] + u.u[0], self.v[1] + u.u[1], self.v[2] + u.u[2]],
        }
    }

    /// Difference of two points on the same sublattice is a translation.
    pub fn difference(&self, other: &LatticePoint) -> Result<TranslationVector, LatticeError> {
        TranslationVector::new(
            self.v[0] - other.v[0],
            self.v[1] - other.v[1],
            self.v[2] - other.v[2],
        )
    }
}

impl TranslationVector {
    /// Validates the zero-sum invariant.
    pub fn new(u0: i64, u1: i64, u2: i64) -> Result<Self, LatticeError> {
        let sum = u0 + u1 + u2;
        if sum == 0 {
            Ok(Self { u: [u0, u1, u2] })
        } else {
            Err(LatticeError::BadTranslationSum { sum })
        }
    }

    pub const ZERO: TranslationVector = TranslationVector { u: [0, 0, 0] };

    pub fn coords(&self) -> [i64; 3] {
        self.u
    }

    pub fn is_zero(&self) -> bool {
        self.u == [0, 0, 0]
    }

    /// Integer dot product of the raw coordinate triples.
    pub fn dot3(&self, other: &TranslationVector) -> i64 {
        self.u[0] * other.u[0] + self.u[1] * other.u[1] + self.u[2] * other.u[2]
    }

    /// Squared coordinate norm (exact integer).
    pub fn norm3_sq(&self) -> i64 {
        self.dot3(self)
    }

    pub fn scaled(&self, j: i64) -> TranslationVector {
        TranslationVector {
            u: [self.u[0] * j, self.u[1] * j, self.u[2] * j],
        }
    }

    pub fn add(&self, other: &TranslationVector) -> TranslationVector {
        TranslationVector {
            u: [
                self.u[0] + other.u[0],
                self.u[1] + other.u[1],
                self.u[2] + other.u[2],
            ],
        }
    }

    pub fn sub(&self, other: &TranslationVector) -> TranslationVector {
        TranslationVector {
            u: [
                self.u[0] - other.u[0],
                self.u[1] - other.u[1],
                self.u[2] - other.u[2],
            ],
        }
    }

    pub fn neg(&self) -> TranslationVector {
        self.scaled(-1)
    }

    pub fn as_point(&self) -> LatticePoint {
        LatticePoint { v: self.u }
    }
}

/// True iff the triple is an admissible lattice translation (zero sum).
pub fn is_translation(u: [i64; 3]) -> bool {
    u[0] + u[1] + u[2] == 0
}

/// One of the three generators of the honeycomb isometry group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoneycombGenerator {
    /// `(v0, v1, v2) -> (v1, v2, v0)`, a rotation by 120 degrees.
    Cycle,
    /// `(v0, v1, v2) -> (v0, v2, v1)`, a mirror.
    Swap,
    /// `(v0, v1, v2) -> (-v0 + 1, -v1, -v2)`, the sublattice exchange.
    Invert,
}

impl HoneycombGenerator {
    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        let [v0, v1, v2] = p.v;
        let v = match self {
            HoneycombGenerator::Cycle => [v1, v2, v0],
            HoneycombGenerator::Swap => [v0, v2, v1],
            HoneycombGenerator::Invert => [-v0 + 1, -v1, -v2],
        };
        LatticePoint { v }
    }
}

/// The three generators of the full honeycomb isometry group.
pub fn honeycomb_generators() -> [HoneycombGenerator; 3] {
    [
        HoneycombGenerator::Cycle,
        HoneycombGenerator::Swap,
        HoneycombGenerator::Invert,
    ]
}

/// All lattice points in the cube `[-r, r]^3` around `center`.
/// Brute-force helper for neighbor-shell oracles.
pub fn points_in_cube(center: &LatticePoint, r: i64) -> Vec<LatticePoint> {
    let [c0, c1, c2] = center.v;
    let mut out = Vec::new();
    for v0 in (c0 - r)..=(c0 + r) {
        for v1 in (c1 - r)..=(c1 + r) {
            for v2 in (c2 - r)..=(c2 + r) {
                if let Ok(p) = LatticePoint::new(v0, v1, v2) {
                    out.push(p);
                }
            }
        }
    }
    out
}
