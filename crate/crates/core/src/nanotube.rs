//! Chirality analysis and the factor-space lattice.
//!
//! Rolling the honeycomb sheet along a translation `c` identifies `v` with
//! `v + jc`. Every symmetry invariant of the resulting tube is an exact
//! integer function of `c`: the rotation order `n = gcd(c_i)`, the reduced
//! chirality `c~ = c/n`, the shortest axial translation `t`, the helicity
//! pair `(q, q~)` and the screw generator `w`.

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{LatticeError, LatticePoint, TranslationVector};

/// Tube class after the sorted normalization `c0 > c1 >= c2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TubeClass {
    /// `c1 = c2`.
    Armchair,
    /// `c1 = 0`.
    Zigzag,
    /// `0 != c1 != c2`.
    Chiral,
}

impl fmt::Display for TubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeClass::Armchair => write!(f, "armchair"),
            TubeClass::Zigzag => write!(f, "zigzag"),
            TubeClass::Chiral => write!(f, "chiral"),
        }
    }
}

/// How a raw chirality triple was brought into the `c0 > c1 >= c2` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Normalization {
    /// `normalized[i] = (negated ? -1 : 1) * input[permutation[i]]`
    pub permutation: [usize; 3],
    /// Whether the triple was replaced by its negative (`Zc = Z(-c)`).
    pub negated: bool,
}

impl Normalization {
    pub fn is_identity(&self) -> bool {
        self.permutation == [0, 1, 2] && !self.negated
    }
}

/// A chirality vector together with all derived symmetry invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChiralityData {
    /// The normalized chirality (`c0 > c1 >= c2`).
    pub c: TranslationVector,
    /// The triple as supplied, before normalization.
    pub input_c: TranslationVector,
    pub normalization: Normalization,
    /// Order of the axial rotation: `gcd(c0, c1, c2)`.
    pub n: i64,
    /// Reduced chirality `c / n`; generates the rotation by `2 pi / n`.
    pub c_tilde: TranslationVector,
    /// Shortest pure translation along the tube axis.
    pub t: TranslationVector,
    /// `gcd(c2 - c1, c0 - c2, c1 - c0)`; `3n` or `n`.
    pub r: i64,
    /// `(c0^2 + c1^2 + c2^2) / R`; always a multiple of `n`.
    pub q: i64,
    /// `q / n`: axial projection steps per translation period.
    pub q_tilde: i64,
    /// Shortest translation with axial projection `t / q~`; the screw step.
    pub w: TranslationVector,
    pub tube_class: TubeClass,
}

/// Rejected chirality input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralityError {
    ZeroVector,
    NonzeroSum { sum: i64 },
}

impl fmt::Display for ChiralityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiralityError::ZeroVector => write!(f, "chirality vector must be nonzero"),
            ChiralityError::NonzeroSum { sum } => {
                write!(f, "chirality coordinates must sum to 0, got {sum}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ChiralityError {}

impl From<LatticeError> for ChiralityError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::BadTranslationSum { sum } | LatticeError::BadPointSum { sum } => {
                ChiralityError::NonzeroSum { sum }
            }
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, x, y)` with `a x + b y = g = gcd(a, b)`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a >= 0 {
            (a, 1, 0)
        } else {
            (-a, -1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Axial projection coefficient: the projection of `u` on `t` is
/// `(u2 c1/n - u1 c2/n) / q~` times `t`.
pub fn axial_steps(u: &TranslationVector, cd: &ChiralityData) -> i64 {
    let u = u.coords();
    let ct = cd.c_tilde.coords();
    u[2] * ct[1] - u[1] * ct[2]
}

/// Computes every chirality invariant, exactly over the integers.
///
/// Input triples that are not in the `c0 > c1 >= c2` form are brought into
/// it by sorting and, when the two leading coordinates tie, negation
/// (`Zc = Z(-c)`, so the tube is unchanged); the applied transformation is
/// recorded in the result.
pub fn analyze(c: &TranslationVector) -> Result<ChiralityData, ChiralityError> {
    if c.is_zero() {
        return Err(ChiralityError::ZeroVector);
    }
    let input = *c;
    let (cv, normalization) = normalize(c);
    let [c0, c1, c2] = cv.coords();

    let n = gcd(gcd(c0, c1), c2);
    let c_tilde = TranslationVector::new(c0 / n, c1 / n, c2 / n).expect("c/n sums to zero");
    let [ct0, ct1, ct2] = c_tilde.coords();

    let d = [c2 - c1, c0 - c2, c1 - c0];
    let r = gcd(gcd(d[0], d[1]), d[2]);
    debug_assert_eq!(r, if (ct2 - ct1).rem_euclid(3) == 0 { 3 * n } else { n });
    let t = TranslationVector::new(d[0] / r, d[1] / r, d[2] / r).expect("t sums to zero");

    let q = (c0 * c0 + c1 * c1 + c2 * c2) / r;
    debug_assert_eq!(q % n, 0);
    let q_tilde = q / n;

    // Screw generator: solve u2 (c1/n) - u1 (c2/n) = 1 by extended Euclid
    // (the pair is coprime), then minimize the squared norm over the kernel
    // family u + k c~.
    let (g, x, _y) = ext_gcd(ct1, ct2);
    debug_assert_eq!(g, 1);
    // x ct1 + y ct2 = 1; take u2 = x, u1 = -y, so u2 ct1 - u1 ct2 = 1.
    let u2 = x;
    let u1 = -_y;
    let u0 = -u1 - u2;
    let mut w = TranslationVector::new(u0, u1, u2).expect("particular solution sums to zero");
    w = shortest_in_kernel_family(&w, &c_tilde);
    debug_assert_eq!(w.coords()[2] * ct1 - w.coords()[1] * ct2, 1);

    let tube_class = if c1 == c2 {
        TubeClass::Armchair
    } else if c1 == 0 {
        TubeClass::Zigzag
    } else {
        TubeClass::Chiral
    };

    let _ = ct0;
    Ok(ChiralityData {
        c: cv,
        input_c: input,
        normalization,
        n,
        c_tilde,
        t,
        r,
        q,
        q_tilde,
        w,
        tube_class,
    })
}

fn normalize(c: &TranslationVector) -> (TranslationVector, Normalization) {
    let v = c.coords();
    let mut idx = [0usize, 1, 2];
    // sort descending by value, stable
    idx.sort_by(|a, b| v[*b].cmp(&v[*a]));
    let sorted = [v[idx[0]], v[idx[1]], v[idx[2]]];
    if sorted[0] > sorted[1] {
        let cv = TranslationVector::new(sorted[0], sorted[1], sorted[2]).expect("permuted sum");
        return (
            cv,
            Normalization {
                permutation: idx,
                negated: false,
            },
        );
    }
    // c0 = c1: negate and re-sort (ascending of the original picks the order)
    let neg = [-v[0], -v[1], -v[2]];
    let mut idx2 = [0usize, 1, 2];
    idx2.sort_by(|a, b| neg[*b].cmp(&neg[*a]));
    let sorted2 = [neg[idx2[0]], neg[idx2[1]], neg[idx2[2]]];
    debug_assert!(sorted2[0] > sorted2[1]);
    let cv = TranslationVector::new(sorted2[0], sorted2[1], sorted2[2]).expect("permuted sum");
    (
        cv,
        Normalization {
            permutation: idx2,
            negated: true,
        },
    )
}

/// Minimizes `|u + k c~|^2` over integer `k`; ties go to the smaller `k`.
fn shortest_in_kernel_family(
    u: &TranslationVector,
    c_tilde: &TranslationVector,
) -> TranslationVector {
    let num = -u.dot3(c_tilde);
    let den = c_tilde.norm3_sq();
    let k_floor = num.div_euclid(den);
    let lo = u.add(&c_tilde.scaled(k_floor));
    let hi = u.add(&c_tilde.scaled(k_floor + 1));
    if lo.norm3_sq() <= hi.norm3_sq() {
        lo
    } else {
        hi
    }
}

/// A point of the factor-space lattice, held by its canonical
/// representative (the `j = 0` slice of the word factorization).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TubePoint {
    representative: LatticePoint,
    /// Normalized chirality of the owning tube, for mismatch checks.
    pub chirality: TranslationVector,
}

impl TubePoint {
    pub fn representative(&self) -> LatticePoint {
        self.representative
    }
}

/// Word coordinates `(s, m, p, j)` of a lattice point relative to a tube:
/// `v = s w + m c~ + j c + p (1,0,0)` with `m` in `0..n` and `p` in `{0,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordCoords {
    pub s: i64,
    pub m: i64,
    pub p: i64,
    pub j: i64,
}

/// Decomposes a lattice point in the basis `{w, c~}` of the translation
/// lattice, plus the sublattice offset.
pub fn word_coords(v: &LatticePoint, cd: &ChiralityData) -> WordCoords {
    let p = v.coordinate_sum();
    let vc = v.coords();
    let u = TranslationVector::new(vc[0] - p, vc[1], vc[2]).expect("offset-corrected sum");
    let s = axial_steps(&u, cd);
    let rem = u.sub(&cd.w.scaled(s));
    // rem lies in the kernel Z c~; recover the multiplier from any
    // nonzero reduced-chirality coordinate
    let ct = cd.c_tilde.coords();
    let (i, den) = if ct[1] != 0 { (1, ct[1]) } else { (2, ct[2]) };
    let big_m = rem.coords()[i] / den;
    debug_assert_eq!(rem, cd.c_tilde.scaled(big_m));
    let m = big_m.rem_euclid(cd.n);
    let j = (big_m - m) / cd.n;
    WordCoords { s, m, p, j }
}

/// The canonical representative of the class `v + Zc`.
pub fn canonicalize(v: &LatticePoint, cd: &ChiralityData) -> TubePoint {
    let wc = word_coords(v, cd);
    let u = cd
        .w
        .scaled(wc.s)
        .add(&cd.c_tilde.scaled(wc.m));
    let uc = u.coords();
    let representative =
        LatticePoint::new(uc[0] + wc.p, uc[1], uc[2]).expect("canonical representative sum");
    TubePoint {
        representative,
        chirality: cd.c,
    }
}

/// True iff `v - u` is an integer multiple of the chirality.
pub fn same_class(v: &LatticePoint, u: &LatticePoint, cd: &ChiralityData) -> bool {
    if v.coordinate_sum() != u.coordinate_sum() {
        return false;
    }
    let d = v.difference(u).expect("same parity difference");
    let dc = d.coords();
    let cc = cd.c.coords();
    // c is nonzero, so some coordinate determines the multiple
    let i = (0..3).find(|i| cc[*i] != 0).expect("nonzero chirality");
    if dc[i] % cc[i] != 0 {
        return false;
    }
    let j = dc[i] / cc[i];
    (0..3).all(|i| dc[i] == j * cc[i])
}

/// All canonical representatives with `s` in the given range; handy for
/// enumerating a finite window of the tube.
pub fn tube_window(cd: &ChiralityData, s_range: core::ops::RangeInclusive<i64>) -> Vec<TubePoint> {
    let mut out = Vec::new();
    for s in s_range {
        for m in 0..cd.n {
            for p in 0..=1i64 {
                let u = cd.w.scaled(s).add(&cd.c_tilde.scaled(m));
                let uc = u.coords();
                let rep = LatticePoint::new(uc[0] + p, uc[1], uc[2]).expect("window point sum");
                out.push(TubePoint {
                    representative: rep,
                    chirality: cd.c,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ref_tube() -> ChiralityData {
        analyze(&TranslationVector::new(10, -2, -8).unwrap()).unwrap()
    }

    #[test]
    fn reference_tube_invariants() {
        let cd = ref_tube();
        assert_eq!(cd.n, 2);
        assert_eq!(cd.c_tilde.coords(), [5, -1, -4]);
        assert_eq!(cd.t.coords(), [-1, 3, -2]);
        assert_eq!(cd.w.coords(), [1, 0, -1]);
        assert_eq!(cd.q_tilde, 14);
        assert_eq!(cd.r, 6);
        assert_eq!(cd.q, 28);
        assert_eq!(cd.tube_class, TubeClass::Chiral);
        assert!(cd.normalization.is_identity());
    }

    #[test]
    fn class_detection() {
        let arm = analyze(&TranslationVector::new(2, -1, -1).unwrap()).unwrap();
        assert_eq!(arm.tube_class, TubeClass::Armchair);
        let zig = analyze(&TranslationVector::new(1, 0, -1).unwrap()).unwrap();
        assert_eq!(zig.tube_class, TubeClass::Zigzag);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            analyze(&TranslationVector::ZERO),
            Err(ChiralityError::ZeroVector)
        );
    }

    #[test]
    fn unsorted_input_is_normalized() {
        let cd = analyze(&TranslationVector::new(-8, 10, -2).unwrap()).unwrap();
        assert_eq!(cd.c.coords(), [10, -2, -8]);
        assert_eq!(cd.normalization.permutation, [1, 2, 0]);
        assert!(!cd.normalization.negated);
        // leading tie forces negation: (1, 1, -2) ~ (2, -1, -1)
        let cd = analyze(&TranslationVector::new(1, 1, -2).unwrap()).unwrap();
        assert_eq!(cd.c.coords(), [2, -1, -1]);
        assert!(cd.normalization.negated);
        assert_eq!(cd.tube_class, TubeClass::Armchair);
    }

    #[test]
    fn qw_minus_nt_in_zc() {
        let cd = ref_tube();
        let lhs = cd.w.scaled(cd.q).sub(&cd.t.scaled(cd.n));
        assert_eq!(lhs.coords(), [30, -6, -24]); // = 3c
        assert!(same_class(
            &lhs.as_point(),
            &LatticePoint::ORIGIN,
            &cd
        ));
    }

    #[test]
    fn canonicalize_examples() {
        let cd = ref_tube();
        let origin = LatticePoint::ORIGIN;
        assert_eq!(canonicalize(&origin, &cd).representative(), origin);
        let c_pt = LatticePoint::new(10, -2, -8).unwrap();
        assert_eq!(canonicalize(&c_pt, &cd).representative(), origin);
        let v = LatticePoint::new(11, -2, -8).unwrap();
        assert_eq!(
            canonicalize(&v, &cd).representative(),
            LatticePoint::new(1, 0, 0).unwrap()
        );
    }

    #[test]
    fn canonicalize_constant_on_classes() {
        let cd = ref_tube();
        let base = LatticePoint::new(4, -1, -2).unwrap();
        let canon = canonicalize(&base, &cd);
        for j in -3..=3 {
            let shifted = base.translate(&cd.c.scaled(j));
            assert_eq!(canonicalize(&shifted, &cd), canon);
        }
    }

    #[test]
    fn same_class_examples() {
        let cd = ref_tube();
        let o = LatticePoint::ORIGIN;
        assert!(same_class(
            &o,
            &LatticePoint::new(20, -4, -16).unwrap(),
            &cd
        ));
        assert!(!same_class(&o, &LatticePoint::new(1, 0, 0).unwrap(), &cd));
        assert!(same_class(
            &LatticePoint::new(5, -1, -4).unwrap(),
            &LatticePoint::new(-5, 1, 4).unwrap(),
            &cd
        ));
    }

    #[test]
    fn w_is_shortest_with_unit_axial_step() {
        // desk-scale brute force over a coordinate ball
        for c in [[10, -2, -8], [7, -3, -4], [5, -1, -4], [9, -2, -7]] {
            let cd = analyze(&TranslationVector::new(c[0], c[1], c[2]).unwrap()).unwrap();
            let bound = cd.w.coords().iter().map(|x| x.abs()).max().unwrap()
                + cd.c_tilde.coords().iter().map(|x| x.abs()).max().unwrap();
            let wn = cd.w.norm3_sq();
            for u0 in -bound..=bound {
                for u1 in -bound..=bound {
                    let u2 = -u0 - u1;
                    if u2.abs() > bound {
                        continue;
                    }
                    let u = TranslationVector::new(u0, u1, u2).unwrap();
                    if axial_steps(&u, &cd) == 1 {
                        assert!(u.norm3_sq() >= wn, "shorter screw step {u:?} for {c:?}");
                    }
                }
            }
        }
    }
}
