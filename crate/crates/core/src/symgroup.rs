//! The symmetry group of a chiral tube.
//!
//! Generators: the axial rotation `rho` (translation by `c~`), the screw
//! operation `sigma` (translation by `w`) and the sublattice exchange `tau`.
//! Relations: `rho sigma = sigma rho`, `rho^n = tau^2 = (sigma tau)^2 =
//! (rho tau)^2 = e`. Every element has the canonical word
//! `sigma^s rho^m tau^p` with `m` in `0..n` and `p` in `{0, 1}`; conjugating
//! `tau` past a translation negates it, which is what the word algebra below
//! uses.

use core::fmt;

use crate::lattice::{LatticePoint, TranslationVector};
use crate::nanotube::{canonicalize, word_coords, ChiralityData, TubeClass, TubePoint};

/// Canonical word `sigma^s rho^m tau^p` of a symmetry-group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub s: i64,
    /// In `0..n`.
    pub m: i64,
    /// 0 or 1.
    pub p: i64,
    /// Normalized chirality of the owning tube.
    pub chirality: TranslationVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymGroupError {
    /// The group machinery is only constructed for chiral tubes.
    NotChiral { class: TubeClass },
    /// The element and the operand belong to different tubes.
    ChiralityMismatch,
}

impl fmt::Display for SymGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymGroupError::NotChiral { class } => write!(
                f,
                "symmetry-group operations are only available for chiral tubes \
                 (got a {class} tube); armchair and zig-zag tubes carry extra \
                 symmetries not covered by this presentation"
            ),
            SymGroupError::ChiralityMismatch => {
                write!(f, "operands belong to tubes of different chirality")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SymGroupError {}

/// The symmetry group of one chiral tube; a factory for canonical words.
#[derive(Debug, Clone, Copy)]
pub struct SymGroup<'a> {
    cd: &'a ChiralityData,
}

impl<'a> SymGroup<'a> {
    /// Only chiral tubes are accepted.
    pub fn new(cd: &'a ChiralityData) -> Result<Self, SymGroupError> {
        if cd.tube_class != TubeClass::Chiral {
            return Err(SymGroupError::NotChiral {
                class: cd.tube_class,
            });
        }
        Ok(Self { cd })
    }

    pub fn chirality(&self) -> &ChiralityData {
        self.cd
    }

    pub fn identity(&self) -> GroupElement {
        self.word(0, 0, 0)
    }

    /// The canonical word with the given exponents (`m` reduced mod `n`,
    /// `p` reduced mod 2).
    pub fn word(&self, s: i64, m: i64, p: i64) -> GroupElement {
        GroupElement {
            s,
            m: m.rem_euclid(self.cd.n),
            p: p.rem_euclid(2),
            chirality: self.cd.c,
        }
    }

    /// The screw generator `sigma`.
    pub fn sigma(&self) -> GroupElement {
        self.word(1, 0, 0)
    }

    /// The axial rotation `rho`.
    pub fn rho(&self) -> GroupElement {
        self.word(0, 1, 0)
    }

    /// The sublattice exchange `tau`.
    pub fn tau(&self) -> GroupElement {
        self.word(0, 0, 1)
    }

    fn check(&self, c: &TranslationVector) -> Result<(), SymGroupError> {
        if *c == self.cd.c {
            Ok(())
        } else {
            Err(SymGroupError::ChiralityMismatch)
        }
    }

    /// Applies `g` to a tube point: `tau^p` first, then translation by
    /// `s w + m c~`, then canonicalization.
    pub fn act(&self, g: &GroupElement, x: &TubePoint) -> Result<TubePoint, SymGroupError> {
        self.check(&g.chirality)?;
        self.check(&x.chirality)?;
        let v = x.representative();
        let flipped = if g.p == 1 { tau_point(&v) } else { v };
        let shift = self.cd.w.scaled(g.s).add(&self.cd.c_tilde.scaled(g.m));
        Ok(canonicalize(&flipped.translate(&shift), self.cd))
    }

    /// Product `g h` as a canonical word, via the conjugation rule
    /// `tau g_u tau = g_{-u}`.
    pub fn compose(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement, SymGroupError> {
        self.check(&g.chirality)?;
        self.check(&h.chirality)?;
        let sign = if g.p == 1 { -1 } else { 1 };
        Ok(self.word(g.s + sign * h.s, g.m + sign * h.m, g.p + h.p))
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        if g.p == 1 {
            // sigma^s rho^m tau is an involution
            *g
        } else {
            self.word(-g.s, -g.m, 0)
        }
    }

    /// The unique word mapping the origin class to `x`.
    pub fn factorize(&self, x: &TubePoint) -> Result<GroupElement, SymGroupError> {
        self.check(&x.chirality)?;
        let wc = word_coords(&x.representative(), self.cd);
        debug_assert_eq!(wc.j, 0, "canonical representative has j = 0");
        Ok(self.word(wc.s, wc.m, wc.p))
    }

    /// The tube point `g [0,0,0]`.
    pub fn orbit_of_origin(&self, g: &GroupElement) -> Result<TubePoint, SymGroupError> {
        self.act(g, &canonicalize(&LatticePoint::ORIGIN, self.cd))
    }
}

/// The sublattice exchange on representatives: `v -> (-v0 + 1, -v1, -v2)`.
pub fn tau_point(v: &LatticePoint) -> LatticePoint {
    let [v0, v1, v2] = v.coords();
    LatticePoint::new(-v0 + 1, -v1, -v2).expect("tau flips the coordinate sum within {0,1}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nanotube::analyze;

    fn ref_tube() -> ChiralityData {
        analyze(&TranslationVector::new(10, -2, -8).unwrap()).unwrap()
    }

    fn tp(cd: &ChiralityData, v: [i64; 3]) -> TubePoint {
        canonicalize(&LatticePoint::new(v[0], v[1], v[2]).unwrap(), cd)
    }

    #[test]
    fn non_chiral_rejected() {
        let arm = analyze(&TranslationVector::new(2, -1, -1).unwrap()).unwrap();
        assert!(matches!(
            SymGroup::new(&arm),
            Err(SymGroupError::NotChiral { .. })
        ));
    }

    #[test]
    fn generator_actions_on_origin() {
        let cd = ref_tube();
        let g = SymGroup::new(&cd).unwrap();
        let origin = tp(&cd, [0, 0, 0]);
        assert_eq!(
            g.act(&g.tau(), &origin).unwrap(),
            tp(&cd, [1, 0, 0])
        );
        assert_eq!(
            g.act(&g.sigma(), &origin).unwrap(),
            tp(&cd, [1, 0, -1])
        );
        assert_eq!(
            g.act(&g.rho(), &origin).unwrap(),
            tp(&cd, [5, -1, -4])
        );
    }

    #[test]
    fn presentation_relations_as_words() {
        let cd = ref_tube();
        let g = SymGroup::new(&cd).unwrap();
        let e = g.identity();
        let tau = g.tau();
        assert_eq!(g.compose(&tau, &tau).unwrap(), e);
        // rho sigma = sigma rho
        assert_eq!(
            g.compose(&g.rho(), &g.sigma()).unwrap(),
            g.compose(&g.sigma(), &g.rho()).unwrap()
        );
        // rho^n = e
        let mut acc = e;
        for _ in 0..cd.n {
            acc = g.compose(&acc, &g.rho()).unwrap();
        }
        assert_eq!(acc, e);
        // (sigma tau)^2 = (rho tau)^2 = e
        let st = g.compose(&g.sigma(), &tau).unwrap();
        assert_eq!(g.compose(&st, &st).unwrap(), e);
        let rt = g.compose(&g.rho(), &tau).unwrap();
        assert_eq!(g.compose(&rt, &rt).unwrap(), e);
    }

    #[test]
    fn rho_squared_renormalizes_for_n_two() {
        let cd = ref_tube();
        let g = SymGroup::new(&cd).unwrap();
        let rho2 = g.compose(&g.rho(), &g.rho()).unwrap();
        assert_eq!(rho2.m, 0);
        // action equality against the direct translation by c
        for v in [[0, 0, 0], [3, -1, -2], [1, 0, 0], [7, -4, -2]] {
            let x = tp(&cd, v);
            let via_word = g.act(&rho2, &x).unwrap();
            assert_eq!(via_word, x, "rho^2 = g_c acts trivially");
        }
    }

    #[test]
    fn factorize_examples() {
        let cd = ref_tube();
        let g = SymGroup::new(&cd).unwrap();
        let sig = g.factorize(&tp(&cd, [1, 0, -1])).unwrap();
        assert_eq!((sig.s, sig.m, sig.p), (1, 0, 0));
        let rt = g.factorize(&tp(&cd, [6, -1, -4])).unwrap();
        assert_eq!((rt.s, rt.m, rt.p), (0, 1, 1));
    }

    #[test]
    fn inverse_round_trip() {
        let cd = ref_tube();
        let g = SymGroup::new(&cd).unwrap();
        assert_eq!(g.inverse(&g.tau()), g.tau());
        assert_eq!(g.inverse(&g.sigma()), g.word(-1, 0, 0));
        for (s, m, p) in [(0, 1, 0), (3, 1, 1), (-2, 0, 1), (5, 1, 0)] {
            let el = g.word(s, m, p);
            assert_eq!(g.compose(&el, &g.inverse(&el)).unwrap(), g.identity());
            assert_eq!(g.compose(&g.inverse(&el), &el).unwrap(), g.identity());
        }
    }

    #[test]
    fn factorize_act_round_trip() {
        let cd = ref_tube();
        let g = SymGroup::new(&cd).unwrap();
        for s in -5..=5 {
            for m in 0..cd.n {
                for p in 0..=1 {
                    let word = g.word(s, m, p);
                    let x = g.orbit_of_origin(&word).unwrap();
                    assert_eq!(g.factorize(&x).unwrap(), word);
                }
            }
        }
    }

    #[test]
    fn mismatched_chirality_errors() {
        let cd1 = ref_tube();
        let cd2 = analyze(&TranslationVector::new(7, -3, -4).unwrap()).unwrap();
        let g1 = SymGroup::new(&cd1).unwrap();
        let x2 = canonicalize(&LatticePoint::ORIGIN, &cd2);
        assert_eq!(
            g1.act(&g1.tau(), &x2),
            Err(SymGroupError::ChiralityMismatch)
        );
    }
}
