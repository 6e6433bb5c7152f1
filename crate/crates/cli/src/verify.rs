//! Seeded invariant suite: re-checks every module's contracts at runtime
//! with randomized inputs, printing one pass/fail line per invariant.

use std::io::Write;

use cnt_core::geometry::{
    embed, inner, pairing, periodicity_vectors, FRAME_A, KVector,
};
use cnt_core::lattice::{honeycomb_generators, LatticePoint, TranslationVector};
use cnt_core::nanotube::{
    analyze, canonicalize, same_class, word_coords, ChiralityData, TubeClass,
};
use cnt_core::reps::{
    classify, clebsch_gordan, commutant_dimension, is_lambda_point, rep_matrices, Mat2,
    RepKind,
};
use cnt_core::spectrum::{
    allowed_lines, apply_hamiltonian, dispersion, dispersion_cos, BandSign, WaveFunction,
};
use cnt_core::symgroup::{SymGroup, SymGroupError};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::output::resolve_chirality;
use crate::{CSpec, CliError};

pub fn run(
    cspec: &CSpec,
    seed: u64,
    trials: u64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cd = resolve_chirality(cspec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_ok = true;

    let mut report = |name: &str, result: Result<(), String>, out: &mut dyn Write| {
        match result {
            Ok(()) => writeln!(out, "ok    {name}"),
            Err(msg) => {
                all_ok = false;
                writeln!(out, "FAIL  {name}: {msg}")
            }
        }
        .map_err(|e| CliError::Io(format!("{e}")))
    };

    report("lattice-metric", lattice_metric(&mut rng, trials), out)?;
    report("geometry-inner", geometry_inner(&mut rng, trials), out)?;
    report("chirality-chain", chirality_chain(&mut rng, trials), out)?;
    report("factor-space", factor_space(&cd, &mut rng, trials), out)?;
    match SymGroup::new(&cd) {
        Ok(group) => {
            report("symgroup-relations", symgroup_relations(&group, &mut rng, trials), out)?;
            report("reps-relations", reps_relations(&cd, &mut rng, trials), out)?;
            report("cg-residual", cg_residual(&cd, &mut rng, trials.min(50)), out)?;
        }
        Err(SymGroupError::NotChiral { .. }) => {
            writeln!(
                out,
                "skip  symgroup-relations: chiral tubes only (this tube is {})",
                crate::output::class_name(cd.tube_class)
            )
            .map_err(|e| CliError::Io(format!("{e}")))?;
            writeln!(out, "skip  reps-relations: chiral tubes only")
                .map_err(|e| CliError::Io(format!("{e}")))?;
            writeln!(out, "skip  cg-residual: chiral tubes only")
                .map_err(|e| CliError::Io(format!("{e}")))?;
        }
        Err(e) => return Err(CliError::BadInput(format!("{e}"))),
    }
    report("spectrum-symmetry", spectrum_symmetry(&mut rng, trials), out)?;
    report("spectrum-eigen", spectrum_eigen(&cd, &mut rng, trials), out)?;

    if all_ok {
        Ok(())
    } else {
        Err(CliError::VerifyFailure)
    }
}

fn random_point(rng: &mut ChaCha8Rng, r: i64) -> LatticePoint {
    let v0 = rng.random_range(-r..=r);
    let v1 = rng.random_range(-r..=r);
    let s = rng.random_range(0..=1i64);
    LatticePoint::new(v0, v1, s - v0 - v1).unwrap()
}

fn random_translation(rng: &mut ChaCha8Rng, r: i64) -> TranslationVector {
    let u0 = rng.random_range(-r..=r);
    let u1 = rng.random_range(-r..=r);
    TranslationVector::new(u0, u1, -u0 - u1).unwrap()
}

/// Random chirality with all components in `[-bound, bound]`, any class.
fn random_chirality(rng: &mut ChaCha8Rng, bound: i64) -> ChiralityData {
    loop {
        let c = random_translation(rng, bound);
        if c.is_zero() || c.coords().iter().any(|x| x.abs() > bound) {
            continue;
        }
        return analyze(&c).unwrap();
    }
}

pub fn random_chiral(rng: &mut ChaCha8Rng, bound: i64) -> ChiralityData {
    loop {
        let cd = random_chirality(rng, bound);
        if cd.tube_class == TubeClass::Chiral {
            return cd;
        }
    }
}

fn random_zero_sum_k(rng: &mut ChaCha8Rng, scale: f64) -> KVector {
    let a = rng.random_range(-scale..scale);
    let b = rng.random_range(-scale..scale);
    KVector::new(a, b, -(a + b)).unwrap()
}

/// Random point of an allowed line, avoiding the seven special points.
pub fn random_line_k(cd: &ChiralityData, rng: &mut ChaCha8Rng) -> KVector {
    let lines = allowed_lines(cd);
    loop {
        let line = &lines[rng.random_range(0..lines.len())];
        let frac = rng.random_range(0.0..1.0);
        let k = line.k_at(line.param_min + frac * (line.param_max - line.param_min));
        if !is_lambda_point(&k) {
            return k;
        }
    }
}

fn lattice_metric(rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    for _ in 0..trials {
        let x = random_point(rng, 50);
        let y = random_point(rng, 50);
        let z = random_point(rng, 50);
        if x.distance(&y) != y.distance(&x) {
            return Err(format!("symmetry broken at {x:?}, {y:?}"));
        }
        if x.distance(&z) > x.distance(&y) + y.distance(&z) {
            return Err(format!("triangle inequality broken at {x:?}, {y:?}, {z:?}"));
        }
        for g in honeycomb_generators() {
            if g.apply(&x).distance(&g.apply(&y)) != x.distance(&y) {
                return Err(format!("{g:?} is not an isometry at {x:?}, {y:?}"));
            }
        }
        for nb in x.nearest_neighbors() {
            if x.distance(&nb) != 1 {
                return Err(format!("neighbor {nb:?} of {x:?} not at distance 1"));
            }
        }
    }
    Ok(())
}

fn geometry_inner(rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    let b = periodicity_vectors();
    for _ in 0..trials {
        let u = random_translation(rng, 100);
        let v = random_translation(rng, 100);
        let lhs = inner(&u, &v);
        let eu = embed(u.coords());
        let ev = embed(v.coords());
        let rhs = FRAME_A * FRAME_A * eu.dot(&ev);
        if (lhs - rhs).abs() > 1e-9 * (1.0 + lhs.abs()) {
            return Err(format!("inner({u:?}, {v:?}) = {lhs} but embedding dot gives {rhs}"));
        }
        for (i, bi) in b.iter().enumerate() {
            let p = pairing(bi, u.coords());
            let expect = 2.0 * std::f64::consts::PI * u.coords()[i] as f64;
            if (p - expect).abs() > 1e-9 * (1.0 + expect.abs()) {
                return Err(format!("pairing(b{i}, {u:?}) = {p}, expected {expect}"));
            }
        }
    }
    Ok(())
}

fn chirality_chain(rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    for _ in 0..trials {
        let cd = random_chiral(rng, 200);
        let c = cd.c.coords();
        let diff_mod3 = (cd.c_tilde.coords()[2] - cd.c_tilde.coords()[1]).rem_euclid(3);
        let expect_r = if diff_mod3 == 0 { 3 * cd.n } else { cd.n };
        if cd.r != expect_r {
            return Err(format!("R = {} for c = {c:?}, expected {expect_r}", cd.r));
        }
        if cd.q % cd.n != 0 {
            return Err(format!("q = {} not a multiple of n = {} for c = {c:?}", cd.q, cd.n));
        }
        // q w - n t must be an integer multiple of c
        let lhs = cd.w.scaled(cd.q).sub(&cd.t.scaled(cd.n));
        let ratio = lhs.coords()[0] / c[0];
        if lhs.coords() != cd.c.scaled(ratio).coords() {
            return Err(format!("q w - n t = {lhs:?} is not in Zc for c = {c:?}"));
        }
        // R^2 |t|^2 = 3 |c|^2, exactly
        let t = cd.t.coords();
        let r2t2: i128 = (cd.r as i128).pow(2) * t.iter().map(|x| (*x as i128).pow(2)).sum::<i128>();
        let c2: i128 = 3 * c.iter().map(|x| (*x as i128).pow(2)).sum::<i128>();
        if r2t2 != c2 {
            return Err(format!("R^2 |t|^2 = {r2t2} but 3 |c|^2 = {c2} for c = {c:?}"));
        }
    }
    Ok(())
}

fn factor_space(cd: &ChiralityData, rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    for _ in 0..trials {
        let v = random_point(rng, 60);
        let j = rng.random_range(-5..=5);
        let shifted = v.translate(&cd.c.scaled(j));
        if !same_class(&v, &shifted, cd) {
            return Err(format!("{v:?} and {shifted:?} should share a class"));
        }
        if canonicalize(&v, cd) != canonicalize(&shifted, cd) {
            return Err(format!("canonical forms of {v:?} and {shifted:?} differ"));
        }
        let wc = word_coords(&v, cd);
        let shift = cd
            .w
            .scaled(wc.s)
            .add(&cd.c_tilde.scaled(wc.m))
            .add(&cd.c.scaled(wc.j));
        let rebuilt = LatticePoint::new(wc.p, 0, 0).unwrap().translate(&shift);
        if rebuilt != v {
            return Err(format!("word coordinates {wc:?} do not rebuild {v:?}"));
        }
    }
    Ok(())
}

fn symgroup_relations(
    group: &SymGroup<'_>,
    rng: &mut ChaCha8Rng,
    trials: u64,
) -> Result<(), String> {
    let cd = group.chirality();
    let e = group.identity();
    for _ in 0..trials {
        let g = group.word(
            rng.random_range(-20..=20),
            rng.random_range(0..cd.n),
            rng.random_range(0..=1),
        );
        let h = group.word(
            rng.random_range(-20..=20),
            rng.random_range(0..cd.n),
            rng.random_range(0..=1),
        );
        let x = canonicalize(&random_point(rng, 40), cd);
        let gh = group.compose(&g, &h).unwrap();
        let lhs = group.act(&gh, &x).unwrap();
        let rhs = group.act(&g, &group.act(&h, &x).unwrap()).unwrap();
        if lhs != rhs {
            return Err(format!("action not a homomorphism at g = {g:?}, h = {h:?}, x = {x:?}"));
        }
        if group.compose(&g, &group.inverse(&g)).unwrap() != e {
            return Err(format!("inverse failed for {g:?}"));
        }
        let orbit = group.orbit_of_origin(&g).unwrap();
        if group.factorize(&orbit).unwrap() != g {
            return Err(format!("factorize(orbit({g:?})) did not round-trip"));
        }
    }
    Ok(())
}

fn spectrum_symmetry(rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    let b = periodicity_vectors();
    for _ in 0..trials {
        let k = random_zero_sum_k(rng, std::f64::consts::PI);
        let e = dispersion(&k);
        if (e - dispersion(&k.neg())).abs() > 1e-12 {
            return Err(format!("E not even at {k:?}"));
        }
        if !(0.0..=3.0 + 1e-12).contains(&e) {
            return Err(format!("E out of [0,3] at {k:?}: {e}"));
        }
        if (e - dispersion_cos(&k)).abs() > 1e-12 {
            return Err(format!("modulus and cosine forms disagree at {k:?}"));
        }
        for bi in &b {
            if (e - dispersion(&k.add(bi))).abs() > 1e-12 {
                return Err(format!("E not periodic at {k:?} + {bi:?}"));
            }
        }
    }
    Ok(())
}

fn spectrum_eigen(cd: &ChiralityData, rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    for _ in 0..trials {
        let k = random_line_k(cd, rng);
        let e = dispersion(&k);
        let sign = if rng.random_range(0..=1) == 0 {
            BandSign::Plus
        } else {
            BandSign::Minus
        };
        let wf = WaveFunction::new(k, sign, cd).map_err(|err| format!("{err:?}"))?;
        let v = random_point(rng, 20);
        let hv = apply_hamiltonian(|u| wf.value(u), &v);
        let target = match sign {
            BandSign::Plus => e,
            BandSign::Minus => -e,
        };
        let residual = (hv - wf.value(&v) * target).norm();
        if residual > 1e-11 {
            return Err(format!("eigen-equation residual {residual} at k = {k:?}, v = {v:?}"));
        }
    }
    Ok(())
}

fn reps_relations(cd: &ChiralityData, rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    for _ in 0..trials {
        let k = random_line_k(cd, rng);
        let mats = rep_matrices(&k, cd).map_err(|e| format!("{e}"))?;
        let [rho, sigma, tau] = &mats;
        let id = Mat2::identity();
        let mut rho_n = id;
        for _ in 0..cd.n {
            rho_n = rho_n.mul(rho);
        }
        let st = sigma.mul(tau);
        let rt = rho.mul(tau);
        let residual = [
            rho_n.sub(&id).max_abs(),
            tau.mul(tau).sub(&id).max_abs(),
            st.mul(&st).sub(&id).max_abs(),
            rt.mul(&rt).sub(&id).max_abs(),
            rho.mul(sigma).sub(&sigma.mul(rho)).max_abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        if residual > 1e-12 {
            return Err(format!("presentation residual {residual} at k = {k:?}"));
        }
        let cls = classify(&k, cd).map_err(|e| format!("{e}"))?;
        let dim = commutant_dimension(&mats);
        let phase_reducible = matches!(cls.kind, RepKind::ReduciblePair { .. });
        if phase_reducible != (dim > 1) {
            return Err(format!(
                "phase criterion ({phase_reducible}) and commutant dimension ({dim}) disagree at {k:?}"
            ));
        }
    }
    Ok(())
}

fn cg_residual(cd: &ChiralityData, rng: &mut ChaCha8Rng, trials: u64) -> Result<(), String> {
    let mut done = 0;
    let mut attempts = 0;
    while done < trials && attempts < trials * 400 {
        attempts += 1;
        let k = random_line_k(cd, rng);
        let kp = random_line_k(cd, rng);
        match clebsch_gordan(&k, &kp, cd) {
            Ok(dec) => {
                if dec.residual > 1e-12 {
                    return Err(format!(
                        "block-diagonalization residual {} at k = {k:?}, k' = {kp:?}",
                        dec.residual
                    ));
                }
                done += 1;
            }
            Err(_) => continue,
        }
    }
    if done == 0 {
        return Err("no valid tensor-product pair found".into());
    }
    Ok(())
}
