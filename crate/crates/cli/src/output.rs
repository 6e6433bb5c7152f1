//! Shared output plumbing: input parsing and the serializable records.

use cnt_core::geometry::{KVector, GEOM_TOL};
use cnt_core::lattice::TranslationVector;
use cnt_core::nanotube::{analyze, ChiralityData, TubeClass};
use cnt_core::reps::Mat2;
use serde::Serialize;

use crate::{CSpec, CliError};

pub const FORMAT_VERSION: &str = "1";

/// Largest accepted |c_i|; keeps every derived integer inside i64.
pub const MAX_COMPONENT: i64 = 1_000_000;

fn parse_triple<T: std::str::FromStr>(s: &str, what: &str) -> Result<[T; 3], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::BadInput(format!(
            "{what} must be three comma-separated values, got `{s}`"
        )));
    }
    let mut out: Vec<T> = Vec::with_capacity(3);
    for p in &parts {
        out.push(p.parse().map_err(|_| {
            CliError::BadInput(format!("could not parse `{p}` in {what} `{s}`"))
        })?);
    }
    Ok(out.try_into().map_err(|_| unreachable!()).unwrap())
}

fn parse_pair(s: &str, what: &str) -> Result<[i64; 2], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(CliError::BadInput(format!(
            "{what} must be two comma-separated integers, got `{s}`"
        )));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| CliError::BadInput(format!("could not parse `{}`", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| CliError::BadInput(format!("could not parse `{}`", parts[1])))?;
    Ok([a, b])
}

/// Resolves a chirality spec (triple or two-axes pair) to analyzed data.
pub fn resolve_chirality(spec: &CSpec) -> Result<ChiralityData, CliError> {
    let c = match (&spec.c, &spec.hamada) {
        (Some(_), Some(_)) => {
            return Err(CliError::BadInput(
                "give either --c or --hamada, not both".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::BadInput(
                "a chirality is required: --c c0,c1,c2 or --hamada n1,n2".into(),
            ))
        }
        (Some(s), None) => {
            let [c0, c1, c2] = parse_triple::<i64>(s, "--c")?;
            TranslationVector::new(c0, c1, c2).map_err(|_| {
                CliError::BadInput(format!(
                    "--c coordinates must sum to zero, got {c0},{c1},{c2}"
                ))
            })?
        }
        (None, Some(s)) => {
            let [n1, n2] = parse_pair(s, "--hamada")?;
            TranslationVector::new(n1 + n2, -n2, -n1)
                .expect("the two-axes map lands on zero-sum triples")
        }
    };
    if c.coords().iter().any(|x| x.abs() > MAX_COMPONENT) {
        return Err(CliError::BadInput(format!(
            "chirality components must satisfy |c_i| <= {MAX_COMPONENT}"
        )));
    }
    analyze(&c).map_err(|e| CliError::BadInput(format!("invalid chirality: {e}")))
}

/// Parses a raw `k0,k1,k2` triple, recentering tiny coordinate-sum noise.
pub fn parse_k(s: &str, what: &str) -> Result<KVector, CliError> {
    let [k0, k1, k2] = parse_triple::<f64>(s, what)?;
    let sum = k0 + k1 + k2;
    if sum.abs() > 1e-6 {
        return Err(CliError::BadInput(format!(
            "{what} coordinates must sum to zero (sum = {sum})"
        )));
    }
    let shift = sum / 3.0;
    KVector::new(k0 - shift, k1 - shift, k2 - shift)
        .map_err(|_| CliError::BadInput(format!("{what} is not a reciprocal-plane vector")))
}

pub fn class_name(class: TubeClass) -> &'static str {
    match class {
        TubeClass::Armchair => "armchair",
        TubeClass::Zigzag => "zigzag",
        TubeClass::Chiral => "chiral",
    }
}

#[derive(Debug, Serialize)]
pub struct ChiralityJson {
    pub input: [i64; 3],
    pub c: [i64; 3],
    pub permutation: [usize; 3],
    pub negated: bool,
    pub n: i64,
    pub c_tilde: [i64; 3],
    pub t: [i64; 3],
    pub w: [i64; 3],
    pub r: i64,
    pub q: i64,
    pub q_tilde: i64,
    pub class: &'static str,
}

impl ChiralityJson {
    pub fn from_data(cd: &ChiralityData) -> Self {
        ChiralityJson {
            input: cd.input_c.coords(),
            c: cd.c.coords(),
            permutation: cd.normalization.permutation,
            negated: cd.normalization.negated,
            n: cd.n,
            c_tilde: cd.c_tilde.coords(),
            t: cd.t.coords(),
            w: cd.w.coords(),
            r: cd.r,
            q: cd.q,
            q_tilde: cd.q_tilde,
            class: class_name(cd.tube_class),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputRecord<T: Serialize> {
    pub version: &'static str,
    pub command: &'static str,
    pub chirality: ChiralityJson,
    pub payload: T,
}

impl<T: Serialize> OutputRecord<T> {
    pub fn new(command: &'static str, cd: &ChiralityData, payload: T) -> Self {
        OutputRecord {
            version: FORMAT_VERSION,
            command,
            chirality: ChiralityJson::from_data(cd),
            payload,
        }
    }

    pub fn write_json(&self, out: &mut dyn std::io::Write) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *out, self)
            .map_err(|e| CliError::Io(format!("writing JSON: {e}")))?;
        writeln!(out).map_err(|e| CliError::Io(format!("writing JSON: {e}")))
    }
}

/// Complex number as a `[re, im]` pair for serialization.
pub fn cplx(z: num_complex::Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// 2x2 matrix as nested `[re, im]` pairs.
pub fn mat2(m: &Mat2) -> [[[f64; 2]; 2]; 2] {
    [
        [cplx(m.0[0][0]), cplx(m.0[0][1])],
        [cplx(m.0[1][0]), cplx(m.0[1][1])],
    ]
}

pub fn kv(k: &KVector) -> [f64; 3] {
    k.coords()
}

/// `true` when `k` is within tolerance of the zero vector.
pub fn is_zero_k(k: &KVector) -> bool {
    k.coords().iter().all(|x| x.abs() < GEOM_TOL)
}
