//! The describe / bands / reps / cg command implementations.

use std::io::Write;

use cnt_core::geometry::{inner, KVector};
use cnt_core::nanotube::{ChiralityData, TubeClass};
use cnt_core::reps::{
    classify, clebsch_gordan, commutant_dimension, rep_matrices, Mat2, RepKind, RepsError,
};
use cnt_core::spectrum::{allowed_lines, is_metallic, sample_bands, BandSample};
use serde::Serialize;

use crate::output::{
    class_name, cplx, kv, mat2, parse_k, resolve_chirality, ChiralityJson, OutputRecord,
};
use crate::{CSpec, CliError, Format, KSpec};

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io(format!("{e}"))
}

// ---------------------------------------------------------------- describe

#[derive(Debug, Serialize)]
struct DescribePayload {
    circumference: f64,
    line_count: usize,
    metallic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    warning: Option<String>,
}

pub fn describe(
    cspec: &CSpec,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cd = resolve_chirality(cspec)?;
    let payload = DescribePayload {
        circumference: inner(&cd.c, &cd.c).sqrt(),
        line_count: allowed_lines(&cd).len(),
        metallic: is_metallic(&cd),
        warning: (cd.tube_class != TubeClass::Chiral).then(|| {
            format!(
                "{} tube: symmetry-group operations are unavailable",
                class_name(cd.tube_class)
            )
        }),
    };
    match format {
        Format::Json => OutputRecord::new("describe", &cd, payload).write_json(out),
        Format::Csv => {
            let ch = ChiralityJson::from_data(&cd);
            let mut w = csv_writer(out);
            w(&["key", "value"])?;
            w(&["input", &fmt_triple(ch.input)])?;
            w(&["c", &fmt_triple(ch.c)])?;
            w(&["n", &ch.n.to_string()])?;
            w(&["c_tilde", &fmt_triple(ch.c_tilde)])?;
            w(&["t", &fmt_triple(ch.t)])?;
            w(&["w", &fmt_triple(ch.w)])?;
            w(&["R", &ch.r.to_string()])?;
            w(&["q", &ch.q.to_string()])?;
            w(&["q_tilde", &ch.q_tilde.to_string()])?;
            w(&["class", ch.class])?;
            w(&["circumference", &payload.circumference.to_string()])?;
            w(&["line_count", &payload.line_count.to_string()])?;
            w(&["metallic", &payload.metallic.to_string()])?;
            if let Some(warn) = &payload.warning {
                w(&["warning", warn])?;
            }
            Ok(())
        }
        Format::Text => {
            let ch = ChiralityJson::from_data(&cd);
            writeln!(out, "chirality      c = {:?} (input {:?})", ch.c, ch.input).map_err(io_err)?;
            writeln!(out, "class          {}", ch.class).map_err(io_err)?;
            writeln!(out, "n              {}", ch.n).map_err(io_err)?;
            writeln!(out, "c~             {:?}", ch.c_tilde).map_err(io_err)?;
            writeln!(out, "t              {:?}", ch.t).map_err(io_err)?;
            writeln!(out, "w              {:?}", ch.w).map_err(io_err)?;
            writeln!(out, "R              {}", ch.r).map_err(io_err)?;
            writeln!(out, "q              {}", ch.q).map_err(io_err)?;
            writeln!(out, "q~             {}", ch.q_tilde).map_err(io_err)?;
            writeln!(out, "circumference  {}", payload.circumference).map_err(io_err)?;
            writeln!(out, "allowed lines  {}", payload.line_count).map_err(io_err)?;
            writeln!(out, "metallic       {}", payload.metallic).map_err(io_err)?;
            if let Some(warn) = &payload.warning {
                writeln!(out, "warning        {warn}").map_err(io_err)?;
            }
            Ok(())
        }
    }
}

fn fmt_triple(v: [i64; 3]) -> String {
    format!("({};{};{})", v[0], v[1], v[2])
}

fn csv_writer<'a>(
    out: &'a mut dyn Write,
) -> impl FnMut(&[&str]) -> Result<(), CliError> + 'a {
    move |fields: &[&str]| {
        writeln!(out, "{}", fields.join(",")).map_err(io_err)
    }
}

// ------------------------------------------------------------------- bands

#[derive(Debug, Serialize)]
struct BandRow {
    line: i64,
    param: f64,
    k: [f64; 3],
    e_plus: f64,
    e_minus: f64,
    lambda: f64,
}

#[derive(Debug, Serialize)]
struct BandsPayload {
    kappa: f64,
    samples_per_line: usize,
    rows: Vec<BandRow>,
}

fn band_rows(samples: &[BandSample], kappa: f64) -> Vec<BandRow> {
    samples
        .iter()
        .map(|s| BandRow {
            line: s.line_index,
            param: s.param,
            k: s.k.coords(),
            e_plus: kappa * s.energy_plus,
            e_minus: kappa * s.energy_minus,
            lambda: s.lambda_phase,
        })
        .collect()
}

fn bands_csv(rows: &[BandRow]) -> String {
    let mut s = String::from("line,param,k0,k1,k2,E_plus,E_minus,lambda\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.line, r.param, r.k[0], r.k[1], r.k[2], r.e_plus, r.e_minus, r.lambda
        ));
    }
    s
}

fn gnuplot_script(csv_name: &str) -> String {
    format!(
        "set datafile separator ','\n\
         set key off\n\
         set xlabel 'line parameter'\n\
         set ylabel 'E'\n\
         plot '{csv_name}' every ::1 using 2:6 with points pt 7 ps 0.3, \\\n     \
         '' every ::1 using 2:7 with points pt 7 ps 0.3\n\
         pause -1\n"
    )
}

pub fn bands(
    cspec: &CSpec,
    samples: usize,
    kappa: f64,
    format: Format,
    path: Option<&std::path::Path>,
    gnuplot: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cd = resolve_chirality(cspec)?;
    if samples < 2 {
        return Err(CliError::BadInput(format!(
            "--samples must be at least 2, got {samples}"
        )));
    }
    if gnuplot && path.is_none() {
        return Err(CliError::BadInput(
            "--gnuplot needs --out so the script can name the CSV file".into(),
        ));
    }
    let rows = band_rows(&sample_bands(&cd, samples), kappa);

    let body = match format {
        Format::Json => {
            let record = OutputRecord::new(
                "bands",
                &cd,
                BandsPayload {
                    kappa,
                    samples_per_line: samples,
                    rows,
                },
            );
            let mut buf = Vec::new();
            record.write_json(&mut buf)?;
            buf
        }
        Format::Csv | Format::Text => bands_csv(&rows).into_bytes(),
    };

    match path {
        Some(p) => {
            std::fs::write(p, &body)
                .map_err(|e| CliError::Io(format!("writing {}: {e}", p.display())))?;
            if gnuplot {
                let gp = p.with_extension("gp");
                let csv_name = p
                    .file_name()
                    .map(|n| n.to_string_lossy().into_owned())
                    .unwrap_or_else(|| p.display().to_string());
                std::fs::write(&gp, gnuplot_script(&csv_name))
                    .map_err(|e| CliError::Io(format!("writing {}: {e}", gp.display())))?;
            }
            Ok(())
        }
        None => out.write_all(&body).map_err(io_err),
    }
}

// -------------------------------------------------------------------- reps

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum RepsPayloadKind {
    /// One-dimensional character table at a special point.
    OneDimensional {
        rho: [f64; 2],
        sigma: [f64; 2],
        tau: [f64; 2],
    },
    Reducible {
        m: i64,
        p: i64,
        characters: [[i64; 3]; 2],
        projectors: [[[[f64; 2]; 2]; 2]; 2],
        phase_distances: [f64; 2],
    },
    Irreducible {
        phase_distances: [f64; 2],
        commutant_dimension: usize,
    },
}

#[derive(Debug, Serialize)]
struct RepsPayload {
    k: [f64; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    matrices: Option<RepMatrices>,
    #[serde(flatten)]
    kind: RepsPayloadKind,
}

#[derive(Debug, Serialize)]
struct RepMatrices {
    rho: [[[f64; 2]; 2]; 2],
    sigma: [[[f64; 2]; 2]; 2],
    tau: [[[f64; 2]; 2]; 2],
    unitarity_residual: f64,
    relation_residual: f64,
}

fn relation_residual(mats: &[Mat2; 3]) -> f64 {
    let [rho, sigma, tau] = mats;
    let id = Mat2::identity();
    let st = sigma.mul(tau);
    let rt = rho.mul(tau);
    [
        tau.mul(tau).sub(&id).max_abs(),
        st.mul(&st).sub(&id).max_abs(),
        rt.mul(&rt).sub(&id).max_abs(),
        rho.mul(sigma).sub(&sigma.mul(rho)).max_abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

fn resolve_k(kspec: &KSpec, cd: &ChiralityData) -> Result<KVector, CliError> {
    match (&kspec.k, kspec.line, kspec.param) {
        (Some(s), None, None) => parse_k(s, "--k"),
        (None, Some(line), Some(param)) => {
            let lines = allowed_lines(cd);
            let l = lines.iter().find(|l| l.index == line).ok_or_else(|| {
                CliError::BadInput(format!(
                    "line index {line} is outside the allowed range for this tube"
                ))
            })?;
            if param < l.param_min - 1e-12 || param > l.param_max + 1e-12 {
                return Err(CliError::BadInput(format!(
                    "param {param} outside [{}, {}] for line {line}",
                    l.param_min, l.param_max
                )));
            }
            Ok(l.k_at(param))
        }
        _ => Err(CliError::BadInput(
            "give either --k k0,k1,k2 or both --line and --param".into(),
        )),
    }
}

pub fn reps(
    cspec: &CSpec,
    kspec: &KSpec,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cd = resolve_chirality(cspec)?;
    let k = resolve_k(kspec, &cd)?;
    let cls = classify(&k, &cd).map_err(|e| CliError::BadInput(format!("{e}")))?;

    let (matrices, kind) = match cls.kind {
        RepKind::OneDimensionalPair { rho, sigma, tau } => (
            None,
            RepsPayloadKind::OneDimensional {
                rho: cplx(rho),
                sigma: cplx(sigma),
                tau: cplx(tau),
            },
        ),
        ref other => {
            let mats = rep_matrices(&k, &cd)
                .map_err(|e| CliError::BadInput(format!("{e}")))?;
            let matrices = RepMatrices {
                rho: mat2(&mats[0]),
                sigma: mat2(&mats[1]),
                tau: mat2(&mats[2]),
                unitarity_residual: mats
                    .iter()
                    .map(Mat2::unitarity_defect)
                    .fold(0.0, f64::max),
                relation_residual: relation_residual(&mats),
            };
            let kind = match other {
                RepKind::ReduciblePair {
                    m,
                    p,
                    projectors,
                    distances,
                } => RepsPayloadKind::Reducible {
                    m: *m,
                    p: *p,
                    // characters of rho, sigma, tau on the two lines
                    characters: [
                        [pow_sign(*m), pow_sign(*p), 1],
                        [pow_sign(*m), pow_sign(*p), -1],
                    ],
                    projectors: [mat2(&projectors[0]), mat2(&projectors[1])],
                    phase_distances: *distances,
                },
                RepKind::Irreducible2d { distances } => RepsPayloadKind::Irreducible {
                    phase_distances: *distances,
                    commutant_dimension: commutant_dimension(&mats),
                },
                RepKind::OneDimensionalPair { .. } => unreachable!(),
            };
            (Some(matrices), kind)
        }
    };

    let payload = RepsPayload {
        k: kv(&k),
        matrices,
        kind,
    };
    match format {
        Format::Json | Format::Csv => OutputRecord::new("reps", &cd, payload).write_json(out),
        Format::Text => {
            writeln!(out, "k = {:?}", payload.k).map_err(io_err)?;
            if let Some(m) = &payload.matrices {
                for (name, mm) in [("rho", &m.rho), ("sigma", &m.sigma), ("tau", &m.tau)] {
                    writeln!(out, "{name}:").map_err(io_err)?;
                    for row in mm {
                        writeln!(
                            out,
                            "  [{:+.6}{:+.6}i  {:+.6}{:+.6}i]",
                            row[0][0], row[0][1], row[1][0], row[1][1]
                        )
                        .map_err(io_err)?;
                    }
                }
                writeln!(out, "unitarity residual {}", m.unitarity_residual).map_err(io_err)?;
                writeln!(out, "relation residual  {}", m.relation_residual).map_err(io_err)?;
            }
            match &payload.kind {
                RepsPayloadKind::OneDimensional { rho, sigma, tau } => {
                    writeln!(out, "one-dimensional point; characters:").map_err(io_err)?;
                    writeln!(out, "  rho   {:+.6}{:+.6}i", rho[0], rho[1]).map_err(io_err)?;
                    writeln!(out, "  sigma {:+.6}{:+.6}i", sigma[0], sigma[1]).map_err(io_err)?;
                    writeln!(out, "  tau   {:+.6}{:+.6}i", tau[0], tau[1]).map_err(io_err)?;
                }
                RepsPayloadKind::Reducible { m, p, characters, .. } => {
                    writeln!(out, "reducible: m = {m}, p = {p}").map_err(io_err)?;
                    writeln!(out, "characters (rho, sigma, tau): {characters:?}")
                        .map_err(io_err)?;
                }
                RepsPayloadKind::Irreducible {
                    phase_distances,
                    commutant_dimension,
                } => {
                    writeln!(
                        out,
                        "irreducible (phase distances {:?}, commutant dim {})",
                        phase_distances, commutant_dimension
                    )
                    .map_err(io_err)?;
                }
            }
            Ok(())
        }
    }
}

fn pow_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------- cg

#[derive(Debug, Serialize)]
struct CgPayload {
    k: [f64; 3],
    k_prime: [f64; 3],
    k_plus: [f64; 3],
    k_minus: [f64; 3],
    /// Periodicity-vector multiples subtracted to land in the hexagon.
    k_plus_reduction: [i64; 2],
    k_minus_reduction: [i64; 2],
    matrix: [[f64; 4]; 4],
    coefficients: Vec<CgCoefficientJson>,
    residual: f64,
}

#[derive(Debug, Serialize)]
struct CgCoefficientJson {
    label: String,
    value: f64,
}

pub fn cg(
    cspec: &CSpec,
    k_str: &str,
    kprime_str: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let cd = resolve_chirality(cspec)?;
    let k = parse_k(k_str, "--k")?;
    let kp = parse_k(kprime_str, "--kprime")?;
    let dec = clebsch_gordan(&k, &kp, &cd).map_err(|e| match e {
        RepsError::CgPrecondition { .. } | RepsError::NotIrreducible { .. } => {
            CliError::CgPrecondition(format!("{e}"))
        }
        other => CliError::BadInput(format!("{other}")),
    })?;

    let mut matrix = [[0.0f64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            matrix[i][j] = dec.matrix.0[i][j].re;
        }
    }
    let coefficients = dec
        .coefficients
        .iter()
        .map(|c| CgCoefficientJson {
            label: format!(
                "(kk'{}{}|k{}{})",
                c.product_index.0,
                c.product_index.1,
                if c.block > 0 { "+" } else { "-" },
                c.component
            ),
            value: 1.0,
        })
        .collect();
    let payload = CgPayload {
        k: kv(&dec.k),
        k_prime: kv(&dec.k_prime),
        k_plus: kv(&dec.k_plus),
        k_minus: kv(&dec.k_minus),
        k_plus_reduction: [dec.k_plus_reduction.b0, dec.k_plus_reduction.b1],
        k_minus_reduction: [dec.k_minus_reduction.b0, dec.k_minus_reduction.b1],
        matrix,
        coefficients,
        residual: dec.residual,
    };
    match format {
        Format::Json | Format::Csv => OutputRecord::new("cg", &cd, payload).write_json(out),
        Format::Text => {
            writeln!(out, "k  = {:?}", payload.k).map_err(io_err)?;
            writeln!(out, "k' = {:?}", payload.k_prime).map_err(io_err)?;
            writeln!(
                out,
                "k+ = {:?} (reduced by b0*{} + b1*{})",
                payload.k_plus, payload.k_plus_reduction[0], payload.k_plus_reduction[1]
            )
            .map_err(io_err)?;
            writeln!(
                out,
                "k- = {:?} (reduced by b0*{} + b1*{})",
                payload.k_minus, payload.k_minus_reduction[0], payload.k_minus_reduction[1]
            )
            .map_err(io_err)?;
            writeln!(out, "M:").map_err(io_err)?;
            for row in &payload.matrix {
                writeln!(out, "  {row:?}").map_err(io_err)?;
            }
            for c in &payload.coefficients {
                writeln!(out, "{} = {}", c.label, c.value).map_err(io_err)?;
            }
            writeln!(out, "block-diagonalization residual {}", payload.residual)
                .map_err(io_err)?;
            Ok(())
        }
    }
}
