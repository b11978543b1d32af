//! Command line front end: parses `.kv` inputs, dispatches the subcommands
//! and renders text or JSON reports.
//!
//! Exit codes: 0 for a decided run, 2 when a verdict comes back Unknown at
//! the searched bound (so pipelines can tell "not decided at this kmax"
//! from failure), 1 for errors of any kind.

mod parse;
mod report;

use clap::{Parser, Subcommand};
use khovanskii::{
    CombinedVerdict, CurveAlgebra, FgVerdict, GenusClass, HkfVerdict, KfVerdict, LocusConstraint,
    MultigradedAlgebra, PointP1,
};
use parse::{parse_document, parse_point, parse_ray, parse_tau, InputDocument};
use report::{LocusReport, PerRayReport, RayCurveReport, Report, RootReport, SliceReport};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "khovanskii",
    version,
    about = "Value semigroups and Khovanskii-finiteness of graded valuations, in exact arithmetic"
)]
struct Cli {
    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions of the power spaces L^k of a curve input
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// Degree, genus, stabilization level and genus classification
    Invariants {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// Value semigroup slices, minimal generators and finite-generation verdict
    Semigroup {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        /// Point of the projective line as 'a,b' (rational entries)
        #[arg(long, conflicts_with = "t")]
        point: Option<String>,
        /// Valuation point of the function field: a rational or 'inf'
        #[arg(long)]
        t: Option<String>,
    },
    /// Khovanskii-finiteness membership test at a point
    KfTest {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, conflicts_with = "t")]
        point: Option<String>,
        #[arg(long)]
        t: Option<String>,
    },
    /// The locus form cutting out the finiteness points at one level
    KfLocus {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Extreme rays of the weight cone of a multigraded input
    Rays { file: PathBuf },
    /// Homogenized curve of one weight-cone ray (by index)
    RayCurve {
        file: PathBuf,
        #[arg(long)]
        ray: usize,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// Per-ray finiteness of a multigraded algebra at the valuation of tau
    Kf {
        file: PathBuf,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        /// Additional rational ray of the weight cone, as 'a,b,...' (repeatable)
        #[arg(long = "extra-ray")]
        extra_ray: Vec<String>,
    },
    /// Homogeneous Khovanskii-finiteness report over all weight-cone rays
    Hkf {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
}

struct Outcome {
    text: String,
    report: Report,
    exit: u8,
}

fn load_curve(file: &PathBuf) -> Result<(CurveAlgebra, String), String> {
    let name = file.display().to_string();
    let text = std::fs::read_to_string(file).map_err(|e| format!("{name}: {e}"))?;
    match parse_document(&text).map_err(|e| format!("{name}: {e}"))? {
        InputDocument::Curve(c) => Ok((c, name)),
        InputDocument::Multigraded(_) => Err(format!(
            "{name}: this subcommand expects a curve block; use rays/ray-curve/kf/hkf for multigraded input"
        )),
    }
}

fn load_multigraded(file: &PathBuf) -> Result<(MultigradedAlgebra, String), String> {
    let name = file.display().to_string();
    let text = std::fs::read_to_string(file).map_err(|e| format!("{name}: {e}"))?;
    match parse_document(&text).map_err(|e| format!("{name}: {e}"))? {
        InputDocument::Multigraded(a) => Ok((a, name)),
        InputDocument::Curve(_) => Err(format!(
            "{name}: this subcommand expects a multigraded block"
        )),
    }
}

fn resolve_point(point: &Option<String>, t: &Option<String>) -> Result<(PointP1, String), String> {
    match (point, t) {
        (Some(p), None) => {
            let q = parse_point(p)?;
            let label = q.to_string();
            Ok((q, label))
        }
        (None, Some(tau_text)) => {
            let tau = parse_tau(tau_text)?;
            let q = tau.point();
            let label = format!("{q} (t = {tau})");
            Ok((q, label))
        }
        _ => Err("choose a point with exactly one of --point a,b or --t tau".into()),
    }
}

fn kf_verdict_fields(v: &KfVerdict, report: &mut Report, text: &mut String) -> u8 {
    match v {
        KfVerdict::Finite { witness_k } => {
            report.verdict = Some("Finite".into());
            report.witness_k = Some(*witness_k);
            let _ = writeln!(text, "verdict: Finite, witness k={witness_k}");
            0
        }
        KfVerdict::Unknown { kmax_searched } => {
            report.verdict = Some("Unknown".into());
            let _ = writeln!(text, "verdict: Unknown at kmax={kmax_searched}");
            2
        }
        KfVerdict::Unsupported { reason } => {
            report.verdict = Some("Unsupported".into());
            report.unsupported_reason = Some(reason.clone());
            let _ = writeln!(text, "verdict: Unsupported ({reason})");
            0
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Hilbert { file, kmax } => {
            let (curve, name) = load_curve(file)?;
            let dims = curve.hilbert(*kmax);
            let mut report = Report::new("hilbert", &name);
            report.kmax = Some(*kmax);
            let mut text = String::new();
            let _ = writeln!(
                text,
                "dim L^k for k = 0..={kmax}: {}",
                dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
            );
            report.dims = Some(dims);
            Ok(Outcome { text, report, exit: 0 })
        }

        Command::Invariants { file, kmax } => {
            if *kmax < 3 {
                return Err("invariants need --kmax at least 3".into());
            }
            let (curve, name) = load_curve(file)?;
            let inv = curve.invariants(*kmax).map_err(|e| e.to_string())?;
            let class = curve.genus_classification(*kmax).map_err(|e| e.to_string())?;
            let mut report = Report::new("invariants", &name);
            report.kmax = Some(*kmax);
            report.degree = Some(inv.degree);
            report.genus = Some(inv.genus);
            report.stabilization_k = Some(inv.stabilization_k);
            let class_name = match class {
                GenusClass::HomogeneouslyKf => "HomogeneouslyKF",
                GenusClass::SomeKfValuationExists => "SomeKfValuationExists",
                GenusClass::NoGuarantee { .. } => "NoGuarantee",
            };
            report.classification = Some(class_name.into());
            let text = format!(
                "degree {}, genus {}, stabilized from k = {}\nclassification: {}\n",
                inv.degree, inv.genus, inv.stabilization_k, class_name
            );
            Ok(Outcome { text, report, exit: 0 })
        }

        Command::Semigroup { file, kmax, point, t } => {
            if *kmax < 3 {
                return Err("semigroup needs --kmax at least 3".into());
            }
            let (curve, name) = load_curve(file)?;
            let (q, q_label) = resolve_point(point, t)?;
            let inv = curve.invariants(*kmax).map_err(|e| e.to_string())?;
            let sample = curve.value_semigroup(&q, *kmax).with_degree_hint(inv.degree);
            let gens = sample.minimal_generators();
            let verdict = sample.fg_verdict(inv.degree);
            let (lo, hi) = sample.segment_estimate();

            let mut report = Report::new("semigroup", &name);
            report.kmax = Some(*kmax);
            report.point = Some(q.to_string());
            report.degree = Some(inv.degree);
            report.slices = Some(
                (1..=*kmax)
                    .map(|k| SliceReport {
                        k,
                        dim: sample.slice(k).len(),
                        orders: sample.slice(k).to_vec(),
                    })
                    .collect(),
            );
            report.generators = Some(gens.iter().map(|&(k, b)| [k, b]).collect());
            report.segment = Some([lo.to_string(), hi.to_string()]);

            let mut text = String::new();
            let _ = writeln!(text, "value semigroup at {q_label}, levels 1..={kmax}");
            for k in 1..=*kmax {
                let orders: Vec<String> =
                    sample.slice(k).iter().map(|b| b.to_string()).collect();
                let _ = writeln!(text, "  k={k}: {}", orders.join(" "));
            }
            let _ = writeln!(
                text,
                "minimal generators: {}",
                gens.iter()
                    .map(|(k, b)| format!("({k},{b})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            let exit = match &verdict {
                FgVerdict::Finite { zero_ray_witness, degree_ray_witness } => {
                    report.verdict = Some("Finite".into());
                    report.witnesses = Some(vec![
                        [zero_ray_witness.0, zero_ray_witness.1],
                        [degree_ray_witness.0, degree_ray_witness.1],
                    ]);
                    let _ = writeln!(
                        text,
                        "finite generation: Finite, ray witnesses ({},{}) and ({},{})",
                        zero_ray_witness.0, zero_ray_witness.1,
                        degree_ray_witness.0, degree_ray_witness.1
                    );
                    0
                }
                FgVerdict::Unknown { kmax, missing_rays } => {
                    report.verdict = Some("Unknown".into());
                    report.missing_rays =
                        Some(missing_rays.iter().map(|&(a, b)| [a, b]).collect());
                    let dirs: Vec<String> = missing_rays
                        .iter()
                        .map(|(a, b)| format!("({a},{b})"))
                        .collect();
                    let _ = writeln!(
                        text,
                        "finite generation: Unknown at kmax={kmax}, missing ray direction {}",
                        dirs.join(", ")
                    );
                    2
                }
            };
            let _ = writeln!(text, "segment estimate: [{lo}, {hi}]");
            let _ = write!(text, "{}", semigroup_grid(&sample));
            Ok(Outcome { text, report, exit })
        }

        Command::KfTest { file, kmax, point, t } => {
            if *kmax < 3 {
                return Err("kf-test needs --kmax at least 3".into());
            }
            let (curve, name) = load_curve(file)?;
            let (q, q_label) = resolve_point(point, t)?;
            let verdict = curve.kf_test(&q, *kmax).map_err(|e| e.to_string())?;
            let mut report = Report::new("kf-test", &name);
            report.kmax = Some(*kmax);
            report.point = Some(q.to_string());
            let mut text = format!("point: {q_label}\n");
            let exit = kf_verdict_fields(&verdict, &mut report, &mut text);
            Ok(Outcome { text, report, exit })
        }

        Command::KfLocus { file, k } => {
            if *k < 1 {
                return Err("kf-locus needs --k at least 1".into());
            }
            let (curve, name) = load_curve(file)?;
            let locus = curve.kf_locus(*k).map_err(|e| e.to_string())?;
            let mut report = Report::new("kf-locus", &name);
            report.k = Some(*k);
            report.degree = Some(locus.degree);
            let mut text = String::new();
            match &locus.constraint {
                LocusConstraint::EveryPoint => {
                    let _ = writeln!(
                        text,
                        "locus at k={k}: every point passes (L^k is the full space)"
                    );
                    report.locus = Some(LocusReport {
                        constraint: "every-point".into(),
                        roots: Vec::new(),
                        residual_degree: 0,
                    });
                }
                LocusConstraint::Form(g) => {
                    let printed = g.display_with("a", "b");
                    let _ = writeln!(
                        text,
                        "locus at k={k} (degree {}): G(a, b) = {printed}  for Q = (a:b)",
                        locus.degree
                    );
                    if locus.roots.roots.is_empty() {
                        let _ = writeln!(text, "rational roots: none (empty rational locus)");
                    } else {
                        let roots: Vec<String> = locus
                            .roots
                            .roots
                            .iter()
                            .map(|(p, m)| format!("{p} multiplicity {m}"))
                            .collect();
                        let _ = writeln!(text, "rational roots: {}", roots.join(", "));
                    }
                    let _ = writeln!(text, "residual degree: {}", locus.roots.residual_degree);
                    report.locus = Some(LocusReport {
                        constraint: printed,
                        roots: locus
                            .roots
                            .roots
                            .iter()
                            .map(|(p, m)| RootReport {
                                point: p.to_string(),
                                multiplicity: *m,
                            })
                            .collect(),
                        residual_degree: locus.roots.residual_degree,
                    });
                }
            }
            Ok(Outcome { text, report, exit: 0 })
        }

        Command::Rays { file } => {
            let (algebra, name) = load_multigraded(file)?;
            let rays = algebra.weight_cone_rays().rays().to_vec();
            let mut report = Report::new("rays", &name);
            let mut text = String::from("weight cone rays:\n");
            for (i, r) in rays.iter().enumerate() {
                let _ = writeln!(text, "  [{i}] {}", ray_string(r));
            }
            report.rays = Some(rays);
            Ok(Outcome { text, report, exit: 0 })
        }

        Command::RayCurve { file, ray, kmax } => {
            let (algebra, name) = load_multigraded(file)?;
            let rays = algebra.weight_cone_rays().rays().to_vec();
            let chosen = rays.get(*ray).ok_or_else(|| {
                format!(
                    "ray index {} out of range: the weight cone has {} rays (see `rays`)",
                    ray,
                    rays.len()
                )
            })?;
            let data = algebra.ray_curve(chosen, *kmax).map_err(|e| e.to_string())?;
            let basis: Vec<String> = data.curve.base_forms().iter().map(|f| f.to_string()).collect();
            let mut report = Report::new("ray-curve", &name);
            report.kmax = Some(*kmax);
            let mut text = String::new();
            let _ = writeln!(
                text,
                "ray {}: lambda = {}, big degree D = {}",
                ray_string(&data.ray),
                data.lambda,
                data.big_degree
            );
            let _ = writeln!(text, "curve basis: {}", basis.join(", "));
            if let Ok(inv) = data.curve.invariants(*kmax) {
                let _ = writeln!(text, "degree {}, genus {}", inv.degree, inv.genus);
                report.degree = Some(inv.degree);
                report.genus = Some(inv.genus);
            }
            report.ray_curve = Some(RayCurveReport {
                ray: data.ray.clone(),
                lambda: data.lambda,
                big_degree: data.big_degree,
                basis,
            });
            Ok(Outcome { text, report, exit: 0 })
        }

        Command::Kf { file, t, kmax, extra_ray } => {
            if *kmax < 3 {
                return Err("kf needs --kmax at least 3".into());
            }
            let (algebra, name) = load_multigraded(file)?;
            let tau = parse_tau(t)?;
            let extra: Result<Vec<Vec<i64>>, String> =
                extra_ray.iter().map(|r| parse_ray(r)).collect();
            let extra = extra?;
            let kf = algebra
                .multigraded_kf(&tau, *kmax, &extra)
                .map_err(|e| e.to_string())?;
            let mut report = Report::new("kf", &name);
            report.kmax = Some(*kmax);
            report.tau = Some(tau.to_string());
            report.point = Some(tau.point().to_string());
            let mut text = String::new();
            let _ = writeln!(text, "tau = {tau} -> Q = {}", tau.point());
            let mut per_ray = Vec::new();
            for r in &kf.per_ray {
                let line = match &r.verdict {
                    KfVerdict::Finite { witness_k } => format!("Finite, witness k={witness_k}"),
                    KfVerdict::Unknown { kmax_searched } => {
                        format!("Unknown at kmax={kmax_searched}")
                    }
                    KfVerdict::Unsupported { reason } => format!("Unsupported ({reason})"),
                };
                let _ = writeln!(
                    text,
                    "  ray {}: {line} (lambda={}, D={})",
                    ray_string(&r.ray),
                    r.lambda,
                    r.big_degree
                );
                per_ray.push(PerRayReport {
                    ray: r.ray.clone(),
                    lambda: r.lambda,
                    big_degree: Some(r.big_degree),
                    verdict: Some(
                        match &r.verdict {
                            KfVerdict::Finite { .. } => "Finite",
                            KfVerdict::Unknown { .. } => "Unknown",
                            KfVerdict::Unsupported { .. } => "Unsupported",
                        }
                        .into(),
                    ),
                    witness_k: match &r.verdict {
                        KfVerdict::Finite { witness_k } => Some(*witness_k),
                        _ => None,
                    },
                    degree: None,
                    genus: None,
                });
            }
            report.per_ray = Some(per_ray);
            let (combined, exit) = match kf.combined {
                CombinedVerdict::Finite => ("Finite", 0),
                CombinedVerdict::Unknown => ("Unknown", 2),
                CombinedVerdict::Unsupported => ("Unsupported", 0),
            };
            report.verdict = Some(combined.into());
            let _ = writeln!(text, "combined: {combined}");
            for c in &kf.caveats {
                let _ = writeln!(text, "caveat: {c}");
            }
            report.caveats = kf.caveats.clone();
            Ok(Outcome { text, report, exit })
        }

        Command::Hkf { file, kmax } => {
            if *kmax < 3 {
                return Err("hkf needs --kmax at least 3".into());
            }
            let (algebra, name) = load_multigraded(file)?;
            let hkf = algebra.hkf_report(*kmax).map_err(|e| e.to_string())?;
            let mut report = Report::new("hkf", &name);
            report.kmax = Some(*kmax);
            let mut text = String::new();
            let mut per_ray = Vec::new();
            for r in &hkf.per_ray {
                let _ = writeln!(
                    text,
                    "  ray {}: degree {}, genus {} (lambda={})",
                    ray_string(&r.ray),
                    r.degree,
                    r.genus,
                    r.lambda
                );
                per_ray.push(PerRayReport {
                    ray: r.ray.clone(),
                    lambda: r.lambda,
                    big_degree: None,
                    verdict: None,
                    witness_k: None,
                    degree: Some(r.degree),
                    genus: Some(r.genus),
                });
            }
            report.per_ray = Some(per_ray);
            match &hkf.verdict {
                HkfVerdict::HomogeneouslyKf => {
                    report.verdict = Some("HomogeneouslyKF".into());
                    let _ = writeln!(text, "verdict: HomogeneouslyKF");
                }
                HkfVerdict::NotHomogeneouslyKf { offending_ray, genus } => {
                    report.verdict = Some("NotHomogeneouslyKF".into());
                    report.offending_ray = Some(offending_ray.clone());
                    let _ = writeln!(
                        text,
                        "verdict: NotHomogeneouslyKF: ray {} genus {genus}",
                        ray_string(offending_ray)
                    );
                }
            }
            for c in &hkf.caveats {
                let _ = writeln!(text, "caveat: {c}");
            }
            report.caveats = hkf.caveats.clone();
            Ok(Outcome { text, report, exit: 0 })
        }
    }
}

fn ray_string(ray: &[i64]) -> String {
    format!(
        "({})",
        ray.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// Text grid of the sample: order b upward, level k rightward.
fn semigroup_grid(sample: &khovanskii::SemigroupSample) -> String {
    let kmax = sample.kmax();
    let bmax = (1..=kmax)
        .filter_map(|k| sample.slice(k).last().copied())
        .max()
        .unwrap_or(0);
    if bmax > 60 {
        return String::new(); // too tall to be useful as text
    }
    let mut out = String::from("grid (k rightward, order b upward):\n");
    for b in (0..=bmax).rev() {
        let _ = write!(out, "  b={b:<3}|");
        for k in 1..=kmax {
            let mark = if sample.contains(k, b) { '*' } else { '.' };
            let _ = write!(out, " {mark}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "       +{}", "--".repeat(kmax));
    let _ = writeln!(
        out,
        "        {}",
        (1..=kmax).map(|k| format!("{k}")).collect::<Vec<_>>().join(" ")
    );
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", outcome.report.to_json());
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
